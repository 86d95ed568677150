#include "repdescent/descent.hpp"

#include "repdescent/error.hpp"

#include <algorithm>

namespace repdescent {

namespace {

std::vector<RepPtr> dual_models(const CharacterTable& table) {
  std::vector<RepPtr> out;
  for (std::size_t s = 0; s < table.size(); ++s) {
    out.push_back(std::make_shared<const Representation>(dual_rep(*table.model(s))));
  }
  return out;
}

using Transport = std::map<std::array<std::size_t, 2>, std::vector<std::size_t>>;

Transport transports(const CocycleDatum& d, const CharacterTable& table) {
  Transport out;
  for (const auto& [i, j] : ordered_pairs(d.size())) out[{i, j}] = char_action(d.alpha(i, j), table);
  return out;
}

void finish(CheckReport& report, bool vacuous) {
  std::sort(report.violations.begin(), report.violations.end());
  if (!report.violations.empty()) {
    report.status = CheckStatus::fail;
  } else {
    report.status = vacuous ? CheckStatus::vacuous : CheckStatus::pass;
  }
}

}  // namespace

TauMap compute_tau(const CocycleDatum& d, const CharacterTable& table) {
  const auto duals = dual_models(table);
  TauMap tau;
  for (const auto& [i, j] : ordered_pairs(d.size())) {
    const auto phi = char_action(d.alpha(i, j), table);
    auto& row = tau[{i, j}];
    for (std::size_t s = 0; s < table.size(); ++s) {
      auto source = std::make_shared<const Representation>(pullback(*duals[s], d.alpha(i, j)));
      auto basis = intertwiner_basis(source, duals[phi[s]]);
      if (basis.size() != 1) {
        throw Error(ErrorCode::corrupt, "Hom space for tau at " + format_tuple({i, j, s}) + " has dimension " +
                                            std::to_string(basis.size()));
      }
      row.push_back(std::move(basis.front().matrix));
    }
  }
  return tau;
}

TwistClass compute_twist(const CocycleDatum& d, const CharacterTable& table) {
  return compute_twist(d, table, compute_tau(d, table));
}

TwistClass compute_twist(const CocycleDatum& d, const CharacterTable& table, TauMap tau) {
  const FiniteGroup& g = *d.group();
  const auto duals = dual_models(table);
  TwistClass tw;
  tw.n = d.size();
  tw.transport = transports(d, table);
  tw.tau_normalization = kTauNormalization;
  for (const auto& [i, j, k] : ordered_triples(d.size())) {
    const Element b = d.beta(i, j, k);
    for (std::size_t s = 0; s < table.size(); ++s) {
      const std::size_t t = tw.transport.at({k, i})[s];
      const std::size_t u = tw.transport.at({j, k})[t];
      if (tw.transport.at({i, j})[u] != s) {
        throw Error(ErrorCode::corrupt, "transport does not return to its start around " + format_tuple({i, j, k}));
      }
      const Matrix composite =
          tau.at({i, j})[u] * tau.at({j, k})[t] * tau.at({k, i})[s] * (*duals[s])(g.inv(b));
      const auto c = composite.scalar_value();
      if (!c) {
        throw Error(ErrorCode::not_scalar, "triangle composite at " + format_tuple({s, i, j, k}) + " is not scalar");
      }
      if (c->is_zero()) throw Error(ErrorCode::corrupt, "triangle composite vanishes at " + format_tuple({s, i, j, k}));
      tw.scalars[{s, i, j, k}] = *c;
    }
  }
  tw.tau = std::move(tau);
  return tw;
}

CheckReport verify_twist_cocycle(const TwistClass& tw, const CocycleDatum& d, const CharacterTable& table) {
  const FiniteGroup& g = *d.group();
  const auto duals = dual_models(table);
  CheckReport report;
  if (tw.n != d.size()) throw Error(ErrorCode::invalid_argument, "twist and datum have different index sets");
  const auto& phi = tw.transport;
  const auto& tau = tw.tau;

  // d_{t,ijk} = c_{s,ijk} / e_{s,ik} with s = Phi_ik(t).
  std::map<std::array<std::size_t, 4>, Cyclotomic> dscal;
  for (const auto& [i, j, k] : ordered_triples(d.size())) {
    for (std::size_t t = 0; t < table.size(); ++t) {
      const std::size_t s = phi.at({i, k})[t];
      const auto e = (tau.at({i, k})[t] * tau.at({k, i})[s]).scalar_value();
      if (!e || e->is_zero()) {
        report.violations.push_back({"tau-inverse-pair", {t, i, k}, "tau_ik tau_ki is not a nonzero scalar"});
        continue;
      }
      dscal[{t, i, j, k}] = tw.scalars.at({s, i, j, k}) / *e;
    }
  }
  if (!report.violations.empty()) {
    finish(report, false);
    return report;
  }

  for (const auto& [i, j, k, l] : ordered_quadruples(d.size())) {
    const Element b_ijk = d.beta(i, j, k), b_ikl = d.beta(i, k, l), b_ijl = d.beta(i, j, l),
                  b_jkl = d.beta(j, k, l);
    const Element arg_a = d.alpha(i, l)(g.mul(b_ijk, b_ikl));
    const Element arg_b = d.alpha(i, l)(g.mul(d.alpha(i, j).inverse()(b_jkl), b_ijl));
    for (std::size_t w = 0; w < table.size(); ++w) {
      ++report.checked;
      const std::size_t w1 = phi.at({k, l})[w];
      const std::size_t w2 = phi.at({j, k})[w1];
      const Matrix x = tau.at({i, j})[w2] * tau.at({j, k})[w1] * tau.at({k, l})[w];
      const Matrix direct_a = tau.at({i, l})[w] * (*duals[w])(arg_a);
      const Matrix direct_b = tau.at({i, l})[w] * (*duals[w])(arg_b);
      const Cyclotomic scalar_a = dscal.at({w1, i, j, k}) * dscal.at({w, i, k, l});
      const Cyclotomic scalar_b = dscal.at({w, j, k, l}) * dscal.at({w, i, j, l});
      if (!(x == direct_a * scalar_a)) {
        report.violations.push_back(
            {"twist-bracketing-a", {w, i, j, k, l}, "(tau_ij tau_jk) tau_kl differs from the recorded scalars"});
      }
      if (!(x == direct_b * scalar_b)) {
        report.violations.push_back(
            {"twist-bracketing-b", {w, i, j, k, l}, "tau_ij (tau_jk tau_kl) differs from the recorded scalars"});
      }
      if (!(scalar_a == scalar_b)) {
        report.violations.push_back({"twist-cocycle", {w, i, j, k, l},
                                     "d_{w',ijk} d_{w,ikl} = " + scalar_a.str() + " but d_{w,jkl} d_{w,ijl} = " +
                                         scalar_b.str()});
      }
    }
  }
  finish(report, d.size() < 4);
  return report;
}

namespace {

Matrix basis_permutation(const std::vector<Element>& image, unsigned order) {
  Matrix m(image.size(), image.size(), order);
  for (Element x = 0; x < image.size(); ++x) m(image[x], x) = Cyclotomic::one(order);
  return m;
}

}  // namespace

CheckReport verify_gerbe_side(const CocycleDatum& d, unsigned order) {
  const FiniteGroup& g = *d.group();
  const auto regular = regular_representation(d.group(), order);
  CheckReport report;
  std::map<std::array<std::size_t, 2>, Matrix> delta;
  for (const auto& [i, j] : ordered_pairs(d.size())) {
    Matrix m = basis_permutation(d.alpha(i, j).image, order);
    ++report.checked;
    bool ok = true;
    for (auto x : g.generators()) ok = ok && m * regular(x) == regular(d.alpha(i, j)(x)) * m;
    if (!ok) report.violations.push_back({"delta-intertwines", {i, j}, "delta_ij is not an intertwiner"});
    delta.emplace(std::array<std::size_t, 2>{i, j}, std::move(m));
  }
  for (const auto& [i, j, k] : ordered_triples(d.size())) {
    ++report.checked;
    const Matrix composite = delta.at({k, i}) * delta.at({j, k}) * delta.at({i, j});
    const Matrix expected = basis_permutation(inner(g, d.beta(i, j, k)).image, order);
    if (!(composite == expected)) {
      report.violations.push_back({"gerbe-twist", {i, j, k},
                                   "delta_ki delta_jk delta_ij differs from the action of beta_ijk^-1 by "
                                   "conjugation"});
    }
  }
  finish(report, d.size() < 3);
  return report;
}

}  // namespace repdescent
