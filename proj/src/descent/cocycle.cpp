#include "repdescent/descent.hpp"

#include "repdescent/error.hpp"

#include <algorithm>

namespace repdescent {

CocycleDatum::CocycleDatum(GroupPtr group, std::size_t n)
    : group_(std::move(group)),
      n_(n),
      identity_(identity_automorphism(*group_)),
      alpha_(n * n, identity_),
      beta_(n * n * n, group_->identity()) {}

void CocycleDatum::check_index(std::size_t i) const {
  if (i >= n_) throw Error(ErrorCode::invalid_argument, "index " + std::to_string(i) + " is outside the index set");
}

const Automorphism& CocycleDatum::alpha(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  return i == j ? identity_ : alpha_[i * n_ + j];
}

Element CocycleDatum::beta(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j || j == k || i == k) return group_->identity();
  return beta_[(i * n_ + j) * n_ + k];
}

void CocycleDatum::set_alpha(std::size_t i, std::size_t j, Automorphism a) {
  check_index(i);
  check_index(j);
  if (i == j) throw Error(ErrorCode::invalid_argument, "alpha_ii is fixed to the identity");
  alpha_[i * n_ + j] = make_automorphism(*group_, std::move(a.image));
}

void CocycleDatum::set_beta(std::size_t i, std::size_t j, std::size_t k, Element b) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j || j == k || i == k) throw Error(ErrorCode::invalid_argument, "beta needs pairwise distinct indices");
  if (b >= group_->order()) throw Error(ErrorCode::invalid_argument, "beta value is not a group element");
  beta_[(i * n_ + j) * n_ + k] = b;
}

CocycleDatum datum_from_extension(const RefinedCocycleDatum& refined, std::size_t n) {
  const FiniteGroup& q = *refined.Q;
  CocycleDatum d(refined.G, n);
  auto r = [&](std::size_t i, std::size_t j) { return q.mul(q.inv(i % q.order()), j % q.order()); };
  for (const auto& [i, j] : ordered_pairs(n)) d.set_alpha(i, j, refined.alpha[r(i, j)]);
  for (const auto& [i, j, k] : ordered_triples(n)) d.set_beta(i, j, k, refined.beta[r(i, j)][r(j, k)]);
  return d;
}

std::vector<std::array<std::size_t, 2>> ordered_pairs(std::size_t n) {
  std::vector<std::array<std::size_t, 2>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<std::array<std::size_t, 3>> ordered_triples(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (const auto& [i, j] : ordered_pairs(n)) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i && k != j) out.push_back({i, j, k});
    }
  }
  return out;
}

std::vector<std::array<std::size_t, 4>> ordered_quadruples(std::size_t n) {
  std::vector<std::array<std::size_t, 4>> out;
  for (const auto& [i, j, k] : ordered_triples(n)) {
    for (std::size_t l = 0; l < n; ++l) {
      if (l != i && l != j && l != k) out.push_back({i, j, k, l});
    }
  }
  return out;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::vacuous:
      return "vacuous";
  }
  return "fail";
}

namespace {

void finish(CheckReport& report, bool vacuous) {
  std::sort(report.violations.begin(), report.violations.end());
  if (!report.violations.empty()) {
    report.status = CheckStatus::fail;
  } else {
    report.status = vacuous ? CheckStatus::vacuous : CheckStatus::pass;
  }
}

}  // namespace

CheckReport verify_cocycle(const CocycleDatum& d) {
  const FiniteGroup& g = *d.group();
  CheckReport report;
  for (const auto& [i, j] : ordered_pairs(d.size())) {
    ++report.checked;
    if (!compose(d.alpha(j, i), d.alpha(i, j)).is_identity()) {
      report.violations.push_back({"normalization", {i, j}, "alpha_ji o alpha_ij is not the identity"});
    }
  }
  for (const auto& [i, j, k] : ordered_triples(d.size())) {
    ++report.checked;
    if (compose(d.alpha(j, k), d.alpha(i, j)) != compose(d.alpha(i, k), inner(g, d.beta(i, j, k)))) {
      report.violations.push_back(
          {"alpha-composition", {i, j, k}, "alpha_jk o alpha_ij != alpha_ik o iota(beta_ijk)"});
    }
  }
  for (const auto& [i, j, k, l] : ordered_quadruples(d.size())) {
    ++report.checked;
    const Element lhs = g.mul(d.alpha(i, j).inverse()(d.beta(j, k, l)), d.beta(i, j, l));
    const Element rhs = g.mul(d.beta(i, j, k), d.beta(i, k, l));
    if (lhs != rhs) {
      report.violations.push_back({"beta-associativity", {i, j, k, l},
                                   "alpha_ij^-1(beta_jkl) beta_ijl = " + std::to_string(lhs) +
                                       " but beta_ijk beta_ikl = " + std::to_string(rhs)});
    }
  }
  finish(report, d.size() < 3);
  return report;
}

Matrix mu_component(const Representation& rho, const Automorphism& alpha, Element beta) {
  const FiniteGroup& g = *rho.group;
  const Matrix m = rho(alpha(beta));
  for (Element x = 0; x < g.order(); ++x) {
    if (!(m * rho(alpha(g.conjugate(x, beta))) == rho(alpha(x)) * m)) {
      throw Error(ErrorCode::corrupt, "mu fails naturality at element " + std::to_string(x));
    }
  }
  return m;
}

std::vector<Matrix> mu(const Automorphism& alpha, Element beta, const CharacterTable& table) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < table.size(); ++i) out.push_back(mu_component(*table.model(i), alpha, beta));
  return out;
}

std::vector<Violation> mu_composition_checks(const Automorphism& alpha, Element beta, const Automorphism& alpha2,
                                             const CharacterTable& table) {
  const FiniteGroup& g = *table.group();
  std::vector<Violation> out;
  for (std::size_t s = 0; s < table.size(); ++s) {
    const Representation& rho = *table.model(s);
    const auto twisted = pullback(rho, alpha2);
    try {
      if (!(mu_component(twisted, alpha, beta) == rho(alpha2(alpha(beta))))) {
        out.push_back({"mu-whisker", {s}, "mu at rho o alpha2 differs from rho(alpha2(alpha(beta)))"});
      }
    } catch (const Error& e) {
      out.push_back({"mu-whisker", {s}, e.what()});
    }
    const Matrix m = rho(alpha(beta));
    for (Element x = 0; x < g.order(); ++x) {
      const Element y = alpha2(x);
      if (!(m * rho(alpha(g.conjugate(y, beta))) == rho(alpha(y)) * m)) {
        out.push_back({"mu-precompose", {s, x}, "rho(alpha(beta)) is not natural after alpha2"});
        break;
      }
    }
  }
  return out;
}

CheckReport tetrahedron_check(const CocycleDatum& d, const CharacterTable& table) {
  const FiniteGroup& g = *d.group();
  CheckReport report;
  for (const auto& [i, j, k, l] : ordered_quadruples(d.size())) {
    const auto& a_il = d.alpha(i, l);
    const Element b_ijk = d.beta(i, j, k), b_ikl = d.beta(i, k, l), b_ijl = d.beta(i, j, l),
                  b_jkl = d.beta(j, k, l);
    for (std::size_t s = 0; s < table.size(); ++s) {
      const Representation& rho = *table.model(s);
      ++report.checked;
      const Matrix route_a = rho(a_il(b_ikl)) * rho(d.alpha(k, l)(d.alpha(i, k)(b_ijk)));
      const Matrix route_b = rho(a_il(b_ijl)) * rho(d.alpha(j, l)(b_jkl));
      const Matrix closed_a = rho(a_il(g.mul(b_ijk, b_ikl)));
      const Matrix closed_b = rho(a_il(g.mul(d.alpha(i, j).inverse()(b_jkl), b_ijl)));
      if (!(route_a == closed_a)) {
        report.violations.push_back({"tetrahedron-route-a", {i, j, k, l, s}, "route differs from its closed form"});
      }
      if (!(route_b == closed_b)) {
        report.violations.push_back({"tetrahedron-route-b", {i, j, k, l, s}, "route differs from its closed form"});
      }
      if (!(route_a == route_b)) {
        report.violations.push_back({"tetrahedron", {i, j, k, l, s}, "the two composite mu routes differ"});
      }
    }
  }
  finish(report, d.size() < 4);
  return report;
}

namespace {

DualSpaceDatum orbits_of(std::vector<std::vector<std::size_t>> acting, std::size_t points) {
  DualSpaceDatum out;
  out.acting = std::move(acting);
  std::vector<bool> seen(points, false);
  for (std::size_t p = 0; p < points; ++p) {
    if (seen[p]) continue;
    std::vector<std::size_t> orbit{p};
    seen[p] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& perm : out.acting) {
        const std::size_t q = perm[orbit[head]];
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<std::size_t> stab;
    for (std::size_t a = 0; a < out.acting.size(); ++a) {
      if (out.acting[a][p] == p) stab.push_back(a);
    }
    out.orbits.push_back(std::move(orbit));
    out.stabilizers.push_back(std::move(stab));
  }
  return out;
}

}  // namespace

DualSpaceDatum dual_space(const RefinedCocycleDatum& refined, const CharacterTable& table) {
  std::vector<std::vector<std::size_t>> acting;
  for (const auto& a : refined.alpha) acting.push_back(char_action(a, table));
  return orbits_of(std::move(acting), table.size());
}

DualSpaceDatum dual_space(const CocycleDatum& d, const CharacterTable& table) {
  std::vector<std::size_t> id(table.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  std::vector<std::vector<std::size_t>> gens;
  for (const auto& [i, j] : ordered_pairs(d.size())) gens.push_back(char_action(d.alpha(i, j), table));
  std::vector<std::vector<std::size_t>> group{id};
  for (std::size_t head = 0; head < group.size(); ++head) {
    for (const auto& gen : gens) {
      std::vector<std::size_t> next(id.size());
      for (std::size_t p = 0; p < id.size(); ++p) next[p] = gen[group[head][p]];
      if (std::find(group.begin(), group.end(), next) == group.end()) group.push_back(std::move(next));
    }
  }
  std::sort(group.begin() + 1, group.end());
  return orbits_of(std::move(group), table.size());
}

}  // namespace repdescent
