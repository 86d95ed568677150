#include "repdescent/representation.hpp"

#include "repdescent/error.hpp"
#include "repdescent/linalg.hpp"
#include "repdescent/violation.hpp"

#include <numeric>

namespace repdescent {

std::vector<Cyclotomic> Representation::character() const {
  std::vector<Cyclotomic> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.push_back(m.trace());
  return out;
}

Representation make_representation(GroupPtr group, std::vector<Matrix> matrices) {
  if (!group) throw Error(ErrorCode::invalid_argument, "representation needs a group");
  const FiniteGroup& g = *group;
  if (matrices.size() != g.order()) {
    throw Error(ErrorCode::dimension_mismatch, "expected one matrix per group element");
  }
  const std::size_t dim = matrices.front().rows();
  const unsigned order = matrices.front().order();
  for (Element x = 0; x < g.order(); ++x) {
    const Matrix& m = matrices[x];
    if (m.rows() != dim || m.cols() != dim) {
      throw Error(ErrorCode::dimension_mismatch, "matrix of element " + std::to_string(x) + " has the wrong shape");
    }
    if (m.order() != order) throw Error(ErrorCode::order_mismatch, "matrices use different cyclotomic orders");
  }
  if (!matrices[g.identity()].is_identity()) {
    throw Error(ErrorCode::invalid_argument, "identity element is not sent to the identity matrix");
  }
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (!(matrices[a] * matrices[b] == matrices[g.mul(a, b)])) {
        throw Error(ErrorCode::invalid_argument, "not a homomorphism at " + format_tuple({a, b}));
      }
    }
  }
  return Representation{std::move(group), dim, order, std::move(matrices)};
}

Representation trivial_representation(GroupPtr group, unsigned order) {
  std::vector<Matrix> m(group->order(), Matrix::identity(1, order));
  return Representation{std::move(group), 1, order, std::move(m)};
}

Representation regular_representation(GroupPtr group, unsigned order) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  std::vector<Matrix> mats;
  mats.reserve(n);
  for (Element x = 0; x < n; ++x) {
    Matrix m(n, n, order);
    for (Element y = 0; y < n; ++y) m(g.mul(x, y), y) = Cyclotomic::one(order);
    mats.push_back(std::move(m));
  }
  return Representation{std::move(group), n, order, std::move(mats)};
}

Representation dual_rep(const Representation& rho) {
  const FiniteGroup& g = *rho.group;
  std::vector<Matrix> mats;
  mats.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) mats.push_back(rho(g.inv(x)).transpose());
  return Representation{rho.group, rho.dim, rho.order, std::move(mats)};
}

Representation tensor_G(const Representation& rho, const Representation& sigma) {
  if (rho.group != sigma.group && rho.group->table() != sigma.group->table()) {
    throw Error(ErrorCode::invalid_argument, "tensor product of representations of different groups");
  }
  std::vector<Matrix> mats;
  mats.reserve(rho.matrices.size());
  for (std::size_t x = 0; x < rho.matrices.size(); ++x) mats.push_back(kronecker(rho(x), sigma(x)));
  return Representation{rho.group, rho.dim * sigma.dim, rho.order, std::move(mats)};
}

Representation direct_sum(const Representation& rho, const Representation& sigma) {
  if (rho.group != sigma.group && rho.group->table() != sigma.group->table()) {
    throw Error(ErrorCode::invalid_argument, "direct sum of representations of different groups");
  }
  std::vector<Matrix> mats;
  mats.reserve(rho.matrices.size());
  for (std::size_t x = 0; x < rho.matrices.size(); ++x) mats.push_back(direct_sum(rho(x), sigma(x)));
  return Representation{rho.group, rho.dim + sigma.dim, rho.order, std::move(mats)};
}

Representation pullback(const Representation& rho, const Automorphism& alpha) {
  if (alpha.image.size() != rho.matrices.size()) {
    throw Error(ErrorCode::dimension_mismatch, "automorphism and representation live on different groups");
  }
  std::vector<Matrix> mats;
  mats.reserve(rho.matrices.size());
  for (std::size_t x = 0; x < rho.matrices.size(); ++x) mats.push_back(rho(alpha(x)));
  return Representation{rho.group, rho.dim, rho.order, std::move(mats)};
}

Representation lift(const Representation& rho, unsigned f) {
  std::vector<Matrix> mats;
  mats.reserve(rho.matrices.size());
  for (const auto& m : rho.matrices) mats.push_back(m.lift(f));
  return Representation{rho.group, rho.dim, f, std::move(mats)};
}

Representation outer_tensor(const Representation& rho, const Representation& sigma) {
  auto product = std::make_shared<const FiniteGroup>(direct_product(*rho.group, *sigma.group));
  const unsigned f = std::lcm(rho.order, sigma.order);
  const auto a = lift(rho, f), b = lift(sigma, f);
  const std::size_t n2 = sigma.group->order();
  std::vector<Matrix> mats;
  mats.reserve(product->order());
  for (Element x = 0; x < product->order(); ++x) mats.push_back(kronecker(a(x / n2), b(x % n2)));
  return Representation{std::move(product), rho.dim * sigma.dim, f, std::move(mats)};
}

bool is_intertwiner(const Matrix& t, const Representation& source, const Representation& target) {
  if (t.rows() != target.dim || t.cols() != source.dim) return false;
  for (std::size_t x = 0; x < source.matrices.size(); ++x) {
    if (!(t * source(x) == target(x) * t)) return false;
  }
  return true;
}

std::vector<Intertwiner> intertwiner_basis(const RepPtr& rho, const RepPtr& sigma) {
  if (rho->order != sigma->order) throw Error(ErrorCode::order_mismatch, "representations over different fields");
  const FiniteGroup& g = *rho->group;
  std::vector<std::pair<Matrix, Matrix>> constraints{{(*rho)(g.identity()), (*sigma)(g.identity())}};
  for (auto x : g.generators()) constraints.emplace_back((*rho)(x), (*sigma)(x));
  std::vector<Intertwiner> out;
  for (auto& t : solve_sylvester(constraints)) {
    if (!is_intertwiner(t, *rho, *sigma)) {
      throw Error(ErrorCode::corrupt, "solution on generators fails on the whole group");
    }
    out.push_back(Intertwiner{rho, sigma, std::move(t)});
  }
  return out;
}

Cyclotomic schur_scalar(const Matrix& t, const Representation& rho) {
  if (t.rows() != rho.dim || t.cols() != rho.dim) {
    throw Error(ErrorCode::dimension_mismatch, "self-intertwiner has the wrong shape");
  }
  auto c = t.scalar_value();
  if (!c) throw Error(ErrorCode::not_scalar, "matrix is not a scalar multiple of the identity");
  return *c;
}

}  // namespace repdescent
