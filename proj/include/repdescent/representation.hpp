#pragma once

#include "repdescent/group.hpp"
#include "repdescent/matrix.hpp"

#include <memory>
#include <vector>

namespace repdescent {

/// A matrix representation over Q(zeta_order), one matrix per group element,
/// acting on column vectors.
struct Representation {
  GroupPtr group;
  std::size_t dim = 0;
  unsigned order = 1;
  std::vector<Matrix> matrices;

  const Matrix& operator()(Element x) const { return matrices[x]; }
  /// Trace of every element's matrix.
  std::vector<Cyclotomic> character() const;
};

using RepPtr = std::shared_ptr<const Representation>;

/// Checks sizes, rho(1) = 1 and rho(xy) = rho(x) rho(y) for all pairs.
/// Throws ErrorCode::invalid_argument naming the first failing pair.
Representation make_representation(GroupPtr group, std::vector<Matrix> matrices);

Representation trivial_representation(GroupPtr group, unsigned order);
/// Left translation on the group-algebra basis: column y has its 1 in row xy.
Representation regular_representation(GroupPtr group, unsigned order);
/// x -> transpose(rho(x^-1))
Representation dual_rep(const Representation& rho);
/// Pointwise Kronecker product.
Representation tensor_G(const Representation& rho, const Representation& sigma);
Representation direct_sum(const Representation& rho, const Representation& sigma);
/// x -> rho(alpha(x))
Representation pullback(const Representation& rho, const Automorphism& alpha);
/// Same representation with entries viewed in Q(zeta_f).
Representation lift(const Representation& rho, unsigned f);
/// (h1, h2) -> rho(h1) (x) sigma(h2) on the direct product, lexicographic
/// element order. Entries are lifted to a common cyclotomic order.
Representation outer_tensor(const Representation& rho, const Representation& sigma);

struct Intertwiner {
  RepPtr source;
  RepPtr target;
  Matrix matrix;
};

/// T * source(x) == target(x) * T for every element.
bool is_intertwiner(const Matrix& t, const Representation& source, const Representation& target);

/// Basis of Hom_G(rho, sigma), solved on the generators and checked on every
/// element. Each basis matrix has first nonzero entry (row-major) 1.
std::vector<Intertwiner> intertwiner_basis(const RepPtr& rho, const RepPtr& sigma);

/// The c with T = c * identity, for a self-intertwiner T of an irreducible
/// rho. Throws ErrorCode::not_scalar otherwise.
Cyclotomic schur_scalar(const Matrix& t, const Representation& rho);

}  // namespace repdescent
