#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace repdescent {

/// Finite commutative unital ring given by addition and multiplication tables.
class FiniteCommRing {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  /// Checks every ring axiom on all pairs and triples. Throws
  /// ErrorCode::invalid_argument naming the failing axiom and elements.
  static FiniteCommRing from_tables(Table add, Table mul, std::string name = {});
  static FiniteCommRing zmod(std::size_t n);
  /// F_p[t]/(f) for monic f, coefficients lowest degree first. The element
  /// c_0 + c_1 t + ... has index c_0 + c_1 p + c_2 p^2 + ...
  static FiniteCommRing polynomial_quotient(std::size_t p, const std::vector<std::size_t>& monic);
  /// R x S with index a * |S| + b.
  static FiniteCommRing product(const FiniteCommRing& r, const FiniteCommRing& s);

  std::size_t order() const { return add_.size(); }
  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a][b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
  const Table& add_table() const { return add_; }
  const Table& mul_table() const { return mul_; }
  const std::string& name() const { return name_; }

 private:
  FiniteCommRing() = default;

  Table add_;
  Table mul_;
  std::vector<std::size_t> neg_;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;
  std::string name_;
};

using RingPtr = std::shared_ptr<const FiniteCommRing>;

struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t x) const { return image[x]; }
};

/// g o f
RingHom compose(const RingHom& g, const RingHom& f);
bool is_ring_hom(const FiniteCommRing& r, const FiniteCommRing& s, const std::vector<std::size_t>& image);

constexpr std::size_t kDefaultRingBound = 81;

/// Every unital homomorphism R -> S, sorted by image vector. Throws
/// ErrorCode::bound_exceeded when |R| or |S| exceeds the bound.
std::vector<RingHom> ring_homs(const RingPtr& r, const RingPtr& s, std::size_t bound = kDefaultRingBound);

/// R^cols modulo the row span of a rows x cols matrix.
struct PresentedModule {
  RingPtr ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> entries;

  std::size_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

PresentedModule free_module(const RingPtr& r, std::size_t rank);
/// R/(a)
PresentedModule cyclic_module(const RingPtr& r, std::size_t a);
/// Block-diagonal presentation.
PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n);
/// Presentation of M (x)_R N from the Kronecker products with identities.
PresentedModule tensor(const PresentedModule& m, const PresentedModule& n);

/// Entrywise image of the presentation under f.
PresentedModule base_change(const RingHom& f, const PresentedModule& m);

/// Number of elements of the module. Throws ErrorCode::bound_exceeded when
/// |R|^cols is above `bound`.
std::size_t module_order(const PresentedModule& m, std::size_t bound = 6561);
/// Brute-force search for an R-linear bijection.
bool modules_isomorphic(const PresentedModule& m, const PresentedModule& n, std::size_t bound = 6561);

/// A tensor functor Mod(R) -> Mod(S) recorded by what it does to the
/// endomorphisms of the rank-one free module: on_endomorphisms[r] is the
/// 1x1 matrix F(x -> r x), an element of S.
struct FunctorDatum {
  RingPtr source;
  RingPtr target;
  std::vector<std::size_t> on_endomorphisms;
};

FunctorDatum base_change_functor(const RingHom& f);
/// The ring map End(R) = R -> End(F(R)) = S. Throws
/// ErrorCode::invalid_argument when it is not additive, multiplicative and unital.
RingHom reconstruct_hom(const FunctorDatum& datum);

struct TwoPointReport {
  std::size_t p = 0;
  /// Nontrivial idempotents as (c0, c1) with e = c0 + c1 t, for (1+t)/2 then (1-t)/2.
  std::vector<std::pair<std::size_t, std::size_t>> idempotents;
  bool split_isomorphism = false;
  std::vector<long> unit_X;
  std::vector<long> unit_G;
  /// Isomorphism classes of cyclic L with L (x) L = R.
  std::size_t square_roots_of_unit = 0;
};

/// R = F_p[t]/(t^2 - 1) for an odd prime p. Throws ErrorCode::invalid_argument otherwise.
TwoPointReport two_point_example(std::size_t p);

}  // namespace repdescent
