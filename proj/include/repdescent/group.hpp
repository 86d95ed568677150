#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace repdescent {

/// Group elements are opaque indices into the multiplication table.
using Element = std::size_t;
using Table = std::vector<std::vector<Element>>;

struct ConjugacyClasses {
  std::vector<std::size_t> class_of;
  /// Least element of each class. Class 0 holds the identity; the rest are
  /// sorted by size, then by least element.
  std::vector<Element> representatives;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<Element>> members;
  std::size_t count() const { return representatives.size(); }
};

/// A finite group given by a validated multiplication table.
class FiniteGroup {
 public:
  /// Validates the table: square, entries in range, an identity, inverses,
  /// associativity. Throws ErrorCode::not_a_group naming the failing item.
  static FiniteGroup from_table(Table table, std::string name = {});
  /// Closes the generators under composition. Permutations are image lists
  /// on {0..degree-1}; the product xy is "apply y, then x". Element 0 is the
  /// identity, the rest follow breadth-first discovery order.
  static FiniteGroup from_permutations(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators,
                                       std::string name = {});

  std::size_t order() const { return table_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverses_[a]; }
  Element power(Element a, long k) const;
  /// b^-1 a b
  Element conjugate(Element a, Element b) const { return mul(inv(b), mul(a, b)); }
  const Table& table() const { return table_; }
  const std::string& name() const { return name_; }

  std::size_t element_order(Element a) const { return element_orders_[a]; }
  unsigned exponent() const { return exponent_; }
  bool is_abelian() const;
  const ConjugacyClasses& classes() const { return classes_; }
  /// Deterministic small generating set: greedily adds the least element not
  /// yet generated.
  const std::vector<Element>& generators() const { return generators_; }
  /// Subgroup generated by the given elements, sorted.
  std::vector<Element> generated_subgroup(const std::vector<Element>& gens) const;

 private:
  FiniteGroup() = default;
  void finish();

  Table table_;
  std::string name_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
  std::vector<std::size_t> element_orders_;
  unsigned exponent_ = 1;
  ConjugacyClasses classes_;
  std::vector<Element> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/// Direct product with lexicographic element order: (a, b) -> a*|H2| + b.
FiniteGroup direct_product(const FiniteGroup& h1, const FiniteGroup& h2);

/// Built-in groups used by tests and fixtures.
namespace builtin {
FiniteGroup cyclic(std::size_t n);
FiniteGroup klein_four();
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
/// Symmetries of the regular n-gon, order 2n.
FiniteGroup dihedral(std::size_t n);
FiniteGroup quaternion();
}  // namespace builtin

/// A group automorphism as a permutation of element indices.
struct Automorphism {
  std::vector<Element> image;

  Element operator()(Element x) const { return image[x]; }
  bool is_identity() const;
  Automorphism inverse() const;
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

/// (a o b)(x) = a(b(x))
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism identity_automorphism(const FiniteGroup& g);
/// Checks bijectivity and the homomorphism property; throws on failure.
Automorphism make_automorphism(const FiniteGroup& g, std::vector<Element> image);
/// iota(beta): x -> beta^-1 x beta.
Automorphism inner(const FiniteGroup& g, Element beta);

constexpr std::size_t kDefaultAutBound = 24;

/// Every automorphism of g, sorted by image vector. Throws
/// ErrorCode::bound_exceeded when |G| > bound.
std::vector<Automorphism> automorphism_group(const FiniteGroup& g, std::size_t bound = kDefaultAutBound);

}  // namespace repdescent
