#pragma once

#include "repdescent/group.hpp"
#include "repdescent/representation.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace repdescent {

/// Element of Q(zeta_e)[G], indexed by group element.
using GroupAlgebraElement = std::vector<Cyclotomic>;

GroupAlgebraElement convolve(const FiniteGroup& g, const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Complete table of irreducible characters over Q(zeta_e), e = exp(G).
///
/// Rows are ordered with the trivial character first, then by ascending
/// degree, then by descending coefficient vectors of the values read in class
/// order. Every row has an explicit matrix model whose character equals it.
class CharacterTable {
 public:
  /// Throws ErrorCode::no_valid_lift when no prime is found or when the
  /// residues do not lift.
  static std::shared_ptr<const CharacterTable> compute(GroupPtr group, std::uint64_t prime_bound = 1u << 20);

  const GroupPtr& group() const { return group_; }
  unsigned order() const { return order_; }
  std::size_t size() const { return values_.size(); }
  std::uint64_t prime() const { return prime_; }
  std::uint64_t embedding() const { return embedding_; }

  std::size_t degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  /// chi_i at class c.
  const Cyclotomic& value(std::size_t i, std::size_t c) const { return values_[i][c]; }
  const Cyclotomic& value_at(std::size_t i, Element x) const;
  const std::vector<std::vector<Cyclotomic>>& values() const { return values_; }
  const std::vector<std::vector<std::size_t>>& power_map() const { return power_map_; }
  const RepPtr& model(std::size_t i) const { return models_[i]; }

  /// Row whose values match per-class values, if any.
  std::optional<std::size_t> find_row(const std::vector<Cyclotomic>& class_values) const;

 private:
  CharacterTable() = default;

  GroupPtr group_;
  unsigned order_ = 1;
  std::uint64_t prime_ = 0;
  std::uint64_t embedding_ = 0;
  std::vector<std::size_t> degrees_;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<std::vector<std::size_t>> power_map_;
  std::vector<RepPtr> models_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

inline TablePtr character_table(GroupPtr group) { return CharacterTable::compute(std::move(group)); }

/// Omega residues of the class sums: omega[i][c] for each simple module,
/// from common eigenvectors of the class multiplication matrices mod p.
/// Exposed so tests can compare degrees against the table.
struct ClassSumSpectrum {
  std::uint64_t prime;
  std::vector<std::vector<std::uint64_t>> omega;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<std::uint64_t>> character_residues;
};
ClassSumSpectrum class_sum_spectrum(const FiniteGroup& g, std::uint64_t prime);

/// (1/|G|) sum_c |C_c| a(c) conj(b(c)), with a, b given per class.
Cyclotomic class_inner_product(const FiniteGroup& g, const std::vector<Cyclotomic>& a,
                               const std::vector<Cyclotomic>& b);

/// Object of the center-module side: one multiplicity per irreducible.
struct MultiplicityVector {
  TablePtr table;
  std::vector<long> mults;

  friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) {
    return a.table == b.table && a.mults == b.mults;
  }
};

/// m_i = <chi_rho, chi_i>. Throws ErrorCode::invalid_argument if some m_i is
/// not a non-negative integer.
MultiplicityVector decompose(const Representation& rho, const TablePtr& table);
inline MultiplicityVector chi(const Representation& rho, const TablePtr& table) { return decompose(rho, table); }
/// Direct sum of m_i copies of each model.
Representation chi_inverse(const MultiplicityVector& m);
/// Componentwise product.
MultiplicityVector tensor_Z(const MultiplicityVector& a, const MultiplicityVector& b);
MultiplicityVector unit_Z(const TablePtr& table);
MultiplicityVector unit_G(const TablePtr& table);

/// Phi(i) = index of chi_i o alpha. Throws ErrorCode::corrupt when no row
/// matches.
std::vector<std::size_t> char_action(const Automorphism& alpha, const CharacterTable& table);

/// e_i = (d_i/|G|) sum_g conj(chi_i(g)) g.
std::vector<GroupAlgebraElement> central_idempotents(const CharacterTable& table);

}  // namespace repdescent
