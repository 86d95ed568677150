#pragma once

#include "repdescent/cyclotomic.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace repdescent {

/// A residue modulo a prime.
struct ModularScalar {
  std::uint64_t prime = 2;
  std::uint64_t value = 0;
  friend bool operator==(const ModularScalar&, const ModularScalar&) = default;
};

bool is_prime(std::uint64_t n);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

/// Smallest prime p with p = 1 (mod e) and p > 2*sqrt(group_order).
/// Throws ErrorCode::no_valid_lift when nothing is found below `bound`.
std::uint64_t dixon_prime(unsigned e, std::size_t group_order, std::uint64_t bound = 1u << 20);

/// Smallest residue of exact multiplicative order e modulo p.
std::uint64_t root_of_unity_mod(unsigned e, std::uint64_t p);

/// Image of x under Z[zeta_e] -> F_p, zeta_e -> embedding.
std::uint64_t reduce_mod_p(const Cyclotomic& x, std::uint64_t p, std::uint64_t embedding);

/// Recovers exact character values from residues.
///
/// `values[c]` is chi(g_c) mod p and `power_map[c][j]` is the class of g_c^j
/// for 0 <= j < e. A character value is a sum of e-th roots of unity; the
/// multiplicity of zeta^k at class c is (1/e) sum_j chi(g_c^j) w^(-jk) mod p,
/// which identifies an integer in [0, chi(1)] because p > 2*sqrt(|G|).
/// Throws ErrorCode::no_valid_lift when some multiplicity is out of range or
/// the multiplicities do not sum to the degree.
std::vector<Cyclotomic> dixon_lift(std::span<const ModularScalar> values,
                                   const std::vector<std::vector<std::size_t>>& power_map, unsigned e,
                                   std::uint64_t embedding);

using ModRow = std::vector<std::uint64_t>;

/// Basis of the null space of the given rows over F_p.
std::vector<ModRow> nullspace_mod_p(std::vector<ModRow> rows, std::size_t ncols, std::uint64_t p);

}  // namespace repdescent
