#include "repdescent/modular.hpp"

#include "repdescent/error.hpp"

#include <string>

namespace repdescent {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % p;
  while (exp) {
    if (exp & 1) result = (result * b) % p;
    b = (b * b) % p;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorCode::invalid_argument, "inverse of 0 mod p");
  return mod_pow(a, p - 2, p);
}

std::uint64_t dixon_prime(unsigned e, std::size_t group_order, std::uint64_t bound) {
  for (std::uint64_t p = e + 1; p < bound; p += e) {
    if (p * p > 4 * group_order && is_prime(p)) return p;
  }
  throw Error(ErrorCode::no_valid_lift, "no prime p = 1 mod " + std::to_string(e) + " below " +
                                            std::to_string(bound));
}

std::uint64_t root_of_unity_mod(unsigned e, std::uint64_t p) {
  if ((p - 1) % e != 0) {
    throw Error(ErrorCode::invalid_argument, "p - 1 is not divisible by " + std::to_string(e));
  }
  for (std::uint64_t w = 1; w < p; ++w) {
    if (mod_pow(w, e, p) != 1) continue;
    bool exact = true;
    for (unsigned d = 1; d < e && exact; ++d) {
      if (e % d == 0 && mod_pow(w, d, p) == 1) exact = false;
    }
    if (exact) return w;
  }
  throw Error(ErrorCode::corrupt, "no root of unity of the requested order");
}

std::uint64_t reduce_mod_p(const Cyclotomic& x, std::uint64_t p, std::uint64_t embedding) {
  const unsigned e = x.order();
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const Rational& c = x.coeffs()[k];
    if (c.is_zero()) continue;
    mpz_class num = c.raw().get_num() % static_cast<unsigned long>(p);
    if (num < 0) num += static_cast<unsigned long>(p);
    mpz_class den = c.raw().get_den() % static_cast<unsigned long>(p);
    if (den == 0) throw Error(ErrorCode::invalid_argument, "denominator divisible by p");
    const std::uint64_t term = num.get_ui() * mod_inv(den.get_ui(), p) % p;
    acc = (acc + term * mod_pow(embedding, k % e, p)) % p;
  }
  return acc;
}

std::vector<Cyclotomic> dixon_lift(std::span<const ModularScalar> values,
                                   const std::vector<std::vector<std::size_t>>& power_map, unsigned e,
                                   std::uint64_t embedding) {
  if (values.empty()) return {};
  const std::uint64_t p = values.front().prime;
  if (power_map.size() != values.size()) {
    throw Error(ErrorCode::dimension_mismatch, "dixon_lift: power map and values differ in length");
  }
  if ((p - 1) % e != 0) throw Error(ErrorCode::no_valid_lift, "dixon_lift: p is not 1 mod e");
  if (mod_pow(embedding, e, p) != 1) throw Error(ErrorCode::no_valid_lift, "dixon_lift: embedding is not an e-th root");
  for (const auto& v : values) {
    if (v.prime != p || v.value >= p) throw Error(ErrorCode::invalid_argument, "dixon_lift: inconsistent residues");
  }
  const std::size_t identity_class = power_map.front().front();
  const std::uint64_t degree = values[identity_class].value;
  if (degree == 0 || degree * degree * 4 >= p * p) {
    throw Error(ErrorCode::no_valid_lift, "dixon_lift: residue at the identity is not a degree");
  }
  const std::uint64_t inv_e = mod_inv(e % p, p);
  const std::uint64_t inv_w = mod_inv(embedding, p);
  std::vector<Cyclotomic> out;
  out.reserve(values.size());
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (power_map[c].size() != e) throw Error(ErrorCode::dimension_mismatch, "dixon_lift: power map row length");
    std::vector<Rational> coeffs(e);
    std::uint64_t total = 0;
    for (unsigned k = 0; k < e; ++k) {
      std::uint64_t acc = 0;
      for (unsigned j = 0; j < e; ++j) {
        const std::uint64_t chi = values[power_map[c][j]].value;
        acc = (acc + chi * mod_pow(inv_w, static_cast<std::uint64_t>(j) * k, p)) % p;
      }
      const std::uint64_t mult = acc * inv_e % p;
      if (mult > degree) {
        throw Error(ErrorCode::no_valid_lift, "dixon_lift: eigenvalue multiplicity out of range at class " +
                                                  std::to_string(c));
      }
      total += mult;
      coeffs[k] = Rational(static_cast<long>(mult));
    }
    if (total != degree) {
      throw Error(ErrorCode::no_valid_lift, "dixon_lift: multiplicities do not sum to the degree at class " +
                                                std::to_string(c));
    }
    Cyclotomic value(e, std::move(coeffs));
    if (reduce_mod_p(value, p, embedding) != values[c].value) {
      throw Error(ErrorCode::no_valid_lift, "dixon_lift: lift does not reproduce the residue at class " +
                                                std::to_string(c));
    }
    out.push_back(std::move(value));
  }
  return out;
}

std::vector<ModRow> nullspace_mod_p(std::vector<ModRow> rows, std::size_t ncols, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t piv = next;
    while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[next]);
    const std::uint64_t inv = mod_inv(rows[next][col], p);
    for (auto& x : rows[next]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col] % p == 0) continue;
      const std::uint64_t f = rows[r][col];
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] = (rows[r][k] + p * p - f * rows[next][k] % p) % p;
    }
    pivots.push_back(col);
    ++next;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ModRow> basis;
  for (std::size_t free = ncols; free-- > 0;) {
    if (is_pivot[free]) continue;
    ModRow v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - rows[r][free] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace repdescent
