#pragma once

#include "repdescent/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace repdescent {

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first. Monic of degree euler_phi(n).
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// An element of Q(zeta_e), stored as its coordinates in the power basis
/// 1, zeta, ..., zeta^(phi(e)-1). Every operation leaves the vector reduced
/// modulo the e-th cyclotomic polynomial, so equality is coefficient-wise.
///
/// Elements of different orders never mix; arithmetic across orders throws
/// ErrorCode::order_mismatch. Use lift() to move an element into a field that
/// contains it.
class Cyclotomic {
 public:
  /// Zero of Q = Q(zeta_1).
  Cyclotomic() : Cyclotomic(1) {}
  /// Zero of Q(zeta_e).
  explicit Cyclotomic(unsigned e);
  Cyclotomic(unsigned e, const Rational& q);
  /// Takes an arbitrary-length coefficient vector in powers of zeta_e and
  /// reduces it.
  Cyclotomic(unsigned e, std::vector<Rational> coeffs);

  static Cyclotomic zero(unsigned e) { return Cyclotomic(e); }
  static Cyclotomic one(unsigned e) { return Cyclotomic(e, Rational(1)); }
  /// zeta_e^k for any integer k.
  static Cyclotomic root(unsigned e, long k);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  /// Same number viewed in Q(zeta_f); requires order() | f.
  Cyclotomic lift(unsigned f) const;

  /// Image under zeta -> zeta^-1 (complex conjugation).
  Cyclotomic conj() const;
  /// Image under zeta -> zeta^k, gcd(k, e) = 1.
  Cyclotomic galois(long k) const;
  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  Cyclotomic& operator*=(const Rational& q);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  /// Lexicographic on (order, coefficient vector). Arbitrary but total and
  /// deterministic; used to order character tables.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  /// e.g. "1 + 2*z - 1/2*z^3" with z = zeta_e; "0" for zero.
  std::string str() const;

 private:
  void check_order(const Cyclotomic& o) const;

  unsigned order_;
  std::vector<Rational> coeffs_;
};

/// Multiplies a product polynomial into canonical form. Exposed for tests.
std::vector<Rational> reduce_mod_cyclotomic(unsigned e, std::vector<Rational> poly);

}  // namespace repdescent
