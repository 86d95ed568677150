#include "repdescent/cyclotomic.hpp"

#include "repdescent/error.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace repdescent {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Exact integer polynomial division; divisor is monic.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

std::vector<long> compute_cyclotomic(unsigned n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "euler_phi(0)");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "cyclotomic polynomial of order 0");
  static std::map<unsigned, std::vector<long>> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<long> poly = compute_cyclotomic(n);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(n, std::move(poly)).first->second;
}

std::vector<Rational> reduce_mod_cyclotomic(unsigned e, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k].is_zero()) continue;
    const Rational c = poly[k];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) poly[k - deg + j] -= c * Rational(phi[j]);
    }
  }
  poly.resize(deg);
  return poly;
}

Cyclotomic::Cyclotomic(unsigned e) : order_(e), coeffs_(euler_phi(e)) {}

Cyclotomic::Cyclotomic(unsigned e, const Rational& q) : Cyclotomic(e) { coeffs_[0] = q; }

Cyclotomic::Cyclotomic(unsigned e, std::vector<Rational> coeffs)
    : order_(e), coeffs_(reduce_mod_cyclotomic(e, std::move(coeffs))) {}

Cyclotomic Cyclotomic::root(unsigned e, long k) {
  const long m = ((k % static_cast<long>(e)) + e) % e;
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
  c[static_cast<std::size_t>(m)] = Rational(1);
  return Cyclotomic(e, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == Rational(1); }

Cyclotomic Cyclotomic::lift(unsigned f) const {
  if (f % order_ != 0) {
    throw Error(ErrorCode::order_mismatch, "cannot lift Q(zeta_" + std::to_string(order_) +
                                               ") into Q(zeta_" + std::to_string(f) + ")");
  }
  const unsigned step = f / order_;
  std::vector<Rational> c(coeffs_.size() * step + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
  return Cyclotomic(f, std::move(c));
}

Cyclotomic Cyclotomic::galois(long k) const {
  const long e = order_;
  const long m = ((k % e) + e) % e;
  if (std::gcd(m, e) != 1 && e > 1) {
    throw Error(ErrorCode::invalid_argument, "galois exponent not coprime to the order");
  }
  std::vector<Rational> c(order_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    c[static_cast<std::size_t>((static_cast<long>(j) * m) % e)] += coeffs_[j];
  }
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::conj() const { return galois(static_cast<long>(order_) - 1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::invalid_argument, "inverse of zero");
  const std::size_t n = coeffs_.size();
  if (n == 1) return Cyclotomic(order_, Rational(1) / coeffs_[0]);
  // Column j of the augmented system is this * zeta^j; solve M x = e_0.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    const Cyclotomic col = *this * root(order_, static_cast<long>(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][n] = Rational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::corrupt, "singular multiplication matrix");
    std::swap(m[piv], m[c]);
    const Rational inv = Rational(1) / m[c][c];
    for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return Cyclotomic(order_, std::move(x));
}

void Cyclotomic::check_order(const Cyclotomic& o) const {
  if (o.order_ != order_) {
    throw Error(ErrorCode::order_mismatch, "cyclotomic order mismatch: " + std::to_string(order_) +
                                               " vs " + std::to_string(o.order_));
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_order(o);
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!o.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = reduce_mod_cyclotomic(order_, std::move(prod));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (auto c = a.coeffs_[k] <=> b.coeffs_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c < Rational(0);
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.str();
      continue;
    }
    if (mag != Rational(1)) out << mag.str() << "*";
    out << "z";
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace repdescent
