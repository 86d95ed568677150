#include "doctest.h"

#include "repdescent/cyclotomic.hpp"
#include "repdescent/error.hpp"
#include "repdescent/linalg.hpp"
#include "repdescent/matrix.hpp"
#include "repdescent/modular.hpp"

using namespace repdescent;

namespace {

Cyclotomic z(unsigned e, long k = 1) { return Cyclotomic::root(e, k); }
Cyclotomic q(unsigned e, long n, long d = 1) { return Cyclotomic(e, Rational(n, d)); }

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(2, 4);
  CHECK(a.numerator() == "1");
  CHECK(a.denominator() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("products in Q(zeta_3)") {
  // (1 + z)(1 + z^2) = 2 + z + z^2 = 1
  CHECK((q(3, 1) + z(3)) * (q(3, 1) + z(3, 2)) == Cyclotomic::one(3));
  CHECK(z(3) + z(3, 2) == q(3, -1));
  CHECK(z(3, 3) == Cyclotomic::one(3));
  CHECK(z(3, -1) == z(3, 2));
  CHECK(z(4, 2) == q(4, -1));
}

TEST_CASE("inverse, conjugation and galois action") {
  const auto x = q(3, 1) + z(3);
  CHECK(x.inverse() == q(3, 1) + z(3, 2));
  CHECK(x * x.inverse() == Cyclotomic::one(3));
  CHECK(z(5).conj() == z(5, 4));
  CHECK(z(8).galois(3) == z(8, 3));
  CHECK_THROWS_AS(Cyclotomic::zero(3).inverse(), Error);
  CHECK((q(7, 2) + z(7, 3)) / (q(7, 2) + z(7, 3)) == Cyclotomic::one(7));
}

TEST_CASE("lift between orders") {
  CHECK(q(2, -1).lift(4) == z(4, 2));
  CHECK(z(3).lift(6) == z(6, 2));
  CHECK(z(2).lift(6) == z(6, 3));
  CHECK_THROWS_AS(z(4).lift(6), Error);
}

TEST_CASE("mixed orders are rejected") {
  try {
    (void)(z(3) + z(4));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::order_mismatch);
  }
}

TEST_CASE("rendering") {
  CHECK(Cyclotomic::zero(4).str() == "0");
  CHECK((q(4, 1) - q(4, 1, 2) * z(4)).str() == "1 - 1/2*z");
}

TEST_CASE("matrix inverse and kronecker product") {
  Matrix a(2, 2, {q(3, 1), z(3), q(3, 0), q(3, 2)});
  CHECK(a * a.inverse() == Matrix::identity(2, 3));
  CHECK(a.inverse() * a == Matrix::identity(2, 3));
  Matrix s(2, 2, {q(3, 1), q(3, 1), q(3, 1), q(3, 1)});
  CHECK_THROWS_AS(s.inverse(), Error);
  const auto k = kronecker(a, Matrix::identity(3, 3));
  CHECK(k.rows() == 6);
  CHECK(k.trace() == a.trace() * q(3, 3));
  const auto d = direct_sum(a, Matrix::scalar(1, z(3)));
  CHECK(d.rows() == 3);
  CHECK(d(2, 2) == z(3));
  CHECK(d(0, 2).is_zero());
  CHECK(Matrix::scalar(3, z(3)).scalar_value() == z(3));
  CHECK(!a.scalar_value());
}

TEST_CASE("row reduction and nullspace") {
  std::vector<Vector> rows{{q(1, 1), q(1, 2), q(1, 3)}, {q(1, 2), q(1, 4), q(1, 6)}};
  const auto ech = row_reduce(rows, 3, 1);
  CHECK(ech.rows.size() == 1);
  CHECK(ech.pivots == std::vector<std::size_t>{0});
  const auto ns = nullspace(rows, 3, 1);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) {
    CHECK((v[0] + q(1, 2) * v[1] + q(1, 3) * v[2]).is_zero());
  }
  const auto coords = echelon_coordinates(ech, {q(1, 2), q(1, 4), q(1, 6)});
  REQUIRE(coords);
  CHECK((*coords)[0] == q(1, 2));
  CHECK(!echelon_coordinates(ech, {q(1, 1), q(1, 0), q(1, 0)}));
}

TEST_CASE("sylvester solver finds the commutant") {
  Matrix swap(2, 2, {q(1, 0), q(1, 1), q(1, 1), q(1, 0)});
  std::vector<std::pair<Matrix, Matrix>> c{{swap, swap}};
  const auto basis = solve_sylvester(c);
  REQUIRE(basis.size() == 2);
  for (const auto& t : basis) {
    CHECK(t * swap == swap * t);
    CHECK(t.first_nonzero()->is_one());
  }
  Matrix neg = Matrix::scalar(1, q(1, -1));
  Matrix one = Matrix::scalar(1, q(1, 1));
  std::vector<std::pair<Matrix, Matrix>> none{{one, neg}};
  CHECK(solve_sylvester(none).empty());
}

TEST_CASE("dixon primes") {
  CHECK(dixon_prime(2, 2) == 3);
  CHECK(dixon_prime(3, 3) == 7);
  CHECK(dixon_prime(4, 4) == 5);
  CHECK(dixon_prime(6, 6) == 7);
  CHECK(dixon_prime(4, 8) == 13);
  CHECK(dixon_prime(6, 12) == 7);
  CHECK(root_of_unity_mod(3, 7) == 2);
  CHECK(mod_pow(2, 3, 7) == 1);
  CHECK(mod_inv(3, 7) == 5);
}

TEST_CASE("dixon lift of a faithful C3 character") {
  // classes: identity, g, g^2; chi(g) = zeta -> 2 mod 7
  const std::vector<ModularScalar> values{{7, 1}, {7, 2}, {7, 4}};
  const std::vector<std::vector<std::size_t>> power{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  const auto lifted = dixon_lift(values, power, 3, 2);
  REQUIRE(lifted.size() == 3);
  CHECK(lifted[0] == Cyclotomic::one(3));
  CHECK(lifted[1] == z(3));
  CHECK(lifted[2] == z(3, 2));
  for (std::size_t c = 0; c < 3; ++c) CHECK(reduce_mod_p(lifted[c], 7, 2) == values[c].value);
}

TEST_CASE("dixon lift rejects inconsistent residues") {
  const std::vector<ModularScalar> values{{7, 1}, {7, 3}, {7, 4}};
  const std::vector<std::vector<std::size_t>> power{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  CHECK_THROWS_AS(dixon_lift(values, power, 3, 2), Error);
}

TEST_CASE("nullspace mod p") {
  const std::vector<ModRow> rows{{1, 2, 3}, {2, 4, 6}};
  const auto ns = nullspace_mod_p(rows, 3, 7);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK((v[0] + 2 * v[1] + 3 * v[2]) % 7 == 0);
}
