#include "repdescent/rational.hpp"

#include "repdescent/error.hpp"

#include <climits>

namespace repdescent {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::invalid_argument, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::invalid_argument, "not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return Rational(q);
}

bool Rational::fits_long() const {
  return value_.get_num().fits_slong_p() && value_.get_den().fits_slong_p();
}

long Rational::to_long() const { return value_.get_num().get_si(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace repdescent
