#include "rational.hpp"

#include "error.hpp"

namespace drd {

Rational rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || sgn(r.get_den()) <= 0)
    throw Error(ErrorCode::ParseError, "malformed rational: " + text);
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 0) throw Error(ErrorCode::InvalidArgument, "negative digit count");
  mpz_class num = r.get_num();
  const mpz_class& den = r.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = num * scale / den;
  mpz_class whole = scaled / scale;
  mpz_class frac = scaled % scale;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace drd
