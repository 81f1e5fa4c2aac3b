// rational.cpp

#include "amspec/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace amspec {

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw std::domain_error("rational_pow: zero base with negative exponent");
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(q), k);
  BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(q), k);
  if (e < 0) num.swap(den);
  return Rational(num, den);
}

BigInt integer_kth_root(const BigInt& v, unsigned k) {
  if (v < 0) throw std::domain_error("integer_kth_root: negative argument");
  if (k == 0) throw std::domain_error("integer_kth_root: zeroth root");
  if (v == 0 || v == 1 || k == 1) return v;
  // Bisection on r^k <= v; the bit length of v bounds the root from above.
  BigInt lo = 1;
  BigInt hi = BigInt(1) << (boost::multiprecision::msb(v) / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, k) <= v)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::optional<Rational> exact_kth_root(const Rational& q, unsigned k) {
  if (q < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt rn = integer_kth_root(num, k);
  if (boost::multiprecision::pow(rn, k) != num) return std::nullopt;
  const BigInt rd = integer_kth_root(den, k);
  if (boost::multiprecision::pow(rd, k) != den) return std::nullopt;
  return Rational(rn, rd);
}

namespace {

// Strict base-10 integer. BigInt's own string constructor reads a leading 0
// as octal, so digit strings must be normalized before they reach it.
BigInt decimal_bigint(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
    negative = text[pos++] == '-';
  if (pos >= text.size()) throw std::invalid_argument("bad");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad");
  while (pos + 1 < text.size() && text[pos] == '0') ++pos;
  BigInt v(text.substr(pos));
  return negative ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      const BigInt num = decimal_bigint(text.substr(0, slash));
      const BigInt den = decimal_bigint(text.substr(slash + 1));
      return Rational(num, den);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
    }
  }
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos) return Rational(decimal_bigint(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad");
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(decimal_bigint(digits), den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: malformed number '" + text + "'");
  }
}

std::string format_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [1/2, 1)
  // 53 doublings make the mantissa integral.
  for (int i = 0; i < 53 && mant != std::floor(mant); ++i) {
    mant *= 2.0;
    --exp;
  }
  BigInt m(static_cast<long long>(mant));
  Rational r(m);
  if (exp > 0)
    r *= rational_pow(Rational(2), exp);
  else if (exp < 0)
    r /= rational_pow(Rational(2), -exp);
  return r;
}

}  // namespace amspec
