#include "ffpat/exact.hpp"

#include <stdexcept>

namespace ffpat {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  for (unsigned k = 0; k < exp; ++k) r *= base;
  return r;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

std::string SqrtBound::to_string() const {
  return ffpat::to_string(sqrt_coeff) + "*sqrt(q)+" + ffpat::to_string(rational_part);
}

bool within_sqrt_bound(const Rational& value, const SqrtBound& bound, std::uint64_t q) {
  if (bound.sqrt_coeff < 0 || bound.rational_part < 0) {
    throw std::invalid_argument("within_sqrt_bound: coefficients must be nonnegative");
  }
  if (value <= bound.rational_part) return true;
  const Rational excess = value - bound.rational_part;
  return excess * excess <= bound.sqrt_coeff * bound.sqrt_coeff * Rational(BigInt(q));
}

}  // namespace ffpat
