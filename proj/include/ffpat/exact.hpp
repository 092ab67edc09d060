#ifndef FFPAT_EXACT_HPP
#define FFPAT_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ffpat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt ipow(const BigInt& base, unsigned exp);

/// Canonical "num/den" rendering; the denominator is always written, even when it is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

Rational abs(const Rational& r);

/// Value of the form a * sqrt(q) + b with a, b >= 0 exact rationals.
struct SqrtBound {
  Rational sqrt_coeff;
  Rational rational_part;

  /// Renders as "a*sqrt(q)+b" with both rationals in canonical form.
  std::string to_string() const;
};

/// Exact test of value <= a * sqrt(q) + b.
///
/// When value <= b the test passes outright; otherwise both sides are
/// nonnegative and we compare (value - b)^2 <= a^2 * q.
bool within_sqrt_bound(const Rational& value, const SqrtBound& bound, std::uint64_t q);

}  // namespace ffpat

#endif  // FFPAT_EXACT_HPP
