#ifndef FFPAT_POLY_HPP
#define FFPAT_POLY_HPP

// Univariate polynomials over F_q and factorization-pattern extraction.

#include "ffpat/dense_poly.hpp"
#include "ffpat/fq.hpp"
#include "ffpat/patterns.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ffpat {

/// Dense polynomial over F_q, low degree first, trimmed.
using FqPoly = dense::Poly<Fq>;

/// Monic polynomial T^n + c_{n-1} T^{n-1} + ... + c_0 over F_q.
class MonicPoly {
 public:
  MonicPoly() : dense_{1} {}
  /// From the dense coefficient vector; the last entry must be 1.
  explicit MonicPoly(FqPoly dense);
  /// From the non-leading coefficients c_0, ..., c_{n-1}.
  static MonicPoly from_lower(const std::vector<std::uint32_t>& lower);

  unsigned degree() const { return static_cast<unsigned>(dense_.size() - 1); }
  /// Coefficient of T^k (k <= degree).
  std::uint32_t coeff(unsigned k) const { return dense_.at(k); }
  const FqPoly& dense() const { return dense_; }

  bool operator==(const MonicPoly&) const = default;
  bool operator<(const MonicPoly& o) const;

 private:
  FqPoly dense_;
};

MonicPoly poly_mul(const Fq& field, const MonicPoly& a, const MonicPoly& b);
MonicPoly poly_gcd(const Fq& field, const FqPoly& a, const FqPoly& b);
FqPoly derivative(const Fq& field, const FqPoly& a);
std::uint32_t poly_eval(const Fq& field, const FqPoly& a, std::uint32_t x);

/// Monic g with g(T^p) = f when f' = 0.
FqPoly pth_root(const Fq& field, const FqPoly& f);

struct SquarefreeFactor {
  MonicPoly factor;
  unsigned multiplicity = 0;
};

/// f = prod g_k^k with g_k square-free and pairwise coprime; sorted by multiplicity.
std::vector<SquarefreeFactor> squarefree_decompose(const Fq& field, const MonicPoly& f);

/// counts[d] = number of irreducible factors of degree d of a square-free monic g.
std::vector<unsigned> distinct_degree_counts(const Fq& field, const MonicPoly& g);

struct Classification {
  Pattern pattern;
  bool squarefree = false;
};

/// Pattern and square-freeness in one pass.
Classification classify(const Fq& field, const MonicPoly& f);
Pattern factor_pattern(const Fq& field, const MonicPoly& f);
bool is_squarefree(const Fq& field, const MonicPoly& f);

/// Resultant over F_q of two polynomials (zero if either is zero).
std::uint32_t resultant(const Fq& field, const FqPoly& a, const FqPoly& b);
/// (-1)^{n(n-1)/2} Res(f, f').
std::uint32_t discriminant(const Fq& field, const MonicPoly& f);

/// Integer code sum c_k q^k of the non-leading coefficients; requires q^n < 2^64.
std::uint64_t poly_code(const MonicPoly& f, std::uint32_t q);
MonicPoly poly_from_code(std::uint64_t code, unsigned n, std::uint32_t q);

std::string to_string(const MonicPoly& f);

}  // namespace ffpat

#endif  // FFPAT_POLY_HPP
