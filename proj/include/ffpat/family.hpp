#ifndef FFPAT_FAMILY_HPP
#define FFPAT_FAMILY_HPP

// Linear families of monic polynomials cut out by affine conditions on the
// coefficients a_r, ..., a_{n-1}, and the bounds attached to them.
//
// Coefficients are c_0, ..., c_{n-1} for f = T^n + c_{n-1} T^{n-1} + ... + c_0.
// The symmetric-function coordinate Z_k multiplies the coefficient of T^{n-k},
// with c_{n-k} = (-1)^k Z_k.

#include "ffpat/budget.hpp"
#include "ffpat/exact.hpp"
#include "ffpat/fq.hpp"
#include "ffpat/patterns.hpp"
#include "ffpat/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ffpat {

enum class FamilyKind { linear, prescribed, global };

std::string to_string(FamilyKind kind);

class LinearFamily {
 public:
  FamilyKind kind() const { return kind_; }
  const FqPtr& field_ptr() const { return field_; }
  const Fq& field() const { return *field_; }
  unsigned n() const { return n_; }
  unsigned m() const { return static_cast<unsigned>(pivots_.size()); }
  unsigned r() const { return r_; }

  /// Rows as given, over (a_{n-1}, ..., a_r), and the given alpha.
  const std::vector<std::vector<std::uint32_t>>& input_rows() const { return rows_; }
  const std::vector<std::uint32_t>& input_alpha() const { return alpha_; }

  /// Reduced echelon system S_j(Z) = sum_k s_rows[j][k-1] Z_k + s_alpha[j],
  /// k = 1..n-r, pivot of row j at Z_{i_j} with coefficient 1 and every
  /// entry of row j beyond i_j zero.
  const std::vector<std::vector<std::uint32_t>>& s_rows() const { return s_rows_; }
  const std::vector<std::uint32_t>& s_alpha() const { return s_alpha_; }

  const std::vector<unsigned>& pivots() const { return pivots_; }
  const BigInt& delta() const { return delta_; }
  const BigInt& d_sum() const { return d_sum_; }

  /// Worst-case ceilings (n-3)!/(n-m-3)! and m(n-2); empty when n < m + 3.
  std::optional<BigInt> delta_ceiling() const;
  BigInt d_sum_ceiling() const;

  /// q^{n-m}.
  BigInt size() const;

  /// Coefficient positions t (of c_t) left free, ascending; size n - m.
  const std::vector<unsigned>& free_positions() const { return free_; }

  /// True iff the coefficients c_0..c_{n-1} satisfy every constraint.
  bool contains(const std::vector<std::uint32_t>& lower) const;
  /// Residuals L(a_r..a_{n-1}) + alpha of the input system.
  std::vector<std::uint32_t> residuals(const std::vector<std::uint32_t>& lower) const;

  /// Fills c_0..c_{n-1} for member number idx in [0, q^{n-m}).
  ///
  /// The free coefficients are the base-q digits of idx, least significant
  /// at the lowest free position; constrained coefficients are solved.
  void member(std::uint64_t idx, std::vector<std::uint32_t>& lower) const;
  /// Solves the constrained coefficients in place from the free ones.
  void solve_constrained(std::vector<std::uint32_t>& lower) const;

  friend LinearFamily new_family(FqPtr, unsigned, unsigned, std::vector<std::vector<std::uint32_t>>,
                                 std::vector<std::uint32_t>);
  friend LinearFamily prescribed_family(FqPtr, unsigned, std::vector<unsigned>, std::vector<std::uint32_t>);
  friend LinearFamily global_family(FqPtr, unsigned);

 private:
  void normalize();

  FamilyKind kind_ = FamilyKind::linear;
  FqPtr field_;
  unsigned n_ = 0;
  unsigned r_ = 0;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::uint32_t> alpha_;
  std::vector<std::vector<std::uint32_t>> s_rows_;
  std::vector<std::uint32_t> s_alpha_;
  std::vector<unsigned> pivots_;
  BigInt delta_ = 1;
  BigInt d_sum_ = 0;
  std::vector<unsigned> free_;
  // Per row j: (coefficient position, multiplier) pairs giving c_{n-i_j} as
  // const_[j] + sum mult * c_pos over free positions.
  std::vector<std::vector<std::pair<unsigned, std::uint32_t>>> solve_terms_;
  std::vector<std::uint32_t> solve_const_;
};

/// Family {L(a_r..a_{n-1}) + alpha = 0}; rows are over (a_{n-1}, ..., a_r).
/// Requires 1 <= r <= n-1 and linearly independent rows.
LinearFamily new_family(FqPtr field, unsigned n, unsigned r, std::vector<std::vector<std::uint32_t>> rows,
                        std::vector<std::uint32_t> alpha);

/// Family {a_{i_j} = alpha_j} in the top-down numbering f = T^n + a_1 T^{n-1} + ... + a_n.
/// The pivots are exactly the indices and r = n - i_m.
LinearFamily prescribed_family(FqPtr field, unsigned n, std::vector<unsigned> indices, std::vector<std::uint32_t> alpha);

/// All q^n monic polynomials of degree n (m = 0).
LinearFamily global_family(FqPtr field, unsigned n);

/// Calls fn(lower) for members [begin, end) in order, reusing one buffer.
template <class Fn>
void for_each_member(const LinearFamily& fam, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  const std::uint32_t q = fam.field().q();
  const auto& free = fam.free_positions();
  std::vector<std::uint32_t> lower(fam.n(), 0);
  fam.member(begin, lower);
  for (std::uint64_t idx = begin;;) {
    fn(static_cast<const std::vector<std::uint32_t>&>(lower));
    if (++idx == end) break;
    for (const unsigned t : free) {
      if (++lower[t] < q) break;
      lower[t] = 0;
    }
    fam.solve_constrained(lower);
  }
}

/// Member count q^{n-m} checked against a budget.
std::uint64_t checked_size(const LinearFamily& fam, std::uint64_t budget);

struct BoundReport {
  std::string tag;
  bool applicable = false;
  std::string reason;
  /// a * sqrt(q) + b.
  SqrtBound value;
};

/// First estimate; prescribed families use the i_m window.
BoundReport bound_fp1(const LinearFamily& fam, const Pattern& lambda);
/// Second estimate; prescribed families use the i_m window.
BoundReport bound_fp2(const LinearFamily& fam, const Pattern& lambda);
/// n(n-1) q^{n-m-1}, applicable when q > n.
BoundReport bound_nonsquarefree(const LinearFamily& fam);

struct ReferenceBound {
  BigInt delta;
  BigInt d_sum;
  /// delta (D - 2) + 2, the coefficient of q^{n-l-1/2}.
  BigInt sqrt_term;
  /// 14 D^2 delta^2, the coefficient of q^{n-l-1}.
  BigInt plain_term;
  int exponent = 0;

  /// sqrt_term q^{n-l-1} sqrt(q) + plain_term q^{n-l-1}.
  SqrtBound at(std::uint32_t q) const;
};

ReferenceBound bound_reference_ci(unsigned n, unsigned l, const std::vector<unsigned>& multidegree);

/// Exact check |count - T(lambda) q^{n-m}| <= bound.
bool bound_holds(const BoundReport& bound, const BigInt& count, const Rational& expected, std::uint32_t q);

/// T(lambda) q^{n-m}.
Rational expected_count(const LinearFamily& fam, const Pattern& lambda);

}  // namespace ffpat

#endif  // FFPAT_FAMILY_HPP
