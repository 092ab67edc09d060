#ifndef FFPAT_VARIETY_HPP
#define FFPAT_VARIETY_HPP

// The system R_j = S_j(Pi_1(Y(X)), ..., Pi_{n-r}(Y(X))) attached to a family
// and a pattern, its F_q-rational points, and a Jacobian-rank probe.

#include "ffpat/budget.hpp"
#include "ffpat/correspondence.hpp"
#include "ffpat/ext.hpp"
#include "ffpat/family.hpp"
#include "ffpat/tally.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ffpat {

/// e[k] = Pi_k(y) for 0 <= k <= kmax, by the recurrence for prod (1 + y_i T).
template <class F>
void elementary_symmetric_all(const F& field, std::span<const typename F::value_type> y, unsigned kmax,
                              std::vector<typename F::value_type>& e) {
  e.assign(kmax + 1, field.zero());
  e[0] = field.one();
  unsigned seen = 0;
  for (const auto& yi : y) {
    ++seen;
    for (unsigned k = std::min(seen, kmax); k >= 1; --k) e[k] = field.add(e[k], field.mul(yi, e[k - 1]));
  }
}

template <class F>
typename F::value_type elementary_symmetric(const F& field, unsigned k, std::span<const typename F::value_type> y) {
  if (k > y.size()) throw std::invalid_argument("elementary_symmetric: k exceeds the number of values");
  std::vector<typename F::value_type> e;
  elementary_symmetric_all(field, y, k, e);
  return e[k];
}

/// True iff some value repeats.
bool has_coincidence(std::span<const ExtElem> y);
/// True iff two disjoint index pairs carry equal values (y_a = y_b, y_c = y_d, {a,b} and {c,d} disjoint).
bool has_two_disjoint_pairs(std::span<const ExtElem> y);
unsigned distinct_count(std::span<const ExtElem> y);

class SymSystem {
 public:
  SymSystem(LinearFamily fam, const Tower& tower, const Pattern& lambda);

  const LinearFamily& family() const { return fam_; }
  const PatternLayout& layout() const { return layout_; }
  const Fq& base() const { return fam_.field(); }
  /// F_{q^N} with N the lcm of the window degrees.
  const ExtField& common() const { return *common_; }
  unsigned common_degree() const { return common_->degree(); }

  /// All n Y-values in the common field, through the embedded A_i entries.
  void compute_y(std::span<const std::uint32_t> x, std::span<ExtElem> y) const;
  /// Pi_1..Pi_kmax of y projected to F_q (index 0 holds Pi_0 = 1);
  /// FrobeniusFault when a value is not in F_q.
  std::vector<std::uint32_t> symmetric_values(std::span<const ExtElem> y, unsigned kmax) const;
  /// R_1(x), ..., R_m(x) in terms of the constraint rows as given.
  std::vector<std::uint32_t> eval_R(std::span<const std::uint32_t> x) const;
  /// Same test as eval_R(x) == 0, reusing caller scratch; fills y.
  bool on_variety(std::span<const std::uint32_t> x, std::vector<ExtElem>& y, std::vector<ExtElem>& e) const;
  /// (dS/dZ)(dPi/dY) at y, an m x n matrix over the common field.
  ExtMatrix jacobian(std::span<const ExtElem> y) const;

 private:
  LinearFamily fam_;
  PatternLayout layout_;
  ExtFieldPtr common_;
  // emb_a_[i][k][h] = image of A_i[k][h] in the common field.
  std::vector<ExtMatrix> emb_a_;
  // Z-coefficients of the rows as given: R_j = sum_k z_rows_[j][k-1] Pi_k + alpha_j.
  std::vector<std::vector<std::uint32_t>> z_rows_;
};

struct PointCounts {
  std::uint64_t v_total = 0;
  std::uint64_t v_eq = 0;
  std::uint64_t v_neq = 0;
  std::uint64_t a_sq = 0;
  std::uint64_t a_nsq = 0;

  /// a_sq * w(lambda) == v_neq.
  bool identity_holds(const BigInt& w) const { return BigInt(a_sq) * w == BigInt(v_neq); }
  bool operator==(const PointCounts&) const = default;
};

/// Exhaustive point count over F_q^n; a_sq and a_nsq come from the family tally.
PointCounts count_points(const SymSystem& sys, const FamilyTally& tally, std::uint64_t budget = kDefaultScanBudget,
                         unsigned workers = 0);
PointCounts count_points_serial(const SymSystem& sys, const FamilyTally& tally,
                                std::uint64_t budget = kDefaultScanBudget);

struct JacobianReport {
  /// False for p = 2, outside the rank criterion hypotheses; results are informational.
  bool in_scope = true;
  std::string scope_note;
  std::uint64_t points = 0;
  std::uint64_t full_rank = 0;
  std::uint64_t deficient = 0;
  /// Deficient points lacking two disjoint equal pairs.
  std::uint64_t counterexamples = 0;
  /// Largest number of distinct y-values seen at a deficient point.
  unsigned max_distinct_deficient = 0;
  /// First counterexamples by x index.
  std::vector<std::vector<std::uint32_t>> examples;

  bool passed() const { return counterexamples == 0; }
  bool operator==(const JacobianReport&) const = default;
};

JacobianReport jacobian_probe(const SymSystem& sys, std::uint64_t budget = kDefaultScanBudget, unsigned workers = 0);
JacobianReport jacobian_probe_serial(const SymSystem& sys, std::uint64_t budget = kDefaultScanBudget);

}  // namespace ffpat

#endif  // FFPAT_VARIETY_HPP
