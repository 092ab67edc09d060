#ifndef FFPAT_CORRESPONDENCE_HPP
#define FFPAT_CORRESPONDENCE_HPP

// Root coordinates x in F_q^n, the linear forms Y and the polynomial G(x, T).

#include "ffpat/budget.hpp"
#include "ffpat/ext.hpp"
#include "ffpat/patterns.hpp"
#include "ffpat/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffpat {

class LinearFamily;

struct Window {
  unsigned degree = 0;
  /// 1-based position among the windows of this degree.
  unsigned j = 0;
  /// Offset ell_{i,j}; the window covers x_{ell+1}, ..., x_{ell+degree}.
  unsigned ell = 0;
};

struct PatternLayout {
  Pattern lambda;
  /// Ordered by degree, then by j.
  std::vector<Window> windows;

  unsigned n() const { return lambda.n(); }
  /// ell_{i,j}; throws std::out_of_range when the window does not exist.
  unsigned ell(unsigned i, unsigned j) const;
  /// Degrees i with lambda_i > 0, ascending.
  std::vector<unsigned> active_degrees() const;
};

PatternLayout layout(const Pattern& lambda);

/// True iff the i cyclic shifts of the window are pairwise distinct.
bool is_cycle(std::span<const std::uint32_t> window);
bool is_type_lambda(std::span<const std::uint32_t> x, const PatternLayout& lay);

/// x number idx of F_q^n: x_1 is the least significant base-q digit.
void vector_at(std::uint64_t idx, std::uint32_t q, std::span<std::uint32_t> x);

/// Y-values of one window in its own layer: y_{ell+k+1} = sum_h A_i[k][h] x_{ell+h+1}.
void window_y(const ExtCtx& ctx, std::span<const std::uint32_t> xw, std::span<ExtElem> y);

/// G(x, T); every coefficient of every window factor must be Frobenius-fixed,
/// otherwise FrobeniusFault is raised.
MonicPoly build_G(const Tower& tower, const PatternLayout& lay, std::span<const std::uint32_t> x);

/// Number of x in F_q^n with G(x, T) = f, by exhaustive scan.
std::uint64_t fiber_count(const Tower& tower, const MonicPoly& f, const Pattern& lambda,
                          std::uint64_t budget = kDefaultScanBudget);

struct CorrespondenceCheck {
  std::uint32_t q = 0;
  unsigned n = 0;
  /// (lambda, x) pairs examined.
  std::uint64_t pairs = 0;
  /// Pairs where [pattern(G) = lambda] differs from [x of type lambda].
  std::uint64_t pattern_mismatches = 0;
  /// Square-free f in P_lambda checked for fiber size w(lambda).
  std::uint64_t squarefree_checked = 0;
  std::uint64_t fiber_mismatches = 0;
  /// Square-free polynomials outside P_lambda with a nonempty lambda-fiber.
  std::uint64_t stray_fibers = 0;
  /// Observed fiber sizes over non-square-free f in P_lambda: lambda -> size -> count.
  std::map<std::string, std::map<std::uint64_t, std::uint64_t>> nonsquarefree_fibers;
  std::vector<std::string> counterexamples;

  bool passed() const { return pattern_mismatches == 0 && fiber_mismatches == 0 && stray_fibers == 0; }
};

/// Both directions of the type/pattern correspondence and the w(lambda) fiber
/// count, exhaustively over every lambda and every x in F_q^n.
CorrespondenceCheck verify_correspondence(const Tower& tower, unsigned n, std::uint64_t budget = kDefaultScanBudget,
                             unsigned workers = 0);
CorrespondenceCheck verify_correspondence_serial(const Tower& tower, unsigned n, std::uint64_t budget = kDefaultScanBudget);

struct MembershipCheck {
  std::uint64_t type_lambda_points = 0;
  /// Type-lambda x with G(x, T) in the family.
  std::uint64_t in_family = 0;
  bool ok = true;
  std::optional<std::vector<std::uint32_t>> counterexample;
};

/// For every x of type lambda: G(x, T) in the family iff R(x) = 0.
MembershipCheck verify_membership(const LinearFamily& fam, const Tower& tower, const Pattern& lambda,
                                      std::uint64_t budget = kDefaultScanBudget);

}  // namespace ffpat

#endif  // FFPAT_CORRESPONDENCE_HPP
