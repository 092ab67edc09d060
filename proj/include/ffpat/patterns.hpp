#ifndef FFPAT_PATTERNS_HPP
#define FFPAT_PATTERNS_HPP

// Factorization / cycle patterns 1^{l_1} 2^{l_2} ... n^{l_n} and their weights.

#include "ffpat/exact.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ffpat {

struct Pattern {
  /// counts[i-1] is the number of parts (factors, cycles) of size i; size n.
  std::vector<std::uint32_t> counts;

  Pattern() = default;
  explicit Pattern(std::vector<std::uint32_t> c) : counts(std::move(c)) {}

  unsigned n() const { return static_cast<unsigned>(counts.size()); }
  std::uint32_t operator[](unsigned i) const { return i >= 1 && i <= counts.size() ? counts[i - 1] : 0; }
  /// sum i * counts[i-1] == n.
  bool valid() const;
  /// Number of parts, lambda_1 + ... + lambda_n.
  unsigned parts() const;

  /// Canonical "1^a 2^b ..." with zero exponents omitted.
  std::string to_string() const;
  /// Parses the canonical form for degree n.
  static Pattern parse(const std::string& text, unsigned n);

  bool operator==(const Pattern&) const = default;
  /// Lexicographic on (lambda_n, ..., lambda_1); the enumeration order.
  bool operator<(const Pattern& o) const;
};

/// All patterns of degree n (1 <= n <= 40) in canonical order.
std::vector<Pattern> enumerate_patterns(unsigned n);

struct PatternStats {
  Pattern pattern;
  BigInt w;
  Rational t;
  BigInt perm_count;
};

/// w = prod i^{lambda_i} lambda_i!, t = 1/w, perm_count = n!/w.
BigInt pattern_weight(const Pattern& lambda);
PatternStats pattern_stats(const Pattern& lambda);

/// Cycle type of a permutation of {0, ..., n-1}.
Pattern cycle_type(std::span<const unsigned> perm);

/// Exact cycle-type counts over all n! permutations; n <= 8.
std::map<Pattern, std::uint64_t> symmetric_group_census(unsigned n);

/// Dense numbering of the patterns of one degree, in canonical order.
class PatternIndex {
 public:
  explicit PatternIndex(unsigned n);

  unsigned n() const { return n_; }
  std::size_t size() const { return patterns_.size(); }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const Pattern& at(std::size_t k) const { return patterns_.at(k); }
  std::size_t index_of(const std::vector<std::uint32_t>& counts) const;
  std::size_t index_of(const Pattern& p) const { return index_of(p.counts); }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const;
  };
  unsigned n_;
  std::vector<Pattern> patterns_;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, Hash> lookup_;
};

}  // namespace ffpat

#endif  // FFPAT_PATTERNS_HPP
