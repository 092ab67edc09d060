#include "ffpat/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ffpat {

bool Pattern::valid() const {
  if (counts.empty()) return false;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) total += static_cast<std::uint64_t>(i + 1) * counts[i];
  return total == counts.size();
}

unsigned Pattern::parts() const { return std::accumulate(counts.begin(), counts.end(), 0U); }

std::string Pattern::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << (i + 1) << '^' << counts[i];
  }
  return os.str();
}

Pattern Pattern::parse(const std::string& text, unsigned n) {
  Pattern p(std::vector<std::uint32_t>(n, 0));
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    const auto caret = token.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("Pattern::parse: expected i^k, got '" + token + "'");
    const unsigned long i = std::stoul(token.substr(0, caret));
    const unsigned long k = std::stoul(token.substr(caret + 1));
    if (i < 1 || i > n) throw std::invalid_argument("Pattern::parse: part size out of range in '" + token + "'");
    p.counts[i - 1] += static_cast<std::uint32_t>(k);
  }
  if (!p.valid()) throw std::invalid_argument("Pattern::parse: '" + text + "' is not a pattern of degree " + std::to_string(n));
  return p;
}

bool Pattern::operator<(const Pattern& o) const {
  return std::lexicographical_compare(counts.rbegin(), counts.rend(), o.counts.rbegin(), o.counts.rend());
}

namespace {

void enumerate_rec(unsigned part, unsigned remaining, std::vector<std::uint32_t>& counts, std::vector<Pattern>& out) {
  if (part == 1) {
    counts[0] = remaining;
    out.emplace_back(counts);
    return;
  }
  for (unsigned k = 0; k * part <= remaining; ++k) {
    counts[part - 1] = k;
    enumerate_rec(part - 1, remaining - k * part, counts, out);
  }
  counts[part - 1] = 0;
}

}  // namespace

std::vector<Pattern> enumerate_patterns(unsigned n) {
  if (n < 1 || n > 40) throw std::invalid_argument("enumerate_patterns: n must be in [1, 40]");
  std::vector<Pattern> out;
  std::vector<std::uint32_t> counts(n, 0);
  enumerate_rec(n, n, counts, out);
  return out;
}

BigInt pattern_weight(const Pattern& lambda) {
  if (!lambda.valid()) throw std::invalid_argument("pattern_weight: invalid pattern");
  BigInt w = 1;
  for (unsigned i = 1; i <= lambda.n(); ++i) {
    const unsigned k = lambda[i];
    w *= ipow(BigInt(i), k) * factorial(k);
  }
  return w;
}

PatternStats pattern_stats(const Pattern& lambda) {
  PatternStats st;
  st.pattern = lambda;
  st.w = pattern_weight(lambda);
  st.t = Rational(BigInt(1), st.w);
  st.perm_count = factorial(lambda.n()) / st.w;
  return st;
}

Pattern cycle_type(std::span<const unsigned> perm) {
  const std::size_t n = perm.size();
  std::vector<std::uint32_t> counts(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    ++counts[len - 1];
  }
  return Pattern(std::move(counts));
}

std::map<Pattern, std::uint64_t> symmetric_group_census(unsigned n) {
  if (n < 1 || n > 8) throw std::invalid_argument("symmetric_group_census: n must be in [1, 8]");
  std::map<Pattern, std::uint64_t> census;
  for (const auto& p : enumerate_patterns(n)) census[p] = 0;
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  do {
    ++census[cycle_type(perm)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return census;
}

std::size_t PatternIndex::Hash::operator()(const std::vector<std::uint32_t>& v) const {
  std::size_t h = 1469598103934665603ULL;
  for (const auto x : v) h = (h ^ x) * 1099511628211ULL;
  return h;
}

PatternIndex::PatternIndex(unsigned n) : n_(n), patterns_(enumerate_patterns(n)) {
  for (std::size_t k = 0; k < patterns_.size(); ++k) lookup_.emplace(patterns_[k].counts, k);
}

std::size_t PatternIndex::index_of(const std::vector<std::uint32_t>& counts) const {
  const auto it = lookup_.find(counts);
  if (it == lookup_.end()) throw std::invalid_argument("PatternIndex: not a pattern of degree " + std::to_string(n_));
  return it->second;
}

}  // namespace ffpat
