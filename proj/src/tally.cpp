#include "ffpat/tally.hpp"

#include "ffpat/parallel.hpp"
#include "ffpat/poly.hpp"

#include <stdexcept>

namespace ffpat {

const PatternTally& FamilyTally::at(const Pattern& p) const {
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    if (patterns[k] == p) return rows[k];
  }
  throw std::out_of_range("FamilyTally::at: unknown pattern " + p.to_string());
}

namespace {

void tally_range(const LinearFamily& fam, const PatternIndex& index, std::uint64_t begin, std::uint64_t end,
                 std::vector<PatternTally>& rows) {
  const Fq& field = fam.field();
  FqPoly dense(fam.n() + 1, 0);
  for_each_member(fam, begin, end, [&](const std::vector<std::uint32_t>& lower) {
    std::copy(lower.begin(), lower.end(), dense.begin());
    dense.back() = 1;
    const auto c = classify(field, MonicPoly(dense));
    auto& row = rows[index.index_of(c.pattern)];
    ++row.count;
    ++(c.squarefree ? row.sq : row.nsq);
  });
}

FamilyTally empty_tally(const PatternIndex& index, std::uint64_t members) {
  FamilyTally t;
  t.patterns = index.patterns();
  t.rows.assign(index.size(), {});
  t.members = members;
  return t;
}

}  // namespace

FamilyTally tally_family(const LinearFamily& fam, std::uint64_t budget, unsigned workers) {
  const std::uint64_t total = checked_size(fam, budget);
  const PatternIndex index(fam.n());
  FamilyTally out = empty_tally(index, total);
  const unsigned threads = resolve_workers(workers);
  // Fixed block count so the partition does not depend on the worker count.
  const std::uint64_t blocks = std::min<std::uint64_t>(total, 256);
  std::vector<std::vector<PatternTally>> partial(blocks, std::vector<PatternTally>(index.size()));
  FirstError errors;
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(threads))
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    std::uint64_t begin = 0, end = 0;
    block_range(total, blocks, static_cast<std::uint64_t>(b), begin, end);
    errors.guard(static_cast<std::uint64_t>(b),
                 [&] { tally_range(fam, index, begin, end, partial[static_cast<std::size_t>(b)]); });
  }
  errors.rethrow();
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < part.size(); ++k) out.rows[k] += part[k];
  }
  return out;
}

FamilyTally tally_family_serial(const LinearFamily& fam, std::uint64_t budget) {
  const std::uint64_t total = checked_size(fam, budget);
  const PatternIndex index(fam.n());
  FamilyTally out = empty_tally(index, total);
  tally_range(fam, index, 0, total, out.rows);
  return out;
}

}  // namespace ffpat
