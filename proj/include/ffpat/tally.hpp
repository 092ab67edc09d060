#ifndef FFPAT_TALLY_HPP
#define FFPAT_TALLY_HPP

// Exhaustive pattern tallies over the members of a family.

#include "ffpat/budget.hpp"
#include "ffpat/family.hpp"
#include "ffpat/patterns.hpp"

#include <cstdint>
#include <vector>

namespace ffpat {

struct PatternTally {
  std::uint64_t count = 0;
  std::uint64_t sq = 0;
  std::uint64_t nsq = 0;

  PatternTally& operator+=(const PatternTally& o) {
    count += o.count;
    sq += o.sq;
    nsq += o.nsq;
    return *this;
  }
  bool operator==(const PatternTally&) const = default;
};

struct FamilyTally {
  /// Canonical pattern order; rows[k] belongs to patterns[k].
  std::vector<Pattern> patterns;
  std::vector<PatternTally> rows;
  std::uint64_t members = 0;

  const PatternTally& at(const Pattern& p) const;
  bool operator==(const FamilyTally&) const = default;
};

/// OpenMP kernel; members are split into contiguous blocks, one partial tally per block.
FamilyTally tally_family(const LinearFamily& fam, std::uint64_t budget = kDefaultMemberBudget, unsigned workers = 0);
/// Single-threaded reference.
FamilyTally tally_family_serial(const LinearFamily& fam, std::uint64_t budget = kDefaultMemberBudget);

}  // namespace ffpat

#endif  // FFPAT_TALLY_HPP
