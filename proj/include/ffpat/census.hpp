#ifndef FFPAT_CENSUS_HPP
#define FFPAT_CENSUS_HPP

// Report assembly for family censuses, correspondence checks, point counts
// and bound tables, with byte-stable CSV and JSON serialization.

#include "ffpat/budget.hpp"
#include "ffpat/correspondence.hpp"
#include "ffpat/ext.hpp"
#include "ffpat/family.hpp"
#include "ffpat/tally.hpp"
#include "ffpat/variety.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ffpat {

struct LayerDescriptor {
  unsigned i = 0;
  /// h_i, low degree first.
  std::vector<std::uint32_t> modulus;
  /// theta_i in the power basis of F_{q^i}.
  std::string theta;
};

struct FamilyDescriptor {
  std::uint32_t q = 0, p = 0, s = 0;
  std::vector<std::uint32_t> g;
  FamilyKind kind = FamilyKind::linear;
  unsigned n = 0, m = 0, r = 0;
  std::vector<unsigned> pivots;
  BigInt delta, d_sum;
  std::optional<BigInt> delta_ceiling;
  BigInt d_sum_ceiling;
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::uint32_t> alpha;
  std::vector<std::vector<std::uint32_t>> s_rows;
  std::vector<std::uint32_t> s_alpha;
  std::vector<LayerDescriptor> layers;
};

FamilyDescriptor describe(const LinearFamily& fam, const Tower& tower);

struct CensusRow {
  Pattern lambda;
  PatternTally tally;
  Rational expected;
  Rational deviation;
  BoundReport fp1, fp2;
  bool fp1_pass = false;
  bool fp2_pass = false;
  /// nsq of this row against the discriminant-locus bound.
  bool discr_pass = false;
};

struct CensusReport {
  FamilyDescriptor family;
  std::vector<CensusRow> rows;
  PatternTally totals;
  Rational expected_total;
  BoundReport discr;
  bool discr_pass = false;
  /// sum of counts equals q^{n-m}.
  bool total_ok = false;
  /// sq + nsq equals count in every row.
  bool split_ok = false;

  /// False for the m = 0 census, whose deviations carry no verdict.
  bool asserted() const { return family.kind != FamilyKind::global; }
  bool passed() const;
};

CensusReport run_census(const LinearFamily& fam, const Tower& tower, std::uint64_t budget = kDefaultMemberBudget,
                        unsigned workers = 0);
CensusReport run_census(const LinearFamily& fam, std::uint64_t budget = kDefaultMemberBudget, unsigned workers = 0);

struct MembershipRow {
  Pattern lambda;
  BigInt w;
  MembershipCheck result;
};

struct CorrespondenceReport {
  FamilyDescriptor family;
  CorrespondenceCheck scan;
  std::vector<MembershipRow> rows;

  bool passed() const;
};

/// Type/pattern correspondence over all of F_q^n plus the family membership criterion for every lambda.
CorrespondenceReport run_verify(const LinearFamily& fam, const Tower& tower, std::uint64_t budget = kDefaultScanBudget,
                                unsigned workers = 0);
CorrespondenceReport run_verify(const LinearFamily& fam, std::uint64_t budget = kDefaultScanBudget,
                                unsigned workers = 0);

struct VarietyRow {
  Pattern lambda;
  BigInt w;
  unsigned common_degree = 0;
  PointCounts points;
  bool identity_pass = false;
  JacobianReport jacobian;
};

struct VarietyReport {
  FamilyDescriptor family;
  std::vector<VarietyRow> rows;

  bool passed() const;
};

VarietyReport run_variety(const LinearFamily& fam, const Tower& tower, std::uint64_t budget = kDefaultScanBudget,
                          unsigned workers = 0);
VarietyReport run_variety(const LinearFamily& fam, std::uint64_t budget = kDefaultScanBudget, unsigned workers = 0);

struct BoundsRow {
  Pattern lambda;
  Rational expected;
  BoundReport fp1, fp2;
};

struct BoundsReport {
  FamilyDescriptor family;
  std::vector<BoundsRow> rows;
  BoundReport discr;
};

BoundsReport run_bounds(const LinearFamily& fam);

std::string to_csv(const CensusReport& report);
std::string to_json(const CensusReport& report);
std::string to_csv(const CorrespondenceReport& report);
std::string to_json(const CorrespondenceReport& report);
std::string to_csv(const VarietyReport& report);
std::string to_json(const VarietyReport& report);
std::string to_csv(const BoundsReport& report);
std::string to_json(const BoundsReport& report);

}  // namespace ffpat

#endif  // FFPAT_CENSUS_HPP
