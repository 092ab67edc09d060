#ifndef FFPAT_CONFIG_HPP
#define FFPAT_CONFIG_HPP

// Flat run configuration:
//
//   [field]
//   p = 7
//   s = 1
//
//   [family]
//   mode = linear            # linear | prescribed | global
//   n = 6
//   r = 3                    # linear mode
//   row = 0, 0, 1            # one line per constraint, over a_{n-1}, ..., a_r
//   alpha = 0                # one value per row or index
//   indices = 1, 3           # prescribed mode
//   index_convention = top   # top: a_i multiplies T^{n-i}; power: i is the exponent of T
//
//   [run]
//   budget = 100000000
//   workers = 4
//   format = csv             # csv | json
//   out = report.csv
//
// Field elements are written as their integer codes 0..q-1; over a prime
// field negative integers are reduced modulo p.

#include "ffpat/budget.hpp"
#include "ffpat/family.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ffpat {

enum class ReportFormat { csv, json };

struct RunConfig {
  std::uint32_t p = 0;
  std::uint32_t s = 1;

  FamilyKind mode = FamilyKind::linear;
  unsigned n = 0;
  unsigned r = 0;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> alpha;
  std::vector<unsigned> indices;
  bool power_convention = false;

  std::uint64_t budget = kDefaultMemberBudget;
  unsigned workers = 0;
  ReportFormat format = ReportFormat::csv;
  std::string out;
};

/// Parses the text of a configuration file; throws std::invalid_argument with a line number on error.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

ReportFormat parse_format(const std::string& name);

/// Builds the field and the family described by the configuration.
LinearFamily make_family(const RunConfig& cfg);

}  // namespace ffpat

#endif  // FFPAT_CONFIG_HPP
