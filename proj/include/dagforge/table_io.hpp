#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "dagforge/counting.hpp"

namespace dagforge {

// Versioned, line-oriented cache:
//   dagforge-tables v1 variant=<tag> n_max=<n> [K=.. K_n=.. p=num/den]
//   <n> <k> <a-decimal> <b-decimal>        (one line per entry)
// Weighted tables store the den^{L_n}-scaled integers.

class TableIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedTable {
  std::optional<CountTable> count;
  std::optional<WeightedTable> weighted;
};

void save_table(std::ostream& os, const CountTable& t);
void save_table(std::ostream& os, const WeightedTable& t);

// Verifies the per-entry divisibility (a = binomial * b), the base entries,
// and for unrestricted tables the inclusion-exclusion totals, before
// handing the table out. Any failure is a TableIoError.
LoadedTable load_table(std::istream& is);

void save_table_file(const std::string& path, const CountTable& t);
void save_table_file(const std::string& path, const WeightedTable& t);
LoadedTable load_table_file(const std::string& path);

}  // namespace dagforge
