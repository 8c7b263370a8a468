#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "deltabound/oracle.hpp"
#include "deltabound/secular.hpp"

namespace deltabound {

/// Two aligned columns extracted from a sweep CSV, ready for plotting.
struct Series {
  std::vector<double> x;
  std::vector<double> y;
};

/// Writes the sweep schema: header "x,k,energy" plus one 6-decimal row per
/// solution, byte-deterministic.
void write_sweep_csv(std::ostream& out, const std::vector<ModelSolution>& rows);

/// Reads a sweep-schema CSV and extracts (x, column) with column one of
/// "k" or "energy". Throws std::invalid_argument on a malformed header,
/// a malformed row, or when no data rows are present. Lines beginning with
/// '#' are ignored.
Series read_sweep_column(std::istream& in, const std::string& column);

/// Comparison schema: "kind,x,k,energy" with one model row per separation
/// and exactly one oracle row per lambda in {0, 1}, followed by a '#'
/// summary block with the energy differences.
void write_comparison_csv(std::ostream& out, const ModelOracleComparison& report);

}  // namespace deltabound
