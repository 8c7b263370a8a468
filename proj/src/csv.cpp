#include "deltabound/csv.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "deltabound/format.hpp"

namespace deltabound {

void write_sweep_csv(std::ostream& out, const std::vector<ModelSolution>& rows) {
  out << "x,k,energy\n";
  for (const ModelSolution& s : rows)
    out << format_fixed(s.x) << ',' << format_fixed(s.k) << ','
        << format_fixed(s.energy) << '\n';
}

Series read_sweep_column(std::istream& in, const std::string& column) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("sweep CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const std::vector<std::string> header = split_csv(line);
  std::size_t x_col = header.size();
  std::size_t y_col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "x") x_col = i;
    if (header[i] == column) y_col = i;
  }
  if (x_col == header.size())
    throw std::invalid_argument("sweep CSV: header has no 'x' column");
  if (y_col == header.size())
    throw std::invalid_argument("sweep CSV: header has no '" + column + "' column");

  Series series;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != header.size())
      throw std::invalid_argument("sweep CSV: row with wrong field count: " + line);
    const auto x = parse_double(fields[x_col]);
    const auto y = parse_double(fields[y_col]);
    if (!x || !y)
      throw std::invalid_argument("sweep CSV: non-numeric field in row: " + line);
    series.x.push_back(*x);
    series.y.push_back(*y);
  }
  if (series.x.empty())
    throw std::invalid_argument("sweep CSV: no data rows");
  return series;
}

void write_comparison_csv(std::ostream& out, const ModelOracleComparison& report) {
  out << "kind,x,k,energy\n";
  for (const ModelSolution& s : report.model)
    out << "model," << format_fixed(s.x) << ',' << format_fixed(s.k) << ','
        << format_fixed(s.energy) << '\n';
  out << "oracle_lambda0,,," << format_fixed(report.uncorrelated.energy) << '\n';
  out << "oracle_lambda1,,," << format_fixed(report.correlated.energy) << '\n';

  out << "# model asymptotic energy: " << format_fixed(report.model_asymptotic_energy) << '\n';
  out << "# |model asymptote - oracle lambda0|: "
      << format_fixed(std::abs(report.asymptote_gap())) << '\n';
  if (!report.model.empty()) {
    const ModelSolution& last = report.model.back();
    out << "# model E(x=" << format_fixed(last.x) << ") - oracle lambda0: "
        << format_fixed(last.energy - report.uncorrelated.energy) << '\n';
    out << "# model E(x=" << format_fixed(last.x) << ") - oracle lambda1: "
        << format_fixed(last.energy - report.correlated.energy) << '\n';
  }
  out << "# correlation shift (oracle): "
      << format_fixed(report.correlated.energy - report.uncorrelated.energy)
      << '\n';
}

}  // namespace deltabound
