#pragma once

#include <iosfwd>
#include <string>

#include "deltabound/csv.hpp"

namespace deltabound {

/// Self-contained SVG line chart of y against x: one polyline, framed axes,
/// tick labels, axis captions. No external tool or stylesheet needed.
void write_svg_line_chart(std::ostream& out, const Series& series,
                          const std::string& x_label,
                          const std::string& y_label,
                          const std::string& title);

/// Plain two-column data block, gnuplot-ready.
void write_gnuplot_data(std::ostream& out, const Series& series);

/// Minimal script stub that plots a data file written by write_gnuplot_data.
void write_gnuplot_script(std::ostream& out, const std::string& data_path,
                          const std::string& x_label,
                          const std::string& y_label);

}  // namespace deltabound
