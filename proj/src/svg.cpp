#include "deltabound/svg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "deltabound/format.hpp"

namespace deltabound {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 78.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 56.0;
constexpr int kTicks = 5;

struct Range {
  double lo;
  double hi;
  double span() const { return hi - lo; }
};

Range padded_range(const std::vector<double>& v) {
  const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  double lo = *mn;
  double hi = *mx;
  if (lo == hi) {  // flat series: open a symmetric window around the value
    const double pad = std::max(1e-9, 0.05 * std::abs(lo));
    lo -= pad;
    hi += pad;
  } else {
    const double pad = 0.04 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  return {lo, hi};
}

std::string px(double v) { return format_fixed(v, 2); }

}  // namespace

void write_svg_line_chart(std::ostream& out, const Series& series,
                          const std::string& x_label,
                          const std::string& y_label,
                          const std::string& title) {
  if (series.x.empty() || series.x.size() != series.y.size())
    throw std::invalid_argument("write_svg_line_chart: empty or ragged series");

  const Range rx = padded_range(series.x);
  const Range ry = padded_range(series.y);
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double x) {
    return kMarginLeft + (x - rx.lo) / rx.span() * plot_w;
  };
  const auto sy = [&](double y) {
    return kMarginTop + (ry.hi - y) / ry.span() * plot_h;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <text x=\"" << px(kWidth / 2) << "\" y=\"24\" font-family=\"sans-serif\""
      << " font-size=\"16\" text-anchor=\"middle\">" << title << "</text>\n";

  // frame
  out << "  <rect x=\"" << px(kMarginLeft) << "\" y=\"" << px(kMarginTop)
      << "\" width=\"" << px(plot_w) << "\" height=\"" << px(plot_h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int t = 0; t < kTicks; ++t) {
    const double f = static_cast<double>(t) / (kTicks - 1);
    const double xv = rx.lo + f * rx.span();
    const double yv = ry.lo + f * ry.span();
    const double xp = sx(xv);
    const double yp = sy(yv);
    out << "  <line x1=\"" << px(xp) << "\" y1=\"" << px(kMarginTop + plot_h)
        << "\" x2=\"" << px(xp) << "\" y2=\"" << px(kMarginTop + plot_h + 6)
        << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << px(xp) << "\" y=\"" << px(kMarginTop + plot_h + 22)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << format_shortest(xv) << "</text>\n";
    out << "  <line x1=\"" << px(kMarginLeft - 6) << "\" y1=\"" << px(yp)
        << "\" x2=\"" << px(kMarginLeft) << "\" y2=\"" << px(yp)
        << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << px(kMarginLeft - 10) << "\" y=\"" << px(yp + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
        << format_shortest(yv) << "</text>\n";
  }

  out << "  <text x=\"" << px(kMarginLeft + plot_w / 2) << "\" y=\""
      << px(kHeight - 14)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
      << x_label << "</text>\n";
  out << "  <text x=\"18\" y=\"" << px(kMarginTop + plot_h / 2)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 18 " << px(kMarginTop + plot_h / 2) << ")\">"
      << y_label << "</text>\n";

  out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.8\" points=\"";
  for (std::size_t i = 0; i < series.x.size(); ++i) {
    if (i) out << ' ';
    out << px(sx(series.x[i])) << ',' << px(sy(series.y[i]));
  }
  out << "\"/>\n";
  out << "</svg>\n";
}

void write_gnuplot_data(std::ostream& out, const Series& series) {
  if (series.x.empty() || series.x.size() != series.y.size())
    throw std::invalid_argument("write_gnuplot_data: empty or ragged series");
  for (std::size_t i = 0; i < series.x.size(); ++i)
    out << format_fixed(series.x[i]) << ' ' << format_fixed(series.y[i]) << '\n';
}

void write_gnuplot_script(std::ostream& out, const std::string& data_path,
                          const std::string& x_label,
                          const std::string& y_label) {
  out << "set xlabel '" << x_label << "'\n";
  out << "set ylabel '" << y_label << "'\n";
  out << "set grid\n";
  out << "plot '" << data_path << "' using 1:2 with linespoints notitle\n";
}

}  // namespace deltabound
