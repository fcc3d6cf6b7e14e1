#include "dartbound/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dartbound/covers.hpp"

namespace dartbound {

namespace {

constexpr double kBand = 1e-9;
// Corner spacing of square_construction; a disk of smaller diameter reaches
// points of at most one corner cluster.
constexpr double kSquareSide = 0.7;
constexpr double kExactTol = 1e-12;

int ceil_div(long long a, long long k) { return static_cast<int>((a + k - 1) / k); }

void validate_bound_args(int n, double r) {
  if (n < 1) {
    throw std::invalid_argument("bounds require n >= 1");
  }
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("bounds require a positive finite radius");
  }
}

struct UpperCandidate {
  int value;
  const char* witness;
};

/// Closed-form upper bounds applicable at radius r, in tie-break order.
std::vector<UpperCandidate> upper_candidates(int n, double r) {
  std::vector<UpperCandidate> out;
  const bool below_half = r < 0.5 - kBand;
  const bool at_half = std::fabs(r - 0.5) <= kBand;
  const bool ge_half = r >= 0.5 - kBand;
  if (below_half) {
    out.push_back({ceil_div(n, 3), "triangle"});
  } else if (ge_half && r < kJungRadius - kBand) {
    out.push_back({ceil_div(2LL * n, 3), "triangle"});
  }
  if (at_half) {
    out.push_back({n % 3 == 0 ? n / 3 + 1 : ceil_div(n, 3) + 1, "reuleaux-3n"});
  }
  if (ge_half && r < kMidpointRadius - kBand) {
    out.push_back({ceil_div(3LL * n, 5), "midpoint"});
  }
  if (r <= kSquareQuarterRadius + kBand) {
    // ceil(n/4): sharp at the quarter radius via the uniform circle, and for
    // smaller disks via the four corner clusters of the side-0.7 square.
    out.push_back({ceil_div(n, 4), 2.0 * r <= kSquareSide - kBand ? "square" : "uniform-circle"});
  }
  if (below_half) {
    out.push_back(
        {static_cast<int>(std::ceil(n * std::asin(2.0 * r) / kPi)), "uniform-circle"});
  }
  if (n != 7 && r <= 0.25 + kBand) {
    out.push_back({ceil_div(n, 7), "concentric"});
  }
  out.push_back({n, "trivial"});
  return out;
}

/// Asymptotic counterparts of the upper-bound formulas (values of c_upper).
std::vector<double> upper_fractions(double r) {
  std::vector<double> out;
  const bool below_half = r < 0.5 - kBand;
  const bool ge_half = r >= 0.5 - kBand;
  if (r <= 0.5 + kBand) {
    out.push_back(1.0 / 3.0);
  } else if (r < kJungRadius - kBand) {
    out.push_back(2.0 / 3.0);
  }
  if (ge_half && r < kMidpointRadius - kBand) {
    out.push_back(3.0 / 5.0);
  }
  if (r <= kSquareQuarterRadius + kBand) {
    out.push_back(0.25);
  }
  if (below_half) {
    out.push_back(std::asin(2.0 * r) / kPi);
  }
  if (r <= 0.25 + kBand) {
    out.push_back(1.0 / 7.0);
  }
  out.push_back(1.0);
  return out;
}

std::string fmt_shortest(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, end);
}

std::string fmt6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string fmt2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

constexpr double kPlotLeft = 70.0;
constexpr double kPlotTop = 30.0;
constexpr double kPlotWidth = 780.0;
constexpr double kPlotHeight = 470.0;

double plot_x(double r, double r_min, double r_max) {
  if (r_max <= r_min) {
    return kPlotLeft + kPlotWidth / 2.0;
  }
  return kPlotLeft + (r - r_min) / (r_max - r_min) * kPlotWidth;
}

double plot_y(double c) { return kPlotTop + (1.0 - c) * kPlotHeight; }

/// Step polyline holding each value until the next sample.
std::string step_points(const StepSeries& series, bool upper, double r_min, double r_max) {
  std::string out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    double c = upper ? series[i].c_upper : series[i].c_lower;
    out += fmt2(plot_x(series[i].r, r_min, r_max)) + "," + fmt2(plot_y(c)) + " ";
    if (i + 1 < series.size()) {
      out += fmt2(plot_x(series[i + 1].r, r_min, r_max)) + "," + fmt2(plot_y(c)) + " ";
    }
  }
  if (!out.empty()) {
    out.pop_back();
  }
  return out;
}

}  // namespace

Bound lower_bound(int n, double r) {
  validate_bound_args(n, r);
  Bound best{1, "trivial"};
  for (const CoveringCertificate& cert : certified_builtins()) {
    if (cert.radius <= r + kBand) {
      int value = pigeonhole_bound(cert, n);
      if (value > best.value) {
        best = {value, cert.provenance};
      }
    }
  }
  return best;
}

Bound upper_bound(int n, double r) {
  validate_bound_args(n, r);
  Bound best{0, ""};
  for (const UpperCandidate& candidate : upper_candidates(n, r)) {
    if (best.witness.empty() || candidate.value < best.value) {
      best = {candidate.value, candidate.witness};
    }
  }
  return best;
}

std::vector<BoundsRecord> table_reproduce() {
  const std::vector<std::pair<int, double>> samples = {
      {12, 0.6},  {10, 0.45}, {21, 0.5},  {28, kSquareQuarterRadius}, {21, 0.25},
      {7, 0.25},  {10, 0.55}, {20, 0.3},  {10, 0.51},                 {10, 0.53},
  };
  std::vector<BoundsRecord> records;
  records.reserve(samples.size());
  for (const auto& [n, r] : samples) {
    Bound lo = lower_bound(n, r);
    Bound hi = upper_bound(n, r);
    records.push_back({n, r, lo.value, hi.value, lo.witness, hi.witness});
  }
  return records;
}

std::string bounds_to_csv(const std::vector<BoundsRecord>& records, const std::string& comment) {
  std::string out;
  if (!comment.empty()) {
    out += "# " + comment + "\n";
  }
  out += "n,r,lower,upper,lower_witness,upper_witness\n";
  for (const BoundsRecord& record : records) {
    out += std::to_string(record.n) + "," + fmt_shortest(record.r) + "," +
           std::to_string(record.lower) + "," + std::to_string(record.upper) + "," +
           record.lower_witness + "," + record.upper_witness + "\n";
  }
  return out;
}

StepSeries step_function_data(const std::vector<double>& r_grid) {
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > 0.0) || r_grid[i] > 1.0) {
      throw std::invalid_argument("grid radii must lie in (0, 1]");
    }
    if (i > 0 && r_grid[i] < r_grid[i - 1]) {
      throw std::invalid_argument("grid radii must be sorted");
    }
  }
  StepSeries series;
  series.reserve(r_grid.size());
  for (double r : r_grid) {
    double c_lower = 0.0;
    for (const CoveringCertificate& cert : certified_builtins()) {
      if (cert.radius <= r + kBand) {
        c_lower = std::max(c_lower, 1.0 / static_cast<double>(cert.centers.size()));
      }
    }
    double c_upper = 1.0;
    for (double value : upper_fractions(r)) {
      c_upper = std::min(c_upper, value);
    }
    series.push_back({r, c_lower, c_upper});
  }
  return series;
}

std::vector<double> default_r_grid() {
  std::vector<double> grid;
  for (int i = 10; i <= 200; ++i) {
    grid.push_back(i * 0.005);
  }
  for (double critical : {0.25, kSquareQuarterRadius, kBorsukRadius, 0.5, kMidpointRadius,
                          kHalfHexRadius, kJungRadius}) {
    grid.push_back(critical);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::string step_series_to_csv(const StepSeries& series) {
  std::string out = "r,c_lower,c_upper\n";
  for (const StepPoint& point : series) {
    out += fmt_shortest(point.r) + "," + fmt_shortest(point.c_lower) + "," +
           fmt_shortest(point.c_upper) + "\n";
  }
  return out;
}

std::string emit_plot(const StepSeries& series, const std::string& path) {
  if (series.empty()) {
    throw std::invalid_argument("plot requires a nonempty series");
  }
  const double r_min = series.front().r;
  const double r_max = series.back().r;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 880 560\" "
         "font-family=\"sans-serif\" font-size=\"14\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"880\" height=\"560\" fill=\"#ffffff\"/>\n";

  svg += "<g stroke=\"#000000\" stroke-width=\"1\">\n";
  svg += "<line x1=\"70\" y1=\"500\" x2=\"850\" y2=\"500\"/>\n";
  svg += "<line x1=\"70\" y1=\"30\" x2=\"70\" y2=\"500\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    double r = r_min + (r_max - r_min) * i / 4.0;
    double x = plot_x(r, r_min, r_max);
    svg += "<line x1=\"" + fmt2(x) + "\" y1=\"500\" x2=\"" + fmt2(x) + "\" y2=\"506\"/>\n";
  }
  for (double c : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    double y = plot_y(c);
    svg += "<line x1=\"64\" y1=\"" + fmt2(y) + "\" x2=\"70\" y2=\"" + fmt2(y) + "\"/>\n";
  }
  svg += "</g>\n";

  for (int i = 0; i <= 4; ++i) {
    double r = r_min + (r_max - r_min) * i / 4.0;
    svg += "<text text-anchor=\"middle\" x=\"" + fmt2(plot_x(r, r_min, r_max)) +
           "\" y=\"522\">" + fmt6(r) + "</text>\n";
  }
  for (double c : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    svg += "<text text-anchor=\"end\" x=\"60\" y=\"" + fmt2(plot_y(c) + 5.0) + "\">" + fmt6(c) +
           "</text>\n";
  }
  svg += "<text text-anchor=\"middle\" x=\"460\" y=\"548\">r</text>\n";
  svg += "<text text-anchor=\"middle\" x=\"25\" y=\"265\" transform=\"rotate(-90 25 265)\">"
         "c(r)</text>\n";

  if (series.size() >= 2) {
    svg += "<polyline class=\"upper\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"2\" "
           "points=\"" +
           step_points(series, true, r_min, r_max) + "\"/>\n";
    svg += "<polyline class=\"lower\" fill=\"none\" stroke=\"#555555\" stroke-width=\"2\" "
           "points=\"" +
           step_points(series, false, r_min, r_max) + "\"/>\n";
  } else if (std::fabs(series[0].c_upper - series[0].c_lower) > kExactTol) {
    svg += "<circle class=\"upper-point\" fill=\"#bbbbbb\" r=\"4\" cx=\"" +
           fmt2(plot_x(series[0].r, r_min, r_max)) + "\" cy=\"" + fmt2(plot_y(series[0].c_upper)) +
           "\"/>\n";
    svg += "<circle class=\"lower-point\" fill=\"#555555\" r=\"4\" cx=\"" +
           fmt2(plot_x(series[0].r, r_min, r_max)) + "\" cy=\"" + fmt2(plot_y(series[0].c_lower)) +
           "\"/>\n";
  }

  std::size_t i = 0;
  while (i < series.size()) {
    if (std::fabs(series[i].c_upper - series[i].c_lower) > kExactTol) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < series.size() &&
           std::fabs(series[j + 1].c_upper - series[j + 1].c_lower) <= kExactTol) {
      ++j;
    }
    if (j > i) {
      std::string pts;
      for (std::size_t t = i; t <= j; ++t) {
        pts += fmt2(plot_x(series[t].r, r_min, r_max)) + "," + fmt2(plot_y(series[t].c_lower));
        if (t < j) {
          pts += " ";
        }
      }
      svg += "<polyline class=\"exact\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" "
             "data-r0=\"" +
             fmt6(series[i].r) + "\" data-r1=\"" + fmt6(series[j].r) + "\" data-c=\"" +
             fmt6(series[i].c_lower) + "\" points=\"" + pts + "\"/>\n";
    } else {
      svg += "<circle class=\"exact-point\" fill=\"#000000\" r=\"4\" data-r=\"" +
             fmt6(series[i].r) + "\" data-c=\"" + fmt6(series[i].c_lower) + "\" cx=\"" +
             fmt2(plot_x(series[i].r, r_min, r_max)) + "\" cy=\"" +
             fmt2(plot_y(series[i].c_lower)) + "\"/>\n";
    }
    i = j + 1;
  }

  svg += "</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw io_error("cannot open plot file for writing: " + path);
  }
  out << svg;
  if (!out) {
    throw io_error("cannot write plot file: " + path);
  }
  return svg;
}

}  // namespace dartbound
