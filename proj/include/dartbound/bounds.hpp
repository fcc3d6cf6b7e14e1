#pragma once

#include <string>
#include <vector>

#include "dartbound/geometry.hpp"

namespace dartbound {

/// A one-sided bound on the guaranteed coverable count, with the label of the
/// certificate or construction that witnesses it.
struct Bound {
  int value = 0;
  std::string witness;
};

/// Best pigeonhole lower bound on the guaranteed count for n points at disk
/// radius r: the maximum of ceil(n/k) over certified builtin coverings whose
/// radius is at most r (within a 1e-9 band). Falls back to 1.
Bound lower_bound(int n, double r);

/// Best construction-backed upper bound on the guaranteed count for n points
/// at disk radius r: the minimum over the applicable closed-form estimates,
/// falling back to n when none applies.
Bound upper_bound(int n, double r);

/// One sampled (n, r) with the matched lower/upper bounds and their witnesses.
struct BoundsRecord {
  int n = 0;
  double r = 0.0;
  int lower = 0;
  int upper = 0;
  std::string lower_witness;
  std::string upper_witness;
};

/// One sample of the asymptotic guaranteed fraction: bracketing values for
/// c(r), the limit of the guaranteed count divided by n.
struct StepPoint {
  double r = 0.0;
  double c_lower = 0.0;
  double c_upper = 0.0;
};

using StepSeries = std::vector<StepPoint>;

/// Bound records at fixed sample points, one (or two, for the radius-1/4
/// point and its n = 7 exception) per summary-table row.
std::vector<BoundsRecord> table_reproduce();

/// CSV with header "n,r,lower,upper,lower_witness,upper_witness"; a nonempty
/// comment is emitted first as a '#' line.
std::string bounds_to_csv(const std::vector<BoundsRecord>& records,
                          const std::string& comment = "");

/// Asymptotic bracket for each grid radius: c_lower from the certified
/// coverings, c_upper from the closed-form estimates. Grid values must be
/// sorted and lie in (0, 1].
StepSeries step_function_data(const std::vector<double>& r_grid);

/// Radii from 0.05 to 1.0 in steps of 0.005 plus the breakpoint radii where
/// either bracket side changes value.
std::vector<double> default_r_grid();

/// CSV with header "r,c_lower,c_upper".
std::string step_series_to_csv(const StepSeries& series);

/// Renders the bracket as an SVG step plot: lower bounds dark gray, upper
/// bounds light gray, and runs where the bracket pins c(r) exactly in black
/// (polylines for intervals, circles for isolated radii). Returns the SVG and
/// writes it to path.
std::string emit_plot(const StepSeries& series, const std::string& path);

}  // namespace dartbound
