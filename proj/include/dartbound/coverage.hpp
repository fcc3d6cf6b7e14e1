#pragma once

#include <vector>

#include "dartbound/geometry.hpp"

namespace dartbound {

/// Largest pairwise distance; O(n^2) over squared distances.
double diameter(const PointSet& points);

/// Same quantity via convex hull and rotating calipers.
double diameter_rotating_calipers(const PointSet& points);

/// Smallest disk containing every point (Welzl's algorithm).
Disk smallest_enclosing_circle(const PointSet& points);

/// Circle through three pairwise-distinct, non-collinear points.
Disk circumcircle(Point a, Point b, Point c);

/// Centers sufficient to realize a maximum-coverage disk of radius rho:
/// every point, plus the radius-rho circumcenters of admissible pairs.
std::vector<Point> candidate_centers(const PointSet& points, double rho);

/// Number of points in the closed disk of radius rho about center.
int count_within(const PointSet& points, Point center, double rho);

struct CoverageResult {
  int count = 0;
  Disk witness;
};

/// Maximum number of points coverable by one disk of the given radius,
/// counted at the mode's effective radius.  O(n^2 log n) angular sweep.
CoverageResult max_coverage(const PointSet& points, double radius,
                            CountMode mode = CountMode::exact());

/// Reference implementation evaluating every candidate center directly.
CoverageResult max_coverage_bruteforce(const PointSet& points, double radius,
                                       CountMode mode = CountMode::exact());

}  // namespace dartbound
