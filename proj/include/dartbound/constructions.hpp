#pragma once

#include "dartbound/geometry.hpp"

namespace dartbound {

/// Canonical constant-width-1 Reuleaux triangle placement shared by all
/// generators: U at the origin, V on the x-axis, W above.
struct ReuleauxTriangle {
  Point u{0.0, 0.0};
  Point v{1.0, 0.0};
  Point w{0.5, kSqrt3 / 2.0};
  double width = 1.0;
};

ReuleauxTriangle canonical_reuleaux();

/// Generator knobs; delta is the circumradius slack of the 3n construction.
struct ConstructionParams {
  int n = 1;
  double epsilon = 0.02;
  double delta = 1e-4;
};

/// n points on the vertices of a side-1 equilateral triangle, multiplicities
/// as equal as possible, remainder spread one per vertex.
PointSet triangle_construction(int n);

/// n points at angles 2*pi*i/n on the radius-1/2 circle about the origin.
PointSet uniform_circle_construction(int n);

/// ceil((n/pi) * arcsin(2r)), the uniform-circle coverage bound for r < 1/2.
int uniform_circle_bound(int n, double r);

/// The three Reuleaux vertices plus, on each boundary arc, the two points at
/// arc-distance epsilon from the arc's endpoints (9 points).
PointSet reuleaux_nine(double epsilon = 0.02);

/// 3n points, n per Reuleaux arc, rotationally symmetric, placed so every
/// consecutive circumradius condition holds with slack params.delta.
PointSet reuleaux_3n(const ConstructionParams& params);

/// floor(6n/7) points on the radius-1/2 circle plus ceil(n/7) points on the
/// concentric radius-epsilon circle.
PointSet concentric_construction(int n, double epsilon = 0.005);

/// Small extremal sets: regular n-gon of diameter 1 for n <= 5; for n = 6,
/// five points on a radius-(1/2 + 0.005) circle plus its center.
PointSet small_n_construction(int n);

/// n points on the anchors {U, V, W, M1, M2} (M1, M2 the midpoints of arcs
/// UV and UW), floor(n/5) each, remainder assigned in that fixed order.
PointSet reuleaux_midpoint_construction(int n);

/// n points on the vertices of a side-0.7 square, multiplicities as equal
/// as possible.
PointSet square_construction(int n);

}  // namespace dartbound
