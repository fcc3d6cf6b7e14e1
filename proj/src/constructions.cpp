#include "dartbound/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dartbound/coverage.hpp"

namespace dartbound {
namespace {

const Point kCentroid{0.5, kSqrt3 / 6.0};

void check_count(int n) {
  if (n < 1) {
    throw std::invalid_argument("construction requires n >= 1");
  }
}

void check_epsilon(double epsilon, double upper) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0 || epsilon >= upper) {
    throw std::invalid_argument("construction epsilon out of range");
  }
}

void append_copies(std::vector<Point>& pts, Point p, int copies) {
  for (int i = 0; i < copies; ++i) {
    pts.push_back(p);
  }
}

/// Point at arc-parameter s along the bottom Reuleaux arc, measured from U
/// toward V; the arc is unit-radius and centered at W.
Point bottom_arc(double s) {
  ReuleauxTriangle rt;
  return rt.w + unit(4.0 * kPi / 3.0 + s);
}

/// 120-degree counterclockwise rotation about the Reuleaux centroid; maps
/// U -> V -> W and the bottom arc onto the right arc.
Point rotate_third(Point p) {
  Point q = p - kCentroid;
  return kCentroid + Point{-0.5 * q.x - kSqrt3 / 2.0 * q.y, kSqrt3 / 2.0 * q.x - 0.5 * q.y};
}

double circumradius_of(Point a, Point b, Point c) {
  double area2 = std::abs(cross(b - a, c - a));
  return dist(a, b) * dist(b, c) * dist(c, a) / (2.0 * area2);
}

/// Circumradius of the chain triple (X_i, Y_i, Y_next) as a function of the
/// arc parameters of X_i and X_next.
double chain_radius(double s, double s_next) {
  Point x = bottom_arc(s);
  Point y = rotate_third(x);
  Point y_next = rotate_third(bottom_arc(s_next));
  return circumradius_of(x, y, y_next);
}

/// Largest arc parameter keeping the bottom-arc point outside the radius-1/2
/// circle about the centroid; |bottom_arc(s) - G| decreases on [0, pi/6].
double window_limit() {
  double lo = 0.0;
  double hi = kPi / 6.0;
  for (int i = 0; i < 80; ++i) {
    double mid = (lo + hi) / 2.0;
    if (dist(bottom_arc(mid), kCentroid) >= 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

ReuleauxTriangle canonical_reuleaux() { return {}; }

PointSet triangle_construction(int n) {
  check_count(n);
  ReuleauxTriangle rt;
  int q = n / 3;
  int rem = n % 3;
  std::vector<Point> pts;
  pts.reserve(n);
  append_copies(pts, rt.u, q + (rem >= 1 ? 1 : 0));
  append_copies(pts, rt.v, q + (rem >= 2 ? 1 : 0));
  append_copies(pts, rt.w, q);
  return PointSet(std::move(pts));
}

PointSet uniform_circle_construction(int n) {
  check_count(n);
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    pts.push_back(0.5 * unit(2.0 * kPi * i / n));
  }
  return PointSet(std::move(pts));
}

int uniform_circle_bound(int n, double r) {
  check_count(n);
  if (!std::isfinite(r) || r <= 0.0 || r >= 0.5) {
    throw std::domain_error("uniform circle bound requires 0 < r < 1/2");
  }
  double value = n * std::asin(2.0 * r) / kPi;
  return std::max(1, static_cast<int>(std::ceil(value - 1e-9)));
}

PointSet reuleaux_nine(double epsilon) {
  check_epsilon(epsilon, 0.1);
  ReuleauxTriangle rt;
  std::vector<Point> pts = {
      rt.u,
      rt.v,
      rt.w,
      rt.w + unit(4.0 * kPi / 3.0 + epsilon),  // bottom arc, near U
      rt.w + unit(5.0 * kPi / 3.0 - epsilon),  // bottom arc, near V
      rt.u + unit(epsilon),                    // right arc, near V
      rt.u + unit(kPi / 3.0 - epsilon),        // right arc, near W
      rt.v + unit(2.0 * kPi / 3.0 + epsilon),  // left arc, near W
      rt.v + unit(kPi - epsilon),              // left arc, near U
  };
  return PointSet(std::move(pts));
}

PointSet reuleaux_3n(const ConstructionParams& params) {
  check_count(params.n);
  check_epsilon(params.epsilon, 0.1);
  if (!std::isfinite(params.delta) || params.delta <= 0.0 || params.delta >= 0.01) {
    throw std::invalid_argument("construction delta out of range");
  }
  int n = params.n;
  double target = 0.5 + params.delta;
  double s_win = window_limit();
  for (int attempt = 0; attempt < 50; ++attempt) {
    double first = params.epsilon / std::pow(2.0, attempt);
    if (first >= s_win) {
      continue;
    }
    std::vector<double> s{first};
    bool feasible = true;
    while (static_cast<int>(s.size()) < n) {
      double prev = s.back();
      if (chain_radius(prev, s_win) < target) {
        feasible = false;
        break;
      }
      double lo = prev;
      double hi = s_win;
      while (hi - lo > 1e-10) {
        double mid = (lo + hi) / 2.0;
        if (chain_radius(prev, mid) >= target) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      s.push_back(hi);
    }
    if (!feasible) {
      continue;
    }
    std::vector<Point> pts;
    pts.reserve(3 * n);
    for (double si : s) {
      pts.push_back(bottom_arc(si));
    }
    for (int arc = 0; arc < 2; ++arc) {
      for (int i = 0; i < n; ++i) {
        pts.push_back(rotate_third(pts[arc * n + i]));
      }
    }
    PointSet result(std::move(pts));
    bool valid = diameter(result) <= 1.0 + 1e-12;
    for (const Point& p : result) {
      valid = valid && dist(p, kCentroid) >= 0.5 - 1e-12;
    }
    for (int i = 0; i + 1 < n; ++i) {
      valid = valid && chain_radius(s[i], s[i + 1]) >= target;
    }
    if (valid) {
      return result;
    }
  }
  throw construction_failure_error(
      "circumradius chain infeasible: the arc window cannot accommodate the requested slack");
}

PointSet concentric_construction(int n, double epsilon) {
  if (n < 7) {
    throw std::invalid_argument("concentric construction requires n >= 7");
  }
  if (!std::isfinite(epsilon) || epsilon <= 0.0 || epsilon > 0.01) {
    throw std::invalid_argument("construction epsilon out of range");
  }
  int outer = 6 * n / 7;
  int inner = n - outer;
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < outer; ++i) {
    pts.push_back(0.5 * unit(2.0 * kPi * i / outer));
  }
  for (int i = 0; i < inner; ++i) {
    pts.push_back(epsilon * unit(2.0 * kPi * i / inner));
  }
  return PointSet(std::move(pts));
}

PointSet small_n_construction(int n) {
  check_count(n);
  if (n > 6) {
    throw std::domain_error("small-n construction covers only n <= 6");
  }
  if (n == 1) {
    return PointSet({{0.0, 0.0}});
  }
  std::vector<Point> pts;
  pts.reserve(n);
  if (n <= 5) {
    double radius = 1.0 / (2.0 * std::sin(kPi * (n / 2) / n));
    for (int i = 0; i < n; ++i) {
      pts.push_back(radius * unit(2.0 * kPi * i / n));
    }
  } else {
    double radius = 0.5 + 0.005;
    for (int i = 0; i < 5; ++i) {
      pts.push_back(radius * unit(2.0 * kPi * i / 5));
    }
    pts.push_back({0.0, 0.0});
  }
  return PointSet(std::move(pts));
}

PointSet reuleaux_midpoint_construction(int n) {
  check_count(n);
  ReuleauxTriangle rt;
  Point anchors[5] = {
      rt.u,
      rt.v,
      rt.w,
      rt.w + unit(3.0 * kPi / 2.0),  // midpoint of arc UV
      rt.v + unit(5.0 * kPi / 6.0),  // midpoint of arc UW
  };
  int q = n / 5;
  int rem = n % 5;
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < 5; ++i) {
    append_copies(pts, anchors[i], q + (i < rem ? 1 : 0));
  }
  return PointSet(std::move(pts));
}

PointSet square_construction(int n) {
  check_count(n);
  Point corners[4] = {{0.0, 0.0}, {0.7, 0.0}, {0.7, 0.7}, {0.0, 0.7}};
  int q = n / 4;
  int rem = n % 4;
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < 4; ++i) {
    append_copies(pts, corners[i], q + (i < rem ? 1 : 0));
  }
  return PointSet(std::move(pts));
}

}  // namespace dartbound
