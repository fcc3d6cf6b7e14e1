#include "dartbound/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace dartbound {
namespace {

constexpr double kCollinearTol = 1e-12;

bool same_point(Point a, Point b) { return a.x == b.x && a.y == b.y; }

void check_radius(double radius) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw std::invalid_argument("radius must be positive and finite");
  }
}

double max_dist(const std::vector<Point>& pts, Point center) {
  double best = 0.0;
  for (const Point& p : pts) {
    best = std::max(best, dist(center, p));
  }
  return best;
}

/// Circumcenter of a, b, c, or nullopt-style failure via `ok`.
Point circumcenter_raw(Point a, Point b, Point c, bool& ok) {
  Point u = b - a;
  Point v = c - a;
  double d = 2.0 * cross(u, v);
  if (std::abs(d) <= kCollinearTol) {
    ok = false;
    return a;
  }
  ok = true;
  double uu = norm_sq(u);
  double vv = norm_sq(v);
  return {a.x + (vv * u.y - uu * v.y) / -d, a.y + (uu * v.x - vv * u.x) / -d};
}

Disk disk_from_2(Point a, Point b) {
  Point c{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
  return {c, std::max(dist(c, a), dist(c, b))};
}

Disk disk_from_3(Point a, Point b, Point c) {
  bool ok = false;
  Point o = circumcenter_raw(a, b, c, ok);
  if (!ok) {
    Disk widest = disk_from_2(a, b);
    for (const Disk& d : {disk_from_2(a, c), disk_from_2(b, c)}) {
      if (d.radius > widest.radius) {
        widest = d;
      }
    }
    return widest;
  }
  return {o, std::max({dist(o, a), dist(o, b), dist(o, c)})};
}

Disk trivial_disk(const std::vector<Point>& support) {
  switch (support.size()) {
    case 0:
      return {{0.0, 0.0}, -1.0};
    case 1:
      return {support[0], 0.0};
    case 2:
      return disk_from_2(support[0], support[1]);
    default:
      return disk_from_3(support[0], support[1], support[2]);
  }
}

bool in_disk(const Disk& d, Point p) {
  if (d.radius < 0.0) {
    return false;
  }
  return dist_sq(d.center, p) <= d.radius * d.radius * (1.0 + 1e-12) + 1e-24;
}

Disk welzl(std::vector<Point>& pts, std::size_t n, std::vector<Point>& support) {
  if (n == 0 || support.size() == 3) {
    return trivial_disk(support);
  }
  Point p = pts[n - 1];
  Disk d = welzl(pts, n - 1, support);
  if (in_disk(d, p)) {
    return d;
  }
  support.push_back(p);
  d = welzl(pts, n - 1, support);
  support.pop_back();
  return d;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(), same_point), pts.end());
  if (pts.size() <= 2) {
    return pts;
  }
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) {
      --k;
    }
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) {
      --k;
    }
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

struct SweepEvent {
  double angle = 0.0;
  int type = 0;  // 0 opens an interval, 1 closes one; opens sort first.
};

CoverageResult sweep_best_for_center(const PointSet& points, std::size_t i, double rho) {
  Point p = points[i];
  int base = 0;
  std::vector<SweepEvent> events;
  events.reserve(2 * points.size());
  for (const Point& q : points) {
    if (same_point(p, q)) {
      ++base;
      continue;
    }
    double d = dist(p, q);
    if (d > 2.0 * rho) {
      continue;
    }
    double alpha = std::atan2(q.y - p.y, q.x - p.x);
    double beta = std::acos(std::clamp(d / (2.0 * rho), -1.0, 1.0));
    double s = alpha - beta;
    double e = alpha + beta;
    if (s < 0.0) {
      s += 2.0 * kPi;
    }
    if (e < 0.0) {
      e += 2.0 * kPi;
    }
    if (s <= e) {
      events.push_back({s, 0});
      events.push_back({e, 1});
    } else {
      events.push_back({s, 0});
      events.push_back({2.0 * kPi, 1});
      events.push_back({0.0, 0});
      events.push_back({e, 1});
    }
  }
  std::sort(events.begin(), events.end(), [](const SweepEvent& a, const SweepEvent& b) {
    return a.angle < b.angle || (a.angle == b.angle && a.type < b.type);
  });
  CoverageResult best{base, {p, rho}};
  int current = base;
  for (const SweepEvent& ev : events) {
    if (ev.type == 0) {
      ++current;
      if (current > best.count) {
        best = {current, {p + rho * unit(ev.angle), rho}};
      }
    } else {
      --current;
    }
  }
  return best;
}

}  // namespace

double diameter(const PointSet& points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, dist_sq(points[i], points[j]));
    }
  }
  return std::sqrt(best);
}

double diameter_rotating_calipers(const PointSet& points) {
  std::vector<Point> hull = convex_hull(points.points());
  if (hull.size() <= 1) {
    return 0.0;
  }
  if (hull.size() == 2) {
    return std::sqrt(dist_sq(hull[0], hull[1]));
  }
  double best = 0.0;
  std::size_t m = hull.size();
  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    Point edge = hull[(i + 1) % m] - hull[i];
    while (cross(edge, hull[(j + 1) % m] - hull[j]) > 0.0) {
      j = (j + 1) % m;
    }
    best = std::max({best, dist_sq(hull[i], hull[j]), dist_sq(hull[(i + 1) % m], hull[j])});
  }
  return std::sqrt(best);
}

Disk smallest_enclosing_circle(const PointSet& points) {
  std::vector<Point> pts = points.points();
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<Point> support;
  Disk d = welzl(pts, pts.size(), support);
  d.radius = std::max(d.radius, max_dist(pts, d.center));
  return d;
}

Disk circumcircle(Point a, Point b, Point c) {
  if (same_point(a, b) || same_point(a, c) || same_point(b, c)) {
    throw degenerate_input_error("circumcircle requires pairwise-distinct points");
  }
  bool ok = false;
  Point o = circumcenter_raw(a, b, c, ok);
  if (!ok) {
    throw degenerate_input_error("circumcircle requires non-collinear points");
  }
  return {o, std::max({dist(o, a), dist(o, b), dist(o, c)})};
}

std::vector<Point> candidate_centers(const PointSet& points, double rho) {
  check_radius(rho);
  std::vector<Point> centers(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Point a = points[i];
      Point b = points[j];
      if (same_point(a, b)) {
        continue;
      }
      double d = dist(a, b);
      if (d > 2.0 * rho + 1e-12) {
        continue;
      }
      Point mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
      if (std::abs(d - 2.0 * rho) <= 1e-12) {
        centers.push_back(mid);
        continue;
      }
      double h = std::sqrt(std::max(0.0, rho * rho - d * d / 4.0));
      Point perp{-(b.y - a.y) / d, (b.x - a.x) / d};
      centers.push_back(mid + h * perp);
      centers.push_back(mid - h * perp);
    }
  }
  return centers;
}

int count_within(const PointSet& points, Point center, double rho) {
  int count = 0;
  for (const Point& p : points) {
    if (dist(center, p) <= rho) {
      ++count;
    }
  }
  return count;
}

CoverageResult max_coverage(const PointSet& points, double radius, CountMode mode) {
  check_radius(radius);
  double rho = mode.effective_radius(radius);
  CoverageResult best{0, {points[0], rho}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    CoverageResult local = sweep_best_for_center(points, i, rho);
    if (local.count > best.count) {
      best = local;
    }
  }
  return best;
}

CoverageResult max_coverage_bruteforce(const PointSet& points, double radius, CountMode mode) {
  check_radius(radius);
  double rho = mode.effective_radius(radius);
  CoverageResult best{0, {points[0], rho}};
  for (const Point& p : points) {
    int count = count_within(points, p, rho);
    if (count > best.count) {
      best = {count, {p, rho}};
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Point a = points[i];
      Point b = points[j];
      if (same_point(a, b)) {
        continue;
      }
      double d = dist(a, b);
      if (d > 2.0 * rho + 1e-12) {
        continue;
      }
      Point mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
      std::vector<Point> centers;
      if (std::abs(d - 2.0 * rho) <= 1e-12) {
        centers.push_back(mid);
      } else {
        double h = std::sqrt(std::max(0.0, rho * rho - d * d / 4.0));
        Point perp{-(b.y - a.y) / d, (b.x - a.x) / d};
        centers.push_back(mid + h * perp);
        centers.push_back(mid - h * perp);
      }
      for (const Point& center : centers) {
        // The generating pair (and its duplicates) lies on the boundary by
        // construction; count it directly so rounding cannot drop it.
        int count = 0;
        for (const Point& q : points) {
          if (same_point(q, a) || same_point(q, b) || dist(center, q) <= rho) {
            ++count;
          }
        }
        if (count > best.count) {
          best = {count, {center, rho}};
        }
      }
    }
  }
  return best;
}

}  // namespace dartbound
