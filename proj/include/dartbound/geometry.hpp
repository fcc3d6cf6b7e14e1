#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dartbound {

inline constexpr double kPi = 3.14159265358979323846;

inline const double kSqrt3 = std::sqrt(3.0);
/// Circumradius of the width-1 regular hexagon; Jung's radius for unit diameter.
inline const double kJungRadius = 1.0 / kSqrt3;
inline const double kBorsukRadius = kSqrt3 / 4.0;
/// Circumradius of the half-hexagon pentagon cut from the width-1 hexagon.
inline const double kHalfHexRadius = std::sqrt(13.0 / 48.0);
/// Circumradius of {U, V, M1, M2} on the Reuleaux triangle.
inline const double kMidpointRadius = (kSqrt3 - 1.0) / std::sqrt(2.0);
inline const double kSquareQuarterRadius = std::sqrt(2.0) / 4.0;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class degenerate_input_error : public error {
 public:
  using error::error;
};

class construction_failure_error : public error {
 public:
  using error::error;
};

class embedding_failure_error : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

class parse_error : public io_error {
 public:
  parse_error(const std::string& message, int line) : io_error(message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::sqrt(norm_sq(p)); }
inline double dist_sq(Point a, Point b) { return norm_sq(a - b); }
inline double dist(Point a, Point b) { return std::sqrt(dist_sq(a, b)); }

/// Unit vector at `angle` radians.
inline Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

struct Disk {
  Point center;
  double radius = 0.0;

  bool contains(Point p, double tol = 0.0) const { return dist(center, p) <= radius + tol; }
};

/// Finite multiset of at least one point; construction order is preserved.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) {
      throw std::invalid_argument("point set must contain at least one point");
    }
    for (const Point& p : points_) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw std::invalid_argument("point coordinates must be finite");
      }
    }
  }

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::vector<Point>::const_iterator begin() const { return points_.begin(); }
  std::vector<Point>::const_iterator end() const { return points_.end(); }
  const std::vector<Point>& points() const { return points_; }

 private:
  std::vector<Point> points_;
};

enum class CountKind { kExact, kInflated, kDeflated };

/// Adjustment applied to a counting radius before containment tests.
class CountMode {
 public:
  static CountMode exact() { return CountMode(CountKind::kExact, 0.0); }
  static CountMode inflated(double tau) { return CountMode(CountKind::kInflated, checked(tau)); }
  static CountMode deflated(double tau) { return CountMode(CountKind::kDeflated, checked(tau)); }

  CountKind kind() const { return kind_; }
  double tolerance() const { return tolerance_; }

  double effective_radius(double radius) const {
    switch (kind_) {
      case CountKind::kExact:
        return radius;
      case CountKind::kInflated:
        return radius + tolerance_;
      case CountKind::kDeflated:
        if (tolerance_ >= radius) {
          throw std::domain_error("deflation tolerance must be smaller than the radius");
        }
        return radius - tolerance_;
    }
    return radius;
  }

 private:
  CountMode(CountKind kind, double tolerance) : kind_(kind), tolerance_(tolerance) {}

  static double checked(double tau) {
    if (!std::isfinite(tau) || tau <= 0.0) {
      throw std::invalid_argument("count tolerance must be positive and finite");
    }
    return tau;
  }

  CountKind kind_;
  double tolerance_;
};

/// Rotation by `angle` about the origin followed by `translation`.
struct RigidMotion {
  double angle = 0.0;
  Point translation;

  Point apply(Point p) const {
    double c = std::cos(angle);
    double s = std::sin(angle);
    return {c * p.x - s * p.y + translation.x, s * p.x + c * p.y + translation.y};
  }

  RigidMotion inverse() const {
    double c = std::cos(angle);
    double s = std::sin(angle);
    return {-angle, {-(c * translation.x + s * translation.y),
                     -(c * translation.y - s * translation.x)}};
  }
};

}  // namespace dartbound
