#include "dartbound/covers.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "dartbound/coverage.hpp"

namespace dartbound {

namespace {

constexpr double kCellFloor = 2.5e-14;
constexpr double kRadiusSlack = 1.0 + 1e-12;
constexpr double kFailureGuard = 1e-9;
constexpr double kEmbedTol = 1e-9;
constexpr double kBuiltinGrid = 0.01;

double sq(double x) { return x * x; }

struct HalfPlane {
  Point anchor;
  Point normal;  // outward unit normal
};

std::vector<HalfPlane> boundary_halfplanes(const ConvexRegion& region) {
  std::vector<Point> poly = region.polygon();
  std::vector<HalfPlane> planes;
  planes.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Point a = poly[i];
    Point b = poly[(i + 1) % poly.size()];
    Point dir = b - a;
    double len = norm(dir);
    planes.push_back({a, {dir.y / len, -dir.x / len}});
  }
  return planes;
}

/// Keep the part of poly with (p - anchor)·normal ≤ 0.
std::vector<Point> clip_halfplane(const std::vector<Point>& poly, Point anchor, Point normal) {
  std::vector<Point> out;
  out.reserve(poly.size() + 1);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Point p = poly[i];
    Point q = poly[(i + 1) % poly.size()];
    double dp = dot(p - anchor, normal);
    double dq = dot(q - anchor, normal);
    bool p_in = dp <= 0.0;
    bool q_in = dq <= 0.0;
    if (p_in) {
      out.push_back(p);
    }
    if (p_in != q_in) {
      out.push_back(p + (dp / (dp - dq)) * (q - p));
    }
  }
  return out;
}

Point polygon_centroid(const std::vector<Point>& poly) {
  Point sum{0.0, 0.0};
  for (const Point& p : poly) {
    sum = sum + p;
  }
  return (1.0 / static_cast<double>(poly.size())) * sum;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Nearest-center cells clipped to the region polygon. Coincident centers
/// share a cell; centers dominated everywhere come back empty.
std::vector<std::vector<Point>> partition_cells(const std::vector<Point>& poly,
                                                const std::vector<Point>& centers) {
  std::vector<std::vector<Point>> cells(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    std::vector<Point> cell = poly;
    for (std::size_t j = 0; j < centers.size() && !cell.empty(); ++j) {
      if (j == i) {
        continue;
      }
      Point axis = centers[j] - centers[i];
      if (norm_sq(axis) < 1e-30) {
        continue;
      }
      Point mid = 0.5 * (centers[i] + centers[j]);
      cell = clip_halfplane(cell, mid, axis);
    }
    cells[i] = std::move(cell);
  }
  return cells;
}

/// Exact covering radius of fixed centers: the distance field max over the
/// region is attained at a vertex of some nearest-center cell.
double covering_radius(const std::vector<Point>& poly, const std::vector<Point>& centers) {
  std::vector<std::vector<Point>> cells = partition_cells(poly, centers);
  double worst = 0.0;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (const Point& v : cells[i]) {
      worst = std::max(worst, dist_sq(v, centers[i]));
    }
  }
  return std::sqrt(worst);
}

std::vector<Point> initial_centers(const ConvexRegion& region, int k, int restart,
                                   std::uint64_t seed) {
  std::vector<Point> poly = region.polygon();
  Point c0 = polygon_centroid(poly);
  double reach = 0.0;
  for (const Point& p : poly) {
    reach = std::max(reach, dist(c0, p));
  }
  std::vector<Point> centers;
  centers.reserve(k);
  if (restart == 0) {
    for (int i = 0; i < k; ++i) {
      centers.push_back(c0 + (0.55 * reach) * unit(kPi / 2.0 + 2.0 * kPi * i / k));
    }
  } else if (restart == 1) {
    centers.push_back(c0);
    for (int i = 0; i + 1 < k; ++i) {
      centers.push_back(c0 + (0.62 * reach) * unit(kPi / 2.0 + 2.0 * kPi * i / (k - 1)));
    }
  } else if (restart == 2) {
    std::vector<Point> pool{c0};
    for (std::size_t i = 0; i < poly.size(); ++i) {
      pool.push_back(poly[i]);
      pool.push_back(0.5 * (poly[i] + poly[(i + 1) % poly.size()]));
    }
    for (int i = 0; i < 12; ++i) {
      pool.push_back(c0 + (0.5 * reach) * unit(2.0 * kPi * i / 12.0));
    }
    centers.push_back(c0);
    while (static_cast<int>(centers.size()) < k) {
      Point far = pool[0];
      double best = -1.0;
      for (const Point& cand : pool) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const Point& c : centers) {
          nearest = std::min(nearest, dist_sq(cand, c));
        }
        if (nearest > best) {
          best = nearest;
          far = cand;
        }
      }
      centers.push_back(far);
    }
  } else {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(restart)));
    std::uniform_real_distribution<double> ux(0.0, 1.0);
    double min_x = poly[0].x, max_x = poly[0].x, min_y = poly[0].y, max_y = poly[0].y;
    for (const Point& p : poly) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    while (static_cast<int>(centers.size()) < k) {
      Point cand{min_x + ux(rng) * (max_x - min_x), min_y + ux(rng) * (max_y - min_y)};
      if (region_contains(region, cand, 0.0)) {
        centers.push_back(cand);
      }
    }
  }
  return centers;
}

/// Alternate nearest-center partition with exact recentering of every cell at
/// its smallest enclosing circle; the covering radius is non-increasing.
void lloyd_minimax(const std::vector<Point>& poly, std::vector<Point>& centers) {
  double prev = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 400; ++iter) {
    std::vector<std::vector<Point>> cells = partition_cells(poly, centers);
    Point worst_vertex = poly[0];
    double worst = -1.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      for (const Point& v : cells[i]) {
        double d = dist_sq(v, centers[i]);
        if (d > worst) {
          worst = d;
          worst_vertex = v;
        }
      }
    }
    bool reseeded = false;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      if (cells[i].empty()) {
        centers[i] = worst_vertex + (1e-6 * (static_cast<double>(i) + 1.0)) *
                                        unit(2.0 * kPi * static_cast<double>(i) / 7.0);
        reseeded = true;
      }
    }
    if (reseeded) {
      continue;
    }
    double radius = 0.0;
    double movement = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      Disk sec = smallest_enclosing_circle(PointSet(cells[i]));
      radius = std::max(radius, sec.radius);
      movement = std::max(movement, dist(centers[i], sec.center));
      centers[i] = sec.center;
    }
    if (radius >= prev - 1e-14 && movement < 1e-13) {
      break;
    }
    prev = radius;
  }
}

struct StripSystem {
  double lo[3];
  double hi[3];
  double gap;
};

/// Feasibility of fitting the rotated set into the three width-1 strips whose
/// intersection is hexagon(1). The translation projections t_1, t_2, t_3 onto
/// the strip normals must satisfy t_1 + t_3 = t_2.
StripSystem strip_system(const std::vector<Point>& pts, double theta) {
  const Point normals[3] = {{kSqrt3 / 2.0, 0.5}, {0.0, 1.0}, {-kSqrt3 / 2.0, 0.5}};
  double c = std::cos(theta);
  double s = std::sin(theta);
  double lo_p[3];
  double hi_p[3];
  for (int j = 0; j < 3; ++j) {
    lo_p[j] = std::numeric_limits<double>::infinity();
    hi_p[j] = -std::numeric_limits<double>::infinity();
  }
  for (const Point& p : pts) {
    Point q{c * p.x - s * p.y, s * p.x + c * p.y};
    for (int j = 0; j < 3; ++j) {
      double v = dot(q, normals[j]);
      lo_p[j] = std::min(lo_p[j], v);
      hi_p[j] = std::max(hi_p[j], v);
    }
  }
  StripSystem out{};
  out.gap = 0.0;
  for (int j = 0; j < 3; ++j) {
    out.lo[j] = -0.5 - lo_p[j];
    out.hi[j] = 0.5 - hi_p[j];
    out.gap = std::max(out.gap, (hi_p[j] - lo_p[j]) - 1.0);
  }
  out.gap = std::max(out.gap, (out.lo[0] + out.lo[2]) - out.hi[1]);
  out.gap = std::max(out.gap, out.lo[1] - (out.hi[0] + out.hi[2]));
  return out;
}

double strip_gap(const std::vector<Point>& pts, double theta) {
  return strip_system(pts, theta).gap;
}

double golden_refine(const std::vector<Point>& pts, double a, double b) {
  const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = strip_gap(pts, x1);
  double f2 = strip_gap(pts, x2);
  for (int i = 0; i < 90; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = strip_gap(pts, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = strip_gap(pts, x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

nlohmann::json region_to_json(const ConvexRegion& region) {
  nlohmann::json j;
  if (region.kind == RegionKind::kHexagon) {
    j["kind"] = "hexagon";
    j["width"] = region.size;
  } else {
    j["kind"] = "square";
    j["side"] = region.size;
  }
  return j;
}

int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
    }
  }
  return line;
}

}  // namespace

ConvexRegion ConvexRegion::hexagon(double width) {
  if (!std::isfinite(width) || width <= 0.0) {
    throw std::invalid_argument("hexagon width must be positive");
  }
  return ConvexRegion{RegionKind::kHexagon, width};
}

ConvexRegion ConvexRegion::square(double side) {
  if (!std::isfinite(side) || side <= 0.0) {
    throw std::invalid_argument("square side must be positive");
  }
  return ConvexRegion{RegionKind::kSquare, side};
}

std::vector<Point> ConvexRegion::polygon() const {
  std::vector<Point> poly;
  if (kind == RegionKind::kHexagon) {
    double circumradius = size / kSqrt3;
    poly.reserve(6);
    for (int i = 0; i < 6; ++i) {
      poly.push_back(circumradius * unit(kPi * i / 3.0));
    }
  } else {
    poly = {{0.0, 0.0}, {size, 0.0}, {size, size}, {0.0, size}};
  }
  return poly;
}

bool region_contains(const ConvexRegion& region, Point p, double tol) {
  if (tol < 0.0) {
    throw std::invalid_argument("containment tolerance must be non-negative");
  }
  for (const HalfPlane& plane : boundary_halfplanes(region)) {
    if (dot(p - plane.anchor, plane.normal) > tol) {
      return false;
    }
  }
  return true;
}

VerifyState verify_covering(const CoveringCertificate& cert, double h) {
  if (!std::isfinite(h) || h <= 0.0) {
    throw std::invalid_argument("grid step must be positive");
  }
  if (!std::isfinite(cert.radius) || cert.radius <= 0.0) {
    throw std::invalid_argument("certificate radius must be positive");
  }
  if (cert.centers.empty()) {
    throw std::invalid_argument("certificate must have at least one center");
  }
  std::vector<Point> poly = cert.region.polygon();
  std::vector<HalfPlane> planes = boundary_halfplanes(cert.region);
  double min_x = poly[0].x, max_x = poly[0].x, min_y = poly[0].y, max_y = poly[0].y;
  for (const Point& p : poly) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  double eff2 = sq(cert.radius * kRadiusSlack);
  double fail2 = sq(cert.radius + kFailureGuard);
  int n_centers = static_cast<int>(cert.centers.size());

  struct Cell {
    double x;
    double y;
    double size;
    int hint;
    bool interior;
  };
  std::vector<Cell> work;
  work.push_back({min_x, min_y, std::max(max_x - min_x, max_y - min_y), 0, false});
  std::vector<Point> clipped;
  while (!work.empty()) {
    Cell cell = work.back();
    work.pop_back();
    Point corners[4] = {{cell.x, cell.y},
                        {cell.x + cell.size, cell.y},
                        {cell.x + cell.size, cell.y + cell.size},
                        {cell.x, cell.y + cell.size}};
    bool interior = cell.interior;
    const Point* verts = corners;
    int n_verts = 4;
    if (!interior) {
      interior = true;
      bool outside = false;
      for (const HalfPlane& plane : planes) {
        int beyond = 0;
        for (const Point& c : corners) {
          if (dot(c - plane.anchor, plane.normal) > 0.0) {
            ++beyond;
          }
        }
        if (beyond == 4) {
          outside = true;
          break;
        }
        if (beyond > 0) {
          interior = false;
        }
      }
      if (outside) {
        continue;
      }
      if (!interior) {
        clipped.assign(corners, corners + 4);
        for (const HalfPlane& plane : planes) {
          clipped = clip_halfplane(clipped, plane.anchor, plane.normal);
          if (clipped.empty()) {
            break;
          }
        }
        if (clipped.empty()) {
          continue;
        }
        verts = clipped.data();
        n_verts = static_cast<int>(clipped.size());
      }
    }
    if (cell.size <= h) {
      bool certified = false;
      for (int t = 0; t < n_centers && !certified; ++t) {
        Point c = cert.centers[(cell.hint + t) % n_centers];
        bool all = true;
        for (int v = 0; v < n_verts; ++v) {
          if (dist_sq(verts[v], c) > eff2) {
            all = false;
            break;
          }
        }
        certified = all;
      }
      if (certified) {
        continue;
      }
    }
    for (int v = 0; v < n_verts; ++v) {
      bool covered = false;
      for (const Point& c : cert.centers) {
        if (dist_sq(verts[v], c) <= fail2) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        return {VerifyStatus::kFailed, h};
      }
    }
    if (cell.size <= kCellFloor) {
      return {VerifyStatus::kUnverified, h};
    }
    Point mid{cell.x + cell.size / 2.0, cell.y + cell.size / 2.0};
    int hint = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n_centers; ++j) {
      double d = dist_sq(mid, cert.centers[j]);
      if (d < best) {
        best = d;
        hint = j;
      }
    }
    double half = cell.size / 2.0;
    work.push_back({cell.x, cell.y, half, hint, interior});
    work.push_back({cell.x + half, cell.y, half, hint, interior});
    work.push_back({cell.x, cell.y + half, half, hint, interior});
    work.push_back({cell.x + half, cell.y + half, half, hint, interior});
  }
  return {VerifyStatus::kCertified, h};
}

CoveringCertificate certify(CoveringCertificate cert, double h) {
  cert.verified = verify_covering(cert, h);
  return cert;
}

std::vector<CoveringCertificate> builtin_certificates() {
  const ConvexRegion hex = ConvexRegion::hexagon(1.0);
  std::vector<CoveringCertificate> certs;

  certs.push_back({hex, kJungRadius, {Point{0.0, 0.0}}, "jung-disk", {}});

  certs.push_back({hex,
                   kHalfHexRadius,
                   {Point{kSqrt3 / 12.0, 0.0}, Point{-kSqrt3 / 12.0, 0.0}},
                   "half-hexagon-pentagons",
                   {}});

  certs.push_back({hex,
                   kBorsukRadius,
                   {Point{-kSqrt3 / 8.0, 0.125}, Point{kSqrt3 / 8.0, 0.125}, Point{0.0, -0.25}},
                   "borsuk-pentagons",
                   {}});

  std::vector<Point> six;
  for (int i = 0; i < 6; ++i) {
    six.push_back((1.0 / 3.0) * unit(kPi / 6.0 + kPi * i / 3.0));
  }
  certs.push_back({hex, 1.0 / 3.0, six, "six-triangles", {}});

  std::vector<Point> seven{Point{0.0, 0.0}};
  for (int i = 0; i < 6; ++i) {
    seven.push_back((kSqrt3 / 4.0) * unit(kPi * i / 3.0));
  }
  certs.push_back({hex, 0.25, seven, "seven-disks", {}});

  // Derived with optimize_covering; true covering radius ≈ 0.32167.
  certs.push_back({hex,
                   1.0 / 3.0,
                   {Point{-0.075106711800006748, 0.41603831990771289},
                    Point{-0.25780296422367066, 0.036893704002703476},
                    Point{0.27932373759064721, -0.21490257731467147},
                    Point{0.33616744542977928, 0.19451673069058281},
                    Point{-0.15958524438864288, -0.3606977639033439}},
                   "five-disks",
                   {}});

  certs.push_back({ConvexRegion::square(1.0),
                   kSquareQuarterRadius,
                   {Point{0.25, 0.25}, Point{0.75, 0.25}, Point{0.75, 0.75}, Point{0.25, 0.75}},
                   "square-quarters",
                   {}});
  return certs;
}

const std::vector<CoveringCertificate>& certified_builtins() {
  static const std::vector<CoveringCertificate> cache = [] {
    std::vector<CoveringCertificate> certs = builtin_certificates();
    for (CoveringCertificate& cert : certs) {
      cert.verified = verify_covering(cert, kBuiltinGrid);
    }
    return certs;
  }();
  return cache;
}

CoveringCertificate optimize_covering(const ConvexRegion& region, int k, int restarts,
                                      std::uint64_t seed) {
  if (k < 1) {
    throw std::invalid_argument("disk count must be at least 1");
  }
  if (restarts < 1) {
    throw std::invalid_argument("restart count must be at least 1");
  }
  std::vector<Point> poly = region.polygon();
  double best_radius = std::numeric_limits<double>::infinity();
  std::vector<Point> best_centers;
  for (int restart = 0; restart < restarts; ++restart) {
    std::vector<Point> centers = initial_centers(region, k, restart, seed);
    lloyd_minimax(poly, centers);
    double radius = covering_radius(poly, centers);
    if (radius < best_radius) {
      best_radius = radius;
      best_centers = centers;
    }
  }
  CoveringCertificate cert{region, best_radius + 1e-4, std::move(best_centers),
                           "optimized-k" + std::to_string(k), {}};
  cert.verified = verify_covering(cert, 1e-3);
  return cert;
}

int pigeonhole_bound(const CoveringCertificate& cert, int n) {
  if (cert.verified.status != VerifyStatus::kCertified) {
    throw std::invalid_argument("pigeonhole bound requires a certified covering");
  }
  if (n < 1) {
    throw std::invalid_argument("point count must be positive");
  }
  int k = static_cast<int>(cert.centers.size());
  return (n + k - 1) / k;
}

RigidMotion embed_in_hexagon(const PointSet& points) {
  if (diameter(points) > 1.0 + 1e-12) {
    throw std::invalid_argument("point set diameter exceeds one");
  }
  std::vector<Point> pts(points.begin(), points.end());
  const int kSamples = 1048;  // step ≈ 1e-3 rad over [0, π/3]
  const double step = (kPi / 3.0) / kSamples;
  std::vector<double> gaps(kSamples + 1);
  for (int i = 0; i <= kSamples; ++i) {
    gaps[i] = strip_gap(pts, i * step);
  }
  std::vector<int> minima;
  for (int i = 0; i <= kSamples; ++i) {
    double left = i > 0 ? gaps[i - 1] : std::numeric_limits<double>::infinity();
    double right = i < kSamples ? gaps[i + 1] : std::numeric_limits<double>::infinity();
    if (gaps[i] <= left && gaps[i] <= right) {
      minima.push_back(i);
    }
  }
  std::sort(minima.begin(), minima.end(),
            [&](int a, int b) { return gaps[a] < gaps[b]; });
  if (minima.size() > 6) {
    minima.resize(6);
  }
  double best_theta = 0.0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (int i : minima) {
    double lo = std::max(0.0, (i - 1) * step);
    double hi = std::min(kPi / 3.0, (i + 1) * step);
    double theta = golden_refine(pts, lo, hi);
    double gap = strip_gap(pts, theta);
    if (gap < best_gap) {
      best_gap = gap;
      best_theta = theta;
    }
  }
  if (best_gap > kEmbedTol) {
    throw embedding_failure_error("no rotation admits a feasible hexagon translation");
  }
  StripSystem sys = strip_system(pts, best_theta);
  double s_lo = std::max(sys.lo[1], sys.lo[0] + sys.lo[2]);
  double s_hi = std::min(sys.hi[1], sys.hi[0] + sys.hi[2]);
  double t2 = 0.5 * (s_lo + s_hi);
  double t1_lo = std::max(sys.lo[0], t2 - sys.hi[2]);
  double t1_hi = std::min(sys.hi[0], t2 - sys.lo[2]);
  double t1 = 0.5 * (t1_lo + t1_hi);
  double t3 = t2 - t1;
  RigidMotion motion{best_theta, {(t1 - t3) / kSqrt3, t2}};
  ConvexRegion hex = ConvexRegion::hexagon(1.0);
  for (const Point& p : pts) {
    if (!region_contains(hex, motion.apply(p), kEmbedTol)) {
      throw embedding_failure_error("hexagon embedding failed the containment check");
    }
  }
  return motion;
}

RigidMotion embed_in_square(const PointSet& points) {
  if (diameter(points) > 1.0 + 1e-12) {
    throw std::invalid_argument("point set diameter exceeds one");
  }
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  for (const Point& p : points) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  RigidMotion motion{0.0, {-min_x, -min_y}};
  ConvexRegion sqr = ConvexRegion::square(1.0);
  for (const Point& p : points) {
    if (!region_contains(sqr, motion.apply(p), kEmbedTol)) {
      throw embedding_failure_error("square embedding failed the containment check");
    }
  }
  return motion;
}

std::string certificate_to_json(const CoveringCertificate& cert) {
  nlohmann::json j;
  j["region"] = region_to_json(cert.region);
  j["radius"] = cert.radius;
  nlohmann::json centers = nlohmann::json::array();
  for (const Point& c : cert.centers) {
    centers.push_back({c.x, c.y});
  }
  j["centers"] = std::move(centers);
  j["provenance"] = cert.provenance;
  if (cert.verified.status == VerifyStatus::kCertified) {
    j["verified"] = {{"grid_h", cert.verified.grid_h}};
  } else {
    j["verified"] = nullptr;
  }
  return j.dump(2);
}

CoveringCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid certificate JSON: ") + e.what(),
                      line_of_byte(text, e.byte));
  }
  try {
    CoveringCertificate cert;
    std::string kind = j.at("region").at("kind").get<std::string>();
    if (kind == "hexagon") {
      cert.region = ConvexRegion::hexagon(j.at("region").at("width").get<double>());
    } else if (kind == "square") {
      cert.region = ConvexRegion::square(j.at("region").at("side").get<double>());
    } else {
      throw parse_error("unknown region kind: " + kind, 0);
    }
    cert.radius = j.at("radius").get<double>();
    if (!std::isfinite(cert.radius) || cert.radius <= 0.0) {
      throw parse_error("certificate radius must be positive", 0);
    }
    for (const nlohmann::json& c : j.at("centers")) {
      if (!c.is_array() || c.size() != 2) {
        throw parse_error("certificate centers must be [x, y] pairs", 0);
      }
      Point p{c[0].get<double>(), c[1].get<double>()};
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw parse_error("certificate centers must be finite", 0);
      }
      cert.centers.push_back(p);
    }
    if (cert.centers.empty()) {
      throw parse_error("certificate must have at least one center", 0);
    }
    if (j.contains("provenance")) {
      cert.provenance = j.at("provenance").get<std::string>();
    }
    if (j.contains("verified") && !j.at("verified").is_null()) {
      double grid_h = j.at("verified").at("grid_h").get<double>();
      if (!std::isfinite(grid_h) || grid_h <= 0.0) {
        throw parse_error("verified grid step must be positive", 0);
      }
      cert.verified = {VerifyStatus::kCertified, grid_h};
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid certificate JSON: ") + e.what(), 0);
  }
}

void save_certificate(const CoveringCertificate& cert, const std::string& path) {
  std::ofstream file(path);
  if (!file) {
    throw io_error("cannot open certificate file for writing: " + path);
  }
  file << certificate_to_json(cert) << "\n";
  if (!file) {
    throw io_error("cannot write certificate file: " + path);
  }
}

CoveringCertificate load_certificate(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw io_error("cannot open certificate file: " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return certificate_from_json(buffer.str());
}

}  // namespace dartbound
