#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dartbound/geometry.hpp"

namespace dartbound {

enum class RegionKind { kHexagon, kSquare };

/// Convex universal-cover region in canonical pose: hexagons sit centered at
/// the origin with horizontal top and bottom edges, squares sit axis-aligned
/// with one corner at the origin.
struct ConvexRegion {
  RegionKind kind = RegionKind::kHexagon;
  double size = 1.0;

  static ConvexRegion hexagon(double width);
  static ConvexRegion square(double side);

  /// Counterclockwise boundary polygon.
  std::vector<Point> polygon() const;
};

/// True iff p lies in the region dilated by tol.
bool region_contains(const ConvexRegion& region, Point p, double tol);

enum class VerifyStatus { kUnverified, kCertified, kFailed };

struct VerifyState {
  VerifyStatus status = VerifyStatus::kUnverified;
  double grid_h = 0.0;
};

/// A claim that k disks of the given radius, placed at `centers`, cover the
/// region. `verified` records the outcome of verify_covering.
struct CoveringCertificate {
  ConvexRegion region;
  double radius = 0.0;
  std::vector<Point> centers;
  std::string provenance;
  VerifyState verified;
};

/// Certify or refute a covering claim by adaptive cell subdivision. Cells of
/// side at most h are accepted once every vertex of the cell clipped to the
/// region lies in a single disk (dilated by a factor 1e-12, which absorbs
/// clipping arithmetic); a clipped vertex farther than radius + 1e-9 from
/// every center refutes the claim. Inconclusive cells are quadrisected; the
/// result is unverified only if subdivision bottoms out near the precision
/// floor, which no valid certificate reaches.
VerifyState verify_covering(const CoveringCertificate& cert, double h);

/// Copy of cert with `verified` set to verify_covering(cert, h).
CoveringCertificate certify(CoveringCertificate cert, double h);

/// The covering certificates used by the bound tables: the one-disk enclosing
/// cover, the two half-hexagon pentagons, the three congruent pentagons, the
/// five-disk covering, the six triangle circumdisks and the seven-disk
/// covering of the width-1 hexagon, plus the four quarter covers of the unit
/// square. Radii are stored at their exact nominal values; all certify at
/// h = 1e-3.
std::vector<CoveringCertificate> builtin_certificates();

/// builtin_certificates() with every certificate verified at h = 1e-3,
/// computed once per process.
const std::vector<CoveringCertificate>& certified_builtins();

/// Locally minimize the covering radius of k disks over the region: seeded
/// multistart, each start refined by alternating nearest-center partition and
/// exact recentering of every part at its smallest enclosing circle. The best
/// layout is returned with its radius inflated by 1e-4 and verified at
/// h = 1e-3.
CoveringCertificate optimize_covering(const ConvexRegion& region, int k, int restarts,
                                      std::uint64_t seed);

/// ⌈n/k⌉ points of any n-point diameter-1 set lie in one disk of a verified
/// covering; rejects certificates that are not certified.
int pigeonhole_bound(const CoveringCertificate& cert, int n);

/// Rigid motion placing a unit-diameter point set inside hexagon(1), found by
/// scanning the rotation angle and solving the three strip constraints for
/// the translation.
RigidMotion embed_in_hexagon(const PointSet& points);

/// Rigid motion placing a unit-diameter point set inside square(1).
RigidMotion embed_in_square(const PointSet& points);

std::string certificate_to_json(const CoveringCertificate& cert);
CoveringCertificate certificate_from_json(const std::string& text);
void save_certificate(const CoveringCertificate& cert, const std::string& path);
CoveringCertificate load_certificate(const std::string& path);

}  // namespace dartbound
