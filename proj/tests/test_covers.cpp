#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <vector>

#include "dartbound/constructions.hpp"
#include "dartbound/coverage.hpp"
#include "dartbound/covers.hpp"

namespace db = dartbound;

namespace {

db::PointSet random_diameter_one(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  std::vector<db::Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    pts.push_back({coord(rng), coord(rng)});
  }
  db::PointSet raw{pts};
  double d = db::diameter(raw);
  if (d == 0.0) {
    return raw;
  }
  for (db::Point& p : pts) {
    p = (1.0 / d) * p;
  }
  return db::PointSet{pts};
}

}  // namespace

TEST_CASE("regions") {
  db::ConvexRegion hex = db::ConvexRegion::hexagon(1.0);
  CHECK(hex.polygon().size() == 6);
  for (const db::Point& v : hex.polygon()) {
    CHECK(db::norm(v) == doctest::Approx(db::kJungRadius).epsilon(1e-12));
  }
  CHECK(db::region_contains(hex, {0.0, 0.0}, 0.0));
  CHECK_FALSE(db::region_contains(hex, {db::kJungRadius + 0.01, 0.0}, 0.0));
  CHECK(db::region_contains(hex, {0.0, 0.5 - 1e-9}, 0.0));
  CHECK_FALSE(db::region_contains(hex, {0.0, 0.5 + 1e-6}, 0.0));
  CHECK(db::region_contains(hex, {0.0, 0.5 + 5e-10}, 1e-9));

  db::ConvexRegion sqr = db::ConvexRegion::square(1.0);
  CHECK(sqr.polygon().size() == 4);
  CHECK(db::region_contains(sqr, {0.5, 0.5}, 0.0));
  CHECK(db::region_contains(sqr, {0.0, 1.0}, 0.0));
  CHECK_FALSE(db::region_contains(sqr, {1.0 + 1e-6, 0.5}, 0.0));

  CHECK_THROWS_AS(db::ConvexRegion::hexagon(0.0), std::invalid_argument);
  CHECK_THROWS_AS(db::ConvexRegion::square(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(db::region_contains(hex, {0.0, 0.0}, -1.0), std::invalid_argument);
}

TEST_CASE("verify covering basic outcomes") {
  db::ConvexRegion hex = db::ConvexRegion::hexagon(1.0);

  db::CoveringCertificate jung{hex, db::kJungRadius, {{0.0, 0.0}}, "jung", {}};
  CHECK(db::verify_covering(jung, 1e-3).status == db::VerifyStatus::kCertified);

  db::CoveringCertificate small{hex, 0.2, {{0.0, 0.0}}, "too-small", {}};
  CHECK(db::verify_covering(small, 1e-2).status == db::VerifyStatus::kFailed);

  db::CoveringCertificate six{hex, 0.33, db::builtin_certificates()[3].centers, "under", {}};
  CHECK(db::verify_covering(six, 1e-2).status == db::VerifyStatus::kFailed);

  CHECK_THROWS_AS(db::verify_covering(jung, 0.0), std::invalid_argument);
  db::CoveringCertificate bad_radius{hex, 0.0, {{0.0, 0.0}}, "bad", {}};
  CHECK_THROWS_AS(db::verify_covering(bad_radius, 1e-3), std::invalid_argument);
  db::CoveringCertificate no_centers{hex, 0.5, {}, "bad", {}};
  CHECK_THROWS_AS(db::verify_covering(no_centers, 1e-3), std::invalid_argument);

  db::CoveringCertificate certified = db::certify(jung, 1e-3);
  CHECK(certified.verified.status == db::VerifyStatus::kCertified);
  CHECK(certified.verified.grid_h == 1e-3);
}

TEST_CASE("builtin certificates") {
  std::vector<db::CoveringCertificate> certs = db::builtin_certificates();
  REQUIRE(certs.size() == 7);

  CHECK(certs[0].centers.size() == 1);
  CHECK(certs[0].radius == db::kJungRadius);
  CHECK(certs[1].centers.size() == 2);
  CHECK(certs[1].radius == db::kHalfHexRadius);
  CHECK(certs[2].centers.size() == 3);
  CHECK(certs[2].radius == db::kBorsukRadius);
  CHECK(certs[3].centers.size() == 6);
  CHECK(certs[3].radius == 1.0 / 3.0);
  CHECK(certs[4].centers.size() == 7);
  CHECK(certs[4].radius == 0.25);
  CHECK(certs[5].centers.size() == 5);
  CHECK(certs[5].radius == 1.0 / 3.0);
  CHECK(certs[6].centers.size() == 4);
  CHECK(certs[6].radius == db::kSquareQuarterRadius);
  CHECK(certs[6].region.kind == db::RegionKind::kSquare);

  for (const db::CoveringCertificate& cert : certs) {
    CHECK(db::verify_covering(cert, 1e-3).status == db::VerifyStatus::kCertified);
  }

  for (const db::CoveringCertificate& cert : db::certified_builtins()) {
    CHECK(cert.verified.status == db::VerifyStatus::kCertified);
  }
}

TEST_CASE("certified coverings are sound on random samples") {
  std::mt19937_64 rng(20240816);
  for (const db::CoveringCertificate& cert : db::certified_builtins()) {
    std::vector<db::Point> poly = cert.region.polygon();
    double min_x = poly[0].x, max_x = poly[0].x, min_y = poly[0].y, max_y = poly[0].y;
    for (const db::Point& p : poly) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    std::uniform_real_distribution<double> ux(min_x, max_x);
    std::uniform_real_distribution<double> uy(min_y, max_y);
    double r2 = cert.radius * cert.radius;
    int accepted = 0;
    while (accepted < 100000) {
      db::Point p{ux(rng), uy(rng)};
      if (!db::region_contains(cert.region, p, 0.0)) {
        continue;
      }
      ++accepted;
      bool covered = false;
      for (const db::Point& c : cert.centers) {
        if (db::dist_sq(p, c) <= r2) {
          covered = true;
          break;
        }
      }
      REQUIRE(covered);
    }
  }
}

TEST_CASE("pigeonhole bound") {
  const std::vector<db::CoveringCertificate>& certs = db::certified_builtins();
  CHECK(db::pigeonhole_bound(certs[3], 25) == 5);
  CHECK(db::pigeonhole_bound(certs[5], 21) == 5);
  CHECK(db::pigeonhole_bound(certs[0], 1) == 1);
  CHECK(db::pigeonhole_bound(certs[4], 28) == 4);
  CHECK(db::pigeonhole_bound(certs[6], 28) == 7);

  db::CoveringCertificate raw = db::builtin_certificates()[3];
  CHECK_THROWS_AS(db::pigeonhole_bound(raw, 25), std::invalid_argument);
  CHECK_THROWS_AS(db::pigeonhole_bound(certs[3], 0), std::invalid_argument);
}

TEST_CASE("optimize covering") {
  db::ConvexRegion hex = db::ConvexRegion::hexagon(1.0);

  db::CoveringCertificate one = db::optimize_covering(hex, 1, 2, 1);
  CHECK(one.radius <= 0.5774 + 1e-3);
  CHECK(one.verified.status == db::VerifyStatus::kCertified);

  db::CoveringCertificate three = db::optimize_covering(hex, 3, 4, 1);
  CHECK(three.radius <= 0.4331 + 1e-3);
  CHECK(three.verified.status == db::VerifyStatus::kCertified);

  db::CoveringCertificate five = db::optimize_covering(hex, 5, 8, 1);
  CHECK(five.radius <= 1.0 / 3.0 + 1e-3);
  CHECK(five.verified.status == db::VerifyStatus::kCertified);
  CHECK(db::pigeonhole_bound(five, 21) == 5);

  double prev = std::numeric_limits<double>::infinity();
  for (int restarts = 1; restarts <= 4; ++restarts) {
    db::CoveringCertificate cert = db::optimize_covering(hex, 3, restarts, 9);
    CHECK(cert.radius <= prev + 1e-15);
    prev = cert.radius;
  }

  CHECK_THROWS_AS(db::optimize_covering(hex, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(db::optimize_covering(hex, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("hexagon embedding") {
  db::ConvexRegion hex = db::ConvexRegion::hexagon(1.0);

  db::PointSet lone{{{0.3, -0.2}}};
  db::RigidMotion m = db::embed_in_hexagon(lone);
  CHECK(db::norm(m.apply(lone[0])) <= 1e-9);

  db::PointSet triangle{{{0.0, 0.0}, {1.0, 0.0}, {0.5, db::kSqrt3 / 2.0}}};
  db::RigidMotion mt = db::embed_in_hexagon(triangle);
  for (const db::Point& p : triangle) {
    CHECK(db::region_contains(hex, mt.apply(p), 1e-9));
  }

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> count(1, 50);
  for (int trial = 0; trial < 120; ++trial) {
    db::PointSet ps = random_diameter_one(rng, count(rng));
    db::RigidMotion motion = db::embed_in_hexagon(ps);
    for (const db::Point& p : ps) {
      CHECK(db::region_contains(hex, motion.apply(p), 1e-9));
    }
  }

  db::PointSet wide{{{0.0, 0.0}, {1.1, 0.0}}};
  CHECK_THROWS_AS(db::embed_in_hexagon(wide), std::invalid_argument);
}

TEST_CASE("square embedding") {
  db::ConvexRegion sqr = db::ConvexRegion::square(1.0);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> count(1, 50);
  for (int trial = 0; trial < 120; ++trial) {
    db::PointSet ps = random_diameter_one(rng, count(rng));
    db::RigidMotion motion = db::embed_in_square(ps);
    for (const db::Point& p : ps) {
      CHECK(db::region_contains(sqr, motion.apply(p), 1e-9));
    }
  }
  db::PointSet lone{{{0.4, 0.9}}};
  db::RigidMotion m = db::embed_in_square(lone);
  CHECK(m.apply(lone[0]).x == doctest::Approx(0.0));
  CHECK(m.apply(lone[0]).y == doctest::Approx(0.0));
}

TEST_CASE("pigeonhole covers an embedded set") {
  std::mt19937_64 rng(23);
  const std::vector<db::CoveringCertificate>& certs = db::certified_builtins();
  std::uniform_int_distribution<int> count(2, 40);
  for (int trial = 0; trial < 25; ++trial) {
    db::PointSet ps = random_diameter_one(rng, count(rng));
    int n = static_cast<int>(ps.size());
    for (const db::CoveringCertificate& cert : certs) {
      db::RigidMotion motion = cert.region.kind == db::RegionKind::kHexagon
                                   ? db::embed_in_hexagon(ps)
                                   : db::embed_in_square(ps);
      std::vector<db::Point> moved;
      moved.reserve(ps.size());
      for (const db::Point& p : ps) {
        moved.push_back(motion.apply(p));
      }
      int need = db::pigeonhole_bound(cert, n);
      int best = 0;
      for (const db::Point& c : cert.centers) {
        int covered = 0;
        for (const db::Point& p : moved) {
          if (db::dist(p, c) <= cert.radius + 1e-9) {
            ++covered;
          }
        }
        best = std::max(best, covered);
      }
      CHECK(best >= need);
      CHECK(db::max_coverage(db::PointSet(moved), cert.radius,
                             db::CountMode::inflated(1e-6))
                .count >= need);
    }
  }
}

TEST_CASE("certificate JSON round trip") {
  db::CoveringCertificate cert = db::certified_builtins()[4];
  std::string text = db::certificate_to_json(cert);
  db::CoveringCertificate back = db::certificate_from_json(text);
  CHECK(back.region.kind == cert.region.kind);
  CHECK(back.region.size == cert.region.size);
  CHECK(back.radius == cert.radius);
  REQUIRE(back.centers.size() == cert.centers.size());
  for (std::size_t i = 0; i < cert.centers.size(); ++i) {
    CHECK(back.centers[i].x == cert.centers[i].x);
    CHECK(back.centers[i].y == cert.centers[i].y);
  }
  CHECK(back.provenance == cert.provenance);
  CHECK(back.verified.status == db::VerifyStatus::kCertified);
  CHECK(back.verified.grid_h == cert.verified.grid_h);

  db::CoveringCertificate raw = db::builtin_certificates()[0];
  db::CoveringCertificate raw_back = db::certificate_from_json(db::certificate_to_json(raw));
  CHECK(raw_back.verified.status == db::VerifyStatus::kUnverified);

  const std::string path = "covers_test_certificate.json";
  db::save_certificate(cert, path);
  db::CoveringCertificate loaded = db::load_certificate(path);
  CHECK(loaded.radius == cert.radius);
  CHECK(loaded.centers.size() == cert.centers.size());
  std::remove(path.c_str());

  CHECK_THROWS_AS(db::load_certificate("no-such-file.json"), db::io_error);
  CHECK_THROWS_AS(db::certificate_from_json("{ not json"), db::parse_error);
  CHECK_THROWS_AS(db::certificate_from_json("{}"), db::parse_error);
  CHECK_THROWS_AS(
      db::certificate_from_json(
          R"({"region":{"kind":"pentagon","width":1.0},"radius":0.5,"centers":[[0,0]]})"),
      db::parse_error);
  CHECK_THROWS_AS(
      db::certificate_from_json(
          R"({"region":{"kind":"hexagon","width":1.0},"radius":-0.5,"centers":[[0,0]]})"),
      db::parse_error);
  try {
    db::certificate_from_json("{\n  \"radius\": oops\n}");
    CHECK(false);
  } catch (const db::parse_error& e) {
    CHECK(e.line() == 2);
  }
}
