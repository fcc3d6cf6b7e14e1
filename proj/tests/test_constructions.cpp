#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dartbound/constructions.hpp"
#include "dartbound/coverage.hpp"

namespace db = dartbound;

namespace {

int multiplicity_at(const db::PointSet& ps, db::Point where) {
  int count = 0;
  for (const db::Point& p : ps) {
    if (p.x == where.x && p.y == where.y) {
      ++count;
    }
  }
  return count;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

double min_pairwise_distance(const db::PointSet& ps) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      best = std::min(best, db::dist(ps[i], ps[j]));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("canonical reuleaux triangle") {
  db::ReuleauxTriangle rt = db::canonical_reuleaux();
  CHECK(db::dist(rt.u, rt.v) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(db::dist(rt.v, rt.w) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(db::dist(rt.u, rt.w) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("triangle construction multiplicities and counts") {
  db::ReuleauxTriangle rt;
  db::PointSet nine = db::triangle_construction(9);
  CHECK(multiplicity_at(nine, rt.u) == 3);
  CHECK(multiplicity_at(nine, rt.v) == 3);
  CHECK(multiplicity_at(nine, rt.w) == 3);

  db::PointSet ten = db::triangle_construction(10);
  CHECK(multiplicity_at(ten, rt.u) == 4);
  CHECK(multiplicity_at(ten, rt.v) == 3);
  CHECK(multiplicity_at(ten, rt.w) == 3);
  CHECK(db::diameter(ten) == 1.0);

  for (int n : {1, 2, 3, 7, 10, 30}) {
    db::PointSet ps = db::triangle_construction(n);
    CHECK(static_cast<int>(ps.size()) == n);
    for (double r : {0.44, 0.45, 0.499}) {
      CHECK(db::max_coverage(ps, r).count == ceil_div(n, 3));
    }
    for (double r : {0.5, 0.52, 0.57}) {
      CHECK(db::max_coverage(ps, r).count == ceil_div(2 * n, 3));
    }
  }

  db::PointSet thirty = db::triangle_construction(30);
  CHECK(db::max_coverage(thirty, 0.58).count == 30);
  CHECK_THROWS_AS(db::triangle_construction(0), std::invalid_argument);
}

TEST_CASE("uniform circle construction") {
  db::PointSet four = db::uniform_circle_construction(4);
  CHECK(four[0].x == doctest::Approx(0.5));
  CHECK(four[1].y == doctest::Approx(0.5));
  CHECK(four[2].x == doctest::Approx(-0.5));
  CHECK(four[3].y == doctest::Approx(-0.5));

  for (int n : {1, 2, 5, 12, 28}) {
    db::PointSet ps = db::uniform_circle_construction(n);
    CHECK(static_cast<int>(ps.size()) == n);
    CHECK(db::diameter(ps) <= 1.0 + 1e-12);
    for (const db::Point& p : ps) {
      CHECK(db::norm(p) == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("uniform circle bound") {
  CHECK(db::uniform_circle_bound(28, db::kSquareQuarterRadius) == 7);
  CHECK(db::uniform_circle_bound(20, 0.25) == 4);
  CHECK(db::uniform_circle_bound(7, 1e-9) == 1);
  CHECK_THROWS_AS(db::uniform_circle_bound(10, 0.5), std::domain_error);
  CHECK_THROWS_AS(db::uniform_circle_bound(10, 0.0), std::domain_error);
  CHECK_THROWS_AS(db::uniform_circle_bound(10, -0.1), std::domain_error);
  CHECK_THROWS_AS(db::uniform_circle_bound(0, 0.3), std::invalid_argument);

  for (int n : {5, 9, 12, 17, 25}) {
    db::PointSet ps = db::uniform_circle_construction(n);
    for (double r : {0.1, 0.2, 0.3, 0.4, 0.45, 0.47}) {
      CHECK(db::max_coverage(ps, r).count <= db::uniform_circle_bound(n, r));
    }
  }

  // Closed disks admit one extra point when a chord equals 2r exactly: at
  // n = 12, r = 1/4 three consecutive points span a diameter-1/2 chord.
  CHECK(db::uniform_circle_bound(12, 0.25) == 2);
  CHECK(db::max_coverage(db::uniform_circle_construction(12), 0.25).count == 3);
}

TEST_CASE("reuleaux nine") {
  db::PointSet nine = db::reuleaux_nine(0.02);
  CHECK(nine.size() == 9);
  CHECK(db::diameter(nine) <= 1.0 + 1e-12);
  CHECK(db::diameter(nine) == doctest::Approx(1.0).epsilon(1e-12));

  // Each vertex pairs with the two near-vertex points on its opposite arc at
  // distance exactly 1 = 2r, and that diametral disk strictly contains three
  // more points; closed disks therefore reach 5, open disks only 4. Deflated
  // counting reproduces the open-disk value.
  CHECK(db::max_coverage(nine, 0.5).count == 5);
  CHECK(db::max_coverage(nine, 0.5, db::CountMode::inflated(1e-6)).count == 5);
  CHECK(db::max_coverage(nine, 0.5, db::CountMode::deflated(1e-6)).count == 4);

  std::vector<db::Point> stacked;
  for (int copy = 0; copy < 3; ++copy) {
    stacked.insert(stacked.end(), nine.begin(), nine.end());
  }
  CHECK(db::max_coverage(db::PointSet(stacked), 0.5, db::CountMode::deflated(1e-6)).count == 12);

  CHECK_THROWS_AS(db::reuleaux_nine(0.0), std::invalid_argument);
  CHECK_THROWS_AS(db::reuleaux_nine(0.1), std::invalid_argument);
}

TEST_CASE("reuleaux 3n chain construction") {
  db::Point centroid{0.5, db::kSqrt3 / 6.0};

  for (int n : {1, 2}) {
    db::ConstructionParams params;
    params.n = n;
    db::PointSet ps = db::reuleaux_3n(params);
    CHECK(static_cast<int>(ps.size()) == 3 * n);
    CHECK(db::diameter(ps) <= 1.0 + 1e-12);
    for (const db::Point& p : ps) {
      CHECK(db::dist(p, centroid) >= 0.5 - 1e-12);
    }
    for (int i = 0; i + 1 < n; ++i) {
      db::Disk chain = db::circumcircle(ps[i], ps[n + i], ps[n + i + 1]);
      CHECK(chain.radius >= 0.5 + params.delta - 1e-12);
    }
    CHECK(db::max_coverage(ps, 0.5, db::CountMode::inflated(1e-6)).count <= n + 1);
  }

  db::ConstructionParams two;
  two.n = 2;
  db::PointSet a = db::reuleaux_3n(two);
  db::PointSet b = db::reuleaux_3n(two);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].y == b[i].y);
  }
  CHECK(db::max_coverage(a, 0.5).count == 3);

  db::ConstructionParams three;
  three.n = 3;
  CHECK_THROWS_AS(db::reuleaux_3n(three), db::construction_failure_error);

  three.delta = 1e-6;
  db::PointSet deep = db::reuleaux_3n(three);
  CHECK(deep.size() == 9);
  CHECK(db::diameter(deep) <= 1.0 + 1e-12);
  for (int i = 0; i + 1 < 3; ++i) {
    db::Disk chain = db::circumcircle(deep[i], deep[3 + i], deep[3 + i + 1]);
    CHECK(chain.radius >= 0.5 + three.delta - 1e-12);
  }
  CHECK(db::max_coverage(deep, 0.5, db::CountMode::inflated(1e-6)).count <= 4);

  db::ConstructionParams bad;
  bad.n = 0;
  CHECK_THROWS_AS(db::reuleaux_3n(bad), std::invalid_argument);
  bad.n = 2;
  bad.delta = 0.02;
  CHECK_THROWS_AS(db::reuleaux_3n(bad), std::invalid_argument);
}

TEST_CASE("concentric construction") {
  db::PointSet fourteen = db::concentric_construction(14);
  CHECK(fourteen.size() == 14);
  int outer = 0;
  int inner = 0;
  for (const db::Point& p : fourteen) {
    if (db::norm(p) > 0.4) {
      ++outer;
    } else {
      ++inner;
    }
  }
  CHECK(outer == 12);
  CHECK(inner == 2);
  CHECK(db::diameter(fourteen) <= 1.0 + 1e-12);

  db::CountMode deflated = db::CountMode::deflated(1e-6);
  CHECK(db::max_coverage(fourteen, 0.25, deflated).count == 2);
  CHECK(db::max_coverage(db::concentric_construction(21), 0.25, deflated).count == 3);
  CHECK(db::max_coverage(db::concentric_construction(7), 0.25, deflated).count == 2);

  // Closed disks pick up a third outer point where consecutive chords span
  // exactly 2r; the deflated mode certifies the intended count.
  CHECK(db::max_coverage(fourteen, 0.25).count == 3);

  for (int n = 8; n <= 28; ++n) {
    db::PointSet ps = db::concentric_construction(n);
    CHECK(static_cast<int>(ps.size()) == n);
    CHECK(db::max_coverage(ps, 0.25, deflated).count == ceil_div(n, 7));
  }

  for (int n : {7, 14, 21, 28}) {
    db::CoverageResult result = db::max_coverage(db::concentric_construction(n), 0.25);
    int covered_outer = 0;
    int covered_inner = 0;
    for (const db::Point& p : db::concentric_construction(n)) {
      if (!result.witness.contains(p)) {
        continue;
      }
      if (db::norm(p) > 0.4) {
        ++covered_outer;
      } else {
        ++covered_inner;
      }
    }
    if (covered_outer >= 2) {
      CHECK(covered_inner == 0);
    }
  }

  CHECK_THROWS_AS(db::concentric_construction(6), std::invalid_argument);
  CHECK_THROWS_AS(db::concentric_construction(14, 0.02), std::invalid_argument);
  CHECK_THROWS_AS(db::concentric_construction(14, 0.0), std::invalid_argument);
}

TEST_CASE("small n construction") {
  CHECK(db::small_n_construction(1).size() == 1);
  for (int n = 2; n <= 6; ++n) {
    db::PointSet ps = db::small_n_construction(n);
    CHECK(static_cast<int>(ps.size()) == n);
    CHECK(db::diameter(ps) <= 1.0 + 1e-12);
    CHECK(min_pairwise_distance(ps) > 0.5);
    CHECK(db::max_coverage(ps, 0.25).count == 1);
  }
  CHECK(db::diameter(db::small_n_construction(5)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(db::small_n_construction(7), std::domain_error);
  CHECK_THROWS_AS(db::small_n_construction(0), std::invalid_argument);
}

TEST_CASE("reuleaux midpoint construction") {
  db::ReuleauxTriangle rt;
  db::Point m1 = rt.w + db::unit(3.0 * db::kPi / 2.0);
  db::Point m2 = rt.v + db::unit(5.0 * db::kPi / 6.0);
  CHECK(m1.x == doctest::Approx(0.5));
  CHECK(m1.y == doctest::Approx(db::kSqrt3 / 2.0 - 1.0));
  CHECK(m2.x == doctest::Approx(1.0 - db::kSqrt3 / 2.0));
  CHECK(m2.y == doctest::Approx(0.5));

  db::Disk sec = db::smallest_enclosing_circle(db::PointSet({rt.u, rt.v, m1, m2}));
  CHECK(sec.radius == doctest::Approx(db::kMidpointRadius).epsilon(1e-9));

  db::PointSet five = db::reuleaux_midpoint_construction(5);
  CHECK(multiplicity_at(five, rt.u) == 1);
  CHECK(multiplicity_at(five, m2) == 1);

  db::PointSet seven = db::reuleaux_midpoint_construction(7);
  CHECK(multiplicity_at(seven, rt.u) == 2);
  CHECK(multiplicity_at(seven, rt.v) == 2);
  CHECK(multiplicity_at(seven, rt.w) == 1);

  db::PointSet ten = db::reuleaux_midpoint_construction(10);
  CHECK(db::diameter(ten) <= 1.0 + 1e-12);
  CHECK(db::max_coverage(ten, 0.51).count <= 6);
  CHECK(db::max_coverage(ten, 0.51).count == 6);
}

TEST_CASE("square construction") {
  db::PointSet sixteen = db::square_construction(16);
  CHECK(sixteen.size() == 16);
  CHECK(db::diameter(sixteen) == doctest::Approx(0.7 * std::sqrt(2.0)));
  CHECK(db::max_coverage(sixteen, 1.0 / 3.0).count == 4);

  CHECK(db::max_coverage(db::square_construction(4), 1.0 / 3.0).count == 1);
  CHECK(db::max_coverage(db::square_construction(17), 1.0 / 3.0).count == 5);
  CHECK(multiplicity_at(db::square_construction(17), {0.0, 0.0}) == 5);
}

TEST_CASE("generators are deterministic") {
  for (int trial = 0; trial < 2; ++trial) {
    db::PointSet a = db::reuleaux_nine(0.03);
    db::PointSet b = db::reuleaux_nine(0.03);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].x == b[i].x);
      CHECK(a[i].y == b[i].y);
    }
  }
}
