#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dartbound/bounds.hpp"
#include "dartbound/constructions.hpp"
#include "dartbound/coverage.hpp"
#include "dartbound/covers.hpp"
#include "dartbound/geometry.hpp"
#include "dartbound/pointset_io.hpp"
#include "dartbound/search.hpp"

namespace py = pybind11;

namespace {

using dartbound::CountMode;
using dartbound::CoveringCertificate;
using dartbound::Point;
using dartbound::PointSet;

using Coords = std::vector<std::pair<double, double>>;

PointSet to_points(const Coords& coords) {
  std::vector<Point> points;
  points.reserve(coords.size());
  for (const auto& [x, y] : coords) {
    points.push_back({x, y});
  }
  return PointSet(std::move(points));
}

Coords from_points(const PointSet& points) {
  Coords coords;
  coords.reserve(points.size());
  for (const Point& p : points) {
    coords.emplace_back(p.x, p.y);
  }
  return coords;
}

CountMode to_mode(const std::string& mode, double tau) {
  if (mode == "exact") {
    return CountMode::exact();
  }
  if (mode == "inflated") {
    return CountMode::inflated(tau);
  }
  if (mode == "deflated") {
    return CountMode::deflated(tau);
  }
  throw std::invalid_argument("mode must be exact, inflated or deflated");
}

const char* status_name(dartbound::VerifyStatus status) {
  switch (status) {
    case dartbound::VerifyStatus::kCertified:
      return "certified";
    case dartbound::VerifyStatus::kFailed:
      return "failed";
    default:
      return "unverified";
  }
}

py::dict cert_to_dict(const CoveringCertificate& cert) {
  py::dict region;
  region["kind"] = cert.region.kind == dartbound::RegionKind::kHexagon ? "hexagon" : "square";
  region["size"] = cert.region.size;

  Coords centers;
  for (const Point& c : cert.centers) {
    centers.emplace_back(c.x, c.y);
  }

  py::dict out;
  out["region"] = region;
  out["radius"] = cert.radius;
  out["centers"] = centers;
  out["provenance"] = cert.provenance;
  if (cert.verified.status == dartbound::VerifyStatus::kCertified) {
    py::dict verified;
    verified["grid_h"] = cert.verified.grid_h;
    out["verified"] = verified;
  } else {
    out["verified"] = py::none();
  }
  return out;
}

CoveringCertificate cert_from_dict(const py::dict& d) {
  CoveringCertificate cert;
  py::dict region = d["region"].cast<py::dict>();
  std::string kind = region["kind"].cast<std::string>();
  double size = region["size"].cast<double>();
  if (kind == "hexagon") {
    cert.region = dartbound::ConvexRegion::hexagon(size);
  } else if (kind == "square") {
    cert.region = dartbound::ConvexRegion::square(size);
  } else {
    throw std::invalid_argument("unknown region kind: " + kind);
  }
  cert.radius = d["radius"].cast<double>();
  for (const auto& [x, y] : d["centers"].cast<Coords>()) {
    cert.centers.push_back({x, y});
  }
  if (d.contains("provenance")) {
    cert.provenance = d["provenance"].cast<std::string>();
  }
  if (d.contains("verified") && !d["verified"].is_none()) {
    cert.verified.status = dartbound::VerifyStatus::kCertified;
    cert.verified.grid_h = d["verified"].cast<py::dict>()["grid_h"].cast<double>();
  }
  return cert;
}

py::dict motion_dict(const dartbound::RigidMotion& motion, const PointSet& points) {
  Coords moved;
  for (const Point& p : points) {
    Point q = motion.apply(p);
    moved.emplace_back(q.x, q.y);
  }
  py::dict out;
  out["angle"] = motion.angle;
  out["translation"] = std::pair<double, double>{motion.translation.x, motion.translation.y};
  out["points"] = moved;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Guaranteed disk-coverage bounds for unit-diameter point sets";

  m.def(
      "diameter", [](const Coords& points) { return dartbound::diameter(to_points(points)); },
      py::arg("points"));

  m.def(
      "smallest_enclosing_circle",
      [](const Coords& points) {
        dartbound::Disk disk = dartbound::smallest_enclosing_circle(to_points(points));
        return py::make_tuple(std::pair<double, double>{disk.center.x, disk.center.y},
                              disk.radius);
      },
      py::arg("points"));

  m.def(
      "max_coverage",
      [](const Coords& points, double r, const std::string& mode, double tau) {
        dartbound::CoverageResult result =
            dartbound::max_coverage(to_points(points), r, to_mode(mode, tau));
        py::dict out;
        out["count"] = result.count;
        out["witness_center"] =
            std::pair<double, double>{result.witness.center.x, result.witness.center.y};
        return out;
      },
      py::arg("points"), py::arg("r"), py::arg("mode") = "exact", py::arg("tau") = 1e-6);

  m.def(
      "triangle_construction",
      [](int n) { return from_points(dartbound::triangle_construction(n)); }, py::arg("n"));
  m.def(
      "uniform_circle_construction",
      [](int n) { return from_points(dartbound::uniform_circle_construction(n)); }, py::arg("n"));
  m.def(
      "reuleaux_nine", [](double epsilon) { return from_points(dartbound::reuleaux_nine(epsilon)); },
      py::arg("epsilon") = 0.02);
  m.def(
      "reuleaux_3n",
      [](int n, double epsilon, double delta) {
        dartbound::ConstructionParams params;
        params.n = n;
        params.epsilon = epsilon;
        params.delta = delta;
        return from_points(dartbound::reuleaux_3n(params));
      },
      py::arg("n"), py::arg("epsilon") = 0.02, py::arg("delta") = 1e-4);
  m.def(
      "concentric_construction",
      [](int n, double epsilon) {
        return from_points(dartbound::concentric_construction(n, epsilon));
      },
      py::arg("n"), py::arg("epsilon") = 0.005);
  m.def(
      "small_n_construction",
      [](int n) { return from_points(dartbound::small_n_construction(n)); }, py::arg("n"));
  m.def(
      "reuleaux_midpoint_construction",
      [](int n) { return from_points(dartbound::reuleaux_midpoint_construction(n)); },
      py::arg("n"));
  m.def(
      "square_construction",
      [](int n) { return from_points(dartbound::square_construction(n)); }, py::arg("n"));

  m.def(
      "lower_bound",
      [](int n, double r) {
        dartbound::Bound bound = dartbound::lower_bound(n, r);
        return py::make_tuple(bound.value, bound.witness);
      },
      py::arg("n"), py::arg("r"));
  m.def(
      "upper_bound",
      [](int n, double r) {
        dartbound::Bound bound = dartbound::upper_bound(n, r);
        return py::make_tuple(bound.value, bound.witness);
      },
      py::arg("n"), py::arg("r"));

  m.def("table_reproduce", [] {
    py::list rows;
    for (const dartbound::BoundsRecord& record : dartbound::table_reproduce()) {
      py::dict row;
      row["n"] = record.n;
      row["r"] = record.r;
      row["lower"] = record.lower;
      row["upper"] = record.upper;
      row["lower_witness"] = record.lower_witness;
      row["upper_witness"] = record.upper_witness;
      rows.append(row);
    }
    return rows;
  });

  m.def("default_r_grid", [] { return dartbound::default_r_grid(); });
  m.def(
      "step_function_data",
      [](const std::vector<double>& grid) {
        std::vector<std::tuple<double, double, double>> out;
        for (const dartbound::StepPoint& p : dartbound::step_function_data(grid)) {
          out.emplace_back(p.r, p.c_lower, p.c_upper);
        }
        return out;
      },
      py::arg("grid"));
  m.def(
      "emit_plot",
      [](const std::string& path) {
        dartbound::StepSeries series = dartbound::step_function_data(dartbound::default_r_grid());
        return dartbound::emit_plot(series, path);
      },
      py::arg("path"));

  m.def("builtin_certificates", [] {
    py::list out;
    for (const CoveringCertificate& cert : dartbound::certified_builtins()) {
      out.append(cert_to_dict(cert));
    }
    return out;
  });
  m.def(
      "verify_covering",
      [](const py::dict& cert, double h) {
        return std::string(status_name(dartbound::verify_covering(cert_from_dict(cert), h).status));
      },
      py::arg("certificate"), py::arg("grid_h") = 1e-3);
  m.def(
      "optimize_covering",
      [](int k, int restarts, std::uint64_t seed) {
        return cert_to_dict(
            dartbound::optimize_covering(dartbound::ConvexRegion::hexagon(1.0), k, restarts, seed));
      },
      py::arg("k"), py::arg("restarts") = 8, py::arg("seed") = 0);
  m.def(
      "pigeonhole_bound",
      [](const py::dict& cert, int n) {
        return dartbound::pigeonhole_bound(cert_from_dict(cert), n);
      },
      py::arg("certificate"), py::arg("n"));

  m.def(
      "embed_in_hexagon",
      [](const Coords& coords) {
        PointSet points = to_points(coords);
        return motion_dict(dartbound::embed_in_hexagon(points), points);
      },
      py::arg("points"));
  m.def(
      "embed_in_square",
      [](const Coords& coords) {
        PointSet points = to_points(coords);
        return motion_dict(dartbound::embed_in_square(points), points);
      },
      py::arg("points"));

  m.def(
      "normalize_diameter",
      [](const Coords& points) {
        return from_points(dartbound::normalize_diameter(to_points(points)));
      },
      py::arg("points"));
  m.def(
      "extremal_search",
      [](int n, double r, std::uint64_t seed, int iterations, int restarts) {
        dartbound::SearchConfig cfg;
        cfg.n = n;
        cfg.r = r;
        cfg.seed = seed;
        cfg.iterations = iterations;
        cfg.restarts = restarts;
        dartbound::SearchResult result = dartbound::extremal_search(cfg);
        py::dict out;
        out["best"] = from_points(result.best);
        out["objective"] = result.objective;
        out["trace"] = result.trace;
        return out;
      },
      py::arg("n"), py::arg("r"), py::arg("seed") = 0, py::arg("iterations") = 50000,
      py::arg("restarts") = 8);

  m.def(
      "save_pointset",
      [](const Coords& points, const std::string& path) {
        dartbound::save_pointset(to_points(points), path);
      },
      py::arg("points"), py::arg("path"));
  m.def(
      "load_pointset",
      [](const std::string& path) { return from_points(dartbound::load_pointset(path)); },
      py::arg("path"));
}
