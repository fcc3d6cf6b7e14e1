#include "dartbound/cli.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dartbound/bounds.hpp"
#include "dartbound/constructions.hpp"
#include "dartbound/coverage.hpp"
#include "dartbound/covers.hpp"
#include "dartbound/geometry.hpp"
#include "dartbound/pointset_io.hpp"
#include "dartbound/search.hpp"

namespace dartbound {

namespace {

std::string fmt17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

CountMode make_mode(const std::string& mode, double tau) {
  if (mode == "exact") {
    return CountMode::exact();
  }
  if (mode == "inflated") {
    return CountMode::inflated(tau);
  }
  return CountMode::deflated(tau);
}

std::string canonical_name(const std::string& name) {
  std::string out;
  for (char ch : name) {
    if (ch == '-' || ch == '_') {
      continue;
    }
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

struct Generated {
  PointSet points;
  std::vector<std::string> comments;
};

Generated run_generator(const std::string& name, int n, double epsilon,
                        bool has_epsilon) {
  std::string key = canonical_name(name);
  auto named = [&](const std::string& params) {
    return "generate name=" + key + (params.empty() ? "" : " " + params);
  };
  if (key == "triangle") {
    return {triangle_construction(n), {named("n=" + std::to_string(n))}};
  }
  if (key == "uniformcircle") {
    return {uniform_circle_construction(n), {named("n=" + std::to_string(n))}};
  }
  if (key == "reuleauxnine") {
    double eps = has_epsilon ? epsilon : 0.02;
    return {reuleaux_nine(eps), {named("epsilon=" + fmt17(eps))}};
  }
  if (key == "reuleaux3n") {
    ConstructionParams params;
    params.n = n;
    if (has_epsilon) {
      params.epsilon = epsilon;
    }
    return {reuleaux_3n(params),
            {named("n=" + std::to_string(params.n) + " epsilon=" + fmt17(params.epsilon) +
                   " delta=" + fmt17(params.delta))}};
  }
  if (key == "concentric") {
    double eps = has_epsilon ? epsilon : 0.005;
    return {concentric_construction(n, eps),
            {named("n=" + std::to_string(n) + " epsilon=" + fmt17(eps))}};
  }
  if (key == "smalln") {
    return {small_n_construction(n), {named("n=" + std::to_string(n))}};
  }
  if (key == "midpoint" || key == "reuleauxmidpoint") {
    return {reuleaux_midpoint_construction(n), {named("n=" + std::to_string(n))}};
  }
  if (key == "square") {
    return {square_construction(n), {named("n=" + std::to_string(n))}};
  }
  throw std::invalid_argument("unknown construction name: " + name);
}

nlohmann::json point_json(Point p) { return nlohmann::json{p.x, p.y}; }

const char* status_name(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::kCertified:
      return "certified";
    case VerifyStatus::kFailed:
      return "failed";
    default:
      return "unverified";
  }
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Guaranteed disk-coverage bounds for unit-diameter point sets"};
  app.require_subcommand(1);

  struct Flags {
    std::string in;
    std::string out;
    std::string name;
    std::string mode = "exact";
    double r = 0.0;
    double epsilon = 0.0;
    double tau = 1e-6;
    double grid_h = 1e-3;
    int n = 0;
    int k = 0;
    int iterations = 50000;
    int restarts = 8;
    std::uint64_t seed = 0;
  };
  Flags flags;

  CLI::App* maxcover = app.add_subcommand("maxcover", "Largest count of points inside one disk");
  maxcover->add_option("--in", flags.in, "point file")->required();
  maxcover->add_option("--r", flags.r, "disk radius")->required();
  maxcover->add_option("--mode", flags.mode, "count mode")
      ->check(CLI::IsMember({"exact", "inflated", "deflated"}));
  maxcover->add_option("--tau", flags.tau, "radius tolerance for inflated/deflated");

  CLI::App* diameter_cmd = app.add_subcommand("diameter", "Diameter of a point set");
  diameter_cmd->add_option("--in", flags.in, "point file")->required();

  CLI::App* sec = app.add_subcommand("sec", "Smallest enclosing circle");
  sec->add_option("--in", flags.in, "point file")->required();

  CLI::App* generate = app.add_subcommand("generate", "Write a named construction");
  generate->add_option("--name", flags.name, "construction name")->required();
  generate->add_option("--n", flags.n, "point count or family index");
  CLI::Option* eps_opt = generate->add_option("--epsilon", flags.epsilon, "construction tolerance");
  generate->add_option("--out", flags.out, "output point file (stdout if omitted)");

  CLI::App* verify = app.add_subcommand("verify-covering", "Check a covering certificate");
  verify->add_option("--in", flags.in, "certificate JSON file")->required();
  verify->add_option("--grid-h", flags.grid_h, "certification cell size");

  CLI::App* optimize = app.add_subcommand(
      "optimize-covering", "Minimize the radius of k disks covering the width-1 hexagon");
  optimize->add_option("--k", flags.k, "number of disks")->required();
  optimize->add_option("--restarts", flags.restarts, "multistart count");
  optimize->add_option("--seed", flags.seed, "random seed");
  optimize->add_option("--out", flags.out, "certificate JSON output path");

  CLI::App* embed = app.add_subcommand("embed", "Place a unit-diameter set inside a universal cover");
  embed->add_option("--in", flags.in, "point file")->required();
  embed->add_option("--name", flags.name, "region: hexagon or square")
      ->check(CLI::IsMember({"hexagon", "square"}));
  embed->add_option("--out", flags.out, "embedded point file output path");

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Guaranteed lower and upper bounds");
  bounds_cmd->add_option("--n", flags.n, "point count")->required();
  bounds_cmd->add_option("--r", flags.r, "disk radius")->required();

  CLI::App* table = app.add_subcommand("table", "Bounds at the landmark (n, r) pairs as CSV");
  table->add_option("--out", flags.out, "CSV output path (stdout if omitted)");

  CLI::App* plot = app.add_subcommand("plot", "Step-function plot of the coverage fractions");
  plot->add_option("--out", flags.out, "SVG output path")->required();

  CLI::App* search = app.add_subcommand("search", "Anneal for a hard-to-cover configuration");
  search->add_option("--n", flags.n, "point count")->required();
  search->add_option("--r", flags.r, "disk radius")->required();
  search->add_option("--seed", flags.seed, "random seed")->required();
  search->add_option("--iterations", flags.iterations, "steps per restart");
  search->add_option("--restarts", flags.restarts, "restart count");
  search->add_option("--out", flags.out, "best configuration output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (maxcover->parsed()) {
      PointSet points = load_pointset(flags.in);
      CoverageResult result = max_coverage(points, flags.r, make_mode(flags.mode, flags.tau));
      emit({{"count", result.count}, {"witness_center", point_json(result.witness.center)}});
    } else if (diameter_cmd->parsed()) {
      emit({{"diameter", diameter(load_pointset(flags.in))}});
    } else if (sec->parsed()) {
      Disk disk = smallest_enclosing_circle(load_pointset(flags.in));
      emit({{"center", point_json(disk.center)}, {"radius", disk.radius}});
    } else if (generate->parsed()) {
      Generated gen = run_generator(flags.name, flags.n, flags.epsilon, eps_opt->count() > 0);
      gen.comments.push_back("diameter=" + fmt17(diameter(gen.points)));
      if (flags.out.empty()) {
        std::cout << pointset_to_text(gen.points, gen.comments);
      } else {
        save_pointset(gen.points, flags.out, gen.comments);
        emit({{"out", flags.out}, {"points", static_cast<int>(gen.points.size())}});
      }
    } else if (verify->parsed()) {
      CoveringCertificate cert = load_certificate(flags.in);
      VerifyState state = verify_covering(cert, flags.grid_h);
      emit({{"status", status_name(state.status)},
            {"grid_h", state.grid_h},
            {"k", static_cast<int>(cert.centers.size())},
            {"radius", cert.radius}});
    } else if (optimize->parsed()) {
      CoveringCertificate cert =
          optimize_covering(ConvexRegion::hexagon(1.0), flags.k, flags.restarts, flags.seed);
      if (!flags.out.empty()) {
        save_certificate(cert, flags.out);
      }
      emit({{"k", flags.k},
            {"radius", cert.radius},
            {"status", status_name(cert.verified.status)},
            {"provenance", cert.provenance}});
    } else if (embed->parsed()) {
      PointSet points = load_pointset(flags.in);
      bool square_region = flags.name == "square";
      RigidMotion motion = square_region ? embed_in_square(points) : embed_in_hexagon(points);
      std::vector<Point> moved;
      nlohmann::json coords = nlohmann::json::array();
      for (const Point& p : points) {
        moved.push_back(motion.apply(p));
        coords.push_back(point_json(moved.back()));
      }
      if (!flags.out.empty()) {
        save_pointset(PointSet(moved), flags.out,
                      {std::string("embed region=") + (square_region ? "square" : "hexagon"),
                       "angle=" + fmt17(motion.angle)});
      }
      emit({{"region", square_region ? "square" : "hexagon"},
            {"angle", motion.angle},
            {"translation", point_json(motion.translation)},
            {"points", std::move(coords)}});
    } else if (bounds_cmd->parsed()) {
      Bound lower = lower_bound(flags.n, flags.r);
      Bound upper = upper_bound(flags.n, flags.r);
      emit({{"n", flags.n},
            {"r", flags.r},
            {"lower", lower.value},
            {"upper", upper.value},
            {"lower_witness", lower.witness},
            {"upper_witness", upper.witness}});
    } else if (table->parsed()) {
      std::vector<BoundsRecord> records = table_reproduce();
      std::string csv =
          bounds_to_csv(records, "guaranteed-coverage bounds at landmark (n, r) pairs");
      if (flags.out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream file(flags.out);
        if (!file || !(file << csv)) {
          throw io_error("cannot write CSV file: " + flags.out);
        }
        emit({{"out", flags.out}, {"rows", static_cast<int>(records.size())}});
      }
    } else if (plot->parsed()) {
      StepSeries series = step_function_data(default_r_grid());
      emit_plot(series, flags.out);
      emit({{"out", flags.out}, {"samples", static_cast<int>(series.size())}});
    } else if (search->parsed()) {
      SearchConfig cfg;
      cfg.n = flags.n;
      cfg.r = flags.r;
      cfg.iterations = flags.iterations;
      cfg.restarts = flags.restarts;
      cfg.seed = flags.seed;
      SearchResult result = extremal_search(cfg);
      if (!flags.out.empty()) {
        save_pointset(result.best, flags.out,
                      {"search n=" + std::to_string(cfg.n) + " r=" + fmt17(cfg.r) +
                           " seed=" + std::to_string(cfg.seed),
                       "objective=" + std::to_string(result.objective)});
        nlohmann::json sidecar = {{"config",
                                   {{"n", cfg.n},
                                    {"r", cfg.r},
                                    {"iterations", cfg.iterations},
                                    {"restarts", cfg.restarts},
                                    {"seed", cfg.seed},
                                    {"initial_temperature", cfg.initial_temperature},
                                    {"cooling", cfg.cooling},
                                    {"move_scale", cfg.move_scale}}},
                                  {"objective", result.objective},
                                  {"trace", result.trace}};
        std::ofstream file(flags.out + ".json");
        if (!file || !(file << sidecar.dump(2) << "\n")) {
          throw io_error("cannot write search sidecar: " + flags.out + ".json");
        }
      }
      emit({{"objective", result.objective},
            {"trace", result.trace},
            {"diameter", diameter(result.best)}});
    }
    return 0;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line() << ")\n";
    return 2;
  } catch (const embedding_failure_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dartbound
