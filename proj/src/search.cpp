#include "dartbound/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dartbound/constructions.hpp"
#include "dartbound/coverage.hpp"

namespace dartbound {

namespace {

constexpr double kCountTolerance = 1e-6;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

Point gaussian_move(std::mt19937_64& rng, double scale) {
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  double radius = std::sqrt(-2.0 * std::log(u1));
  return {scale * radius * std::cos(2.0 * kPi * u2),
          scale * radius * std::sin(2.0 * kPi * u2)};
}

double min_pairwise_distance(const std::vector<Point>& points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, dist(points[i], points[j]));
    }
  }
  return best;
}

struct Energy {
  int count;
  double min_distance;

  double scalar() const { return count - 0.5 * min_distance; }
  bool better_than(const Energy& other) const {
    if (count != other.count) {
      return count < other.count;
    }
    return min_distance > other.min_distance;
  }
};

Energy evaluate(const std::vector<Point>& points, double r) {
  PointSet set{points};
  return {max_coverage(set, r, CountMode::inflated(kCountTolerance)).count,
          min_pairwise_distance(points)};
}

std::vector<Point> normalized(std::vector<Point> points) {
  PointSet set{points};
  double d = diameter(set);
  if (d <= 0.0) {
    throw degenerate_input_error("cannot normalize a set of coincident points");
  }
  Point centroid{0.0, 0.0};
  for (const Point& p : points) {
    centroid = centroid + p;
  }
  centroid = (1.0 / static_cast<double>(points.size())) * centroid;
  for (Point& p : points) {
    p = centroid + (1.0 / d) * (p - centroid);
  }
  return points;
}

std::vector<Point> random_feasible(std::mt19937_64& rng, int n) {
  std::vector<Point> points;
  points.reserve(n);
  while (static_cast<int>(points.size()) < n) {
    Point p{uniform01(rng) - 0.5, uniform01(rng) - 0.5};
    if (norm_sq(p) <= 0.25) {
      points.push_back(p);
    }
  }
  return points;
}

// Restart portfolio: random blobs interleaved with the extremal generators,
// which start the annealer on the known cluster and ring structures.
std::vector<Point> initial_state(std::mt19937_64& rng, int n, int restart) {
  switch (restart % 3) {
    case 1: {
      PointSet ring = uniform_circle_construction(n);
      return std::vector<Point>(ring.begin(), ring.end());
    }
    case 2: {
      PointSet clusters = triangle_construction(n);
      return std::vector<Point>(clusters.begin(), clusters.end());
    }
    default:
      return random_feasible(rng, n);
  }
}

void validate(const SearchConfig& cfg) {
  if (cfg.n < 2) {
    throw std::invalid_argument("search requires n >= 2");
  }
  if (!(cfg.r > 0.0) || cfg.r > 1.0) {
    throw std::invalid_argument("search radius must lie in (0, 1]");
  }
  if (cfg.iterations < 1) {
    throw std::invalid_argument("search requires at least one iteration");
  }
  if (cfg.restarts < 1) {
    throw std::invalid_argument("search requires at least one restart");
  }
  if (!(cfg.cooling > 0.0) || cfg.cooling >= 1.0) {
    throw std::invalid_argument("cooling factor must lie in (0, 1)");
  }
  if (!(cfg.initial_temperature > 0.0) || !(cfg.move_scale > 0.0)) {
    throw std::invalid_argument("temperature and move scale must be positive");
  }
}

}  // namespace

PointSet normalize_diameter(const PointSet& points) {
  return PointSet{normalized(std::vector<Point>(points.begin(), points.end()))};
}

SearchResult extremal_search(const SearchConfig& cfg) {
  validate(cfg);

  std::vector<Point> global_best;
  Energy global_energy{std::numeric_limits<int>::max(), 0.0};
  std::vector<int> trace;
  trace.reserve(cfg.restarts);

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
    std::vector<Point> state = normalized(initial_state(rng, cfg.n, restart));
    Energy energy = evaluate(state, cfg.r);
    std::vector<Point> restart_best = state;
    Energy restart_energy = energy;

    double temperature = cfg.initial_temperature;
    for (int iter = 0; iter < cfg.iterations; ++iter) {
      std::size_t index = static_cast<std::size_t>(rng() % state.size());
      Point moved = state[index] + gaussian_move(rng, cfg.move_scale);

      bool feasible = true;
      for (std::size_t j = 0; j < state.size(); ++j) {
        // Slack absorbs renormalization dust on the current diametral pair.
        if (j != index && dist_sq(moved, state[j]) > 1.0 + 1e-12) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        std::vector<Point> proposal = state;
        proposal[index] = moved;
        proposal = normalized(std::move(proposal));
        Energy next = evaluate(proposal, cfg.r);
        double delta = next.scalar() - energy.scalar();
        if (delta <= 0.0 || uniform01(rng) < std::exp(-delta / temperature)) {
          state = std::move(proposal);
          energy = next;
          if (energy.better_than(restart_energy)) {
            restart_best = state;
            restart_energy = energy;
          }
        }
      }
      temperature *= cfg.cooling;
    }

    trace.push_back(restart_energy.count);
    if (restart_energy.better_than(global_energy)) {
      global_best = restart_best;
      global_energy = restart_energy;
    }
  }

  PointSet best{global_best};
  int objective = max_coverage(best, cfg.r, CountMode::inflated(kCountTolerance)).count;
  return {best, objective, trace};
}

}  // namespace dartbound
