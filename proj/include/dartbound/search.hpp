#pragma once

#include <cstdint>
#include <vector>

#include "dartbound/geometry.hpp"

namespace dartbound {

/// Annealing parameters for the extremal configuration search.
struct SearchConfig {
  int n = 2;
  double r = 0.5;
  int iterations = 50000;
  int restarts = 8;
  std::uint64_t seed = 0;
  double initial_temperature = 1.0;
  double cooling = 0.999;
  double move_scale = 0.05;
};

/// Best configuration found, its independently recomputed objective, and the
/// best objective per restart.
struct SearchResult {
  PointSet best;
  int objective = 0;
  std::vector<int> trace;
};

/// Scales the set about its centroid so the diameter is exactly one.
PointSet normalize_diameter(const PointSet& points);

/// Simulated annealing over n-point diameter-one configurations, minimizing
/// the inflated(1e-6) max-coverage count at radius r; plateau ties prefer a
/// larger minimum pairwise distance. Deterministic for a given config.
SearchResult extremal_search(const SearchConfig& cfg);

}  // namespace dartbound
