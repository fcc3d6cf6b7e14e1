#pragma once

#include <string>
#include <vector>

#include "dartbound/geometry.hpp"

namespace dartbound {

/// One "x,y" line per point, coordinates printed with shortest round-trip
/// precision; each comment string becomes a leading "# " line.
std::string pointset_to_text(const PointSet& points,
                             const std::vector<std::string>& comments = {});

/// {"points": [[x, y], ...]}
std::string pointset_to_json(const PointSet& points);

/// Parses either format: a leading '{' selects JSON, anything else the text
/// form ('#' lines and blank lines ignored). Malformed input raises
/// parse_error carrying the offending line number.
PointSet pointset_from_text(const std::string& text);

void save_pointset(const PointSet& points, const std::string& path,
                   const std::vector<std::string>& comments = {});
PointSet load_pointset(const std::string& path);

}  // namespace dartbound
