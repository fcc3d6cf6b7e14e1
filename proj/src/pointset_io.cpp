#include "dartbound/pointset_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace dartbound {

namespace {

std::string format_coordinate(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
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

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') {
      return true;
    }
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      return false;
    }
  }
  return true;
}

double parse_coordinate(const std::string& token, int line) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin) {
    throw parse_error("expected a number, got '" + token + "'", line);
  }
  while (*end != '\0') {
    if (!std::isspace(static_cast<unsigned char>(*end))) {
      throw parse_error("trailing characters after number: '" + token + "'", line);
    }
    ++end;
  }
  if (!std::isfinite(value)) {
    throw parse_error("coordinate is not finite: '" + token + "'", line);
  }
  return value;
}

PointSet pointset_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid point JSON: ") + e.what(),
                      line_of_byte(text, e.byte));
  }
  try {
    std::vector<Point> points;
    for (const auto& entry : j.at("points")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw parse_error("points must be [x, y] pairs", 0);
      }
      Point p{entry[0].get<double>(), entry[1].get<double>()};
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw parse_error("coordinates must be finite", 0);
      }
      points.push_back(p);
    }
    if (points.empty()) {
      throw parse_error("point JSON contains no points", 0);
    }
    return PointSet(std::move(points));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid point JSON: ") + e.what(), 0);
  }
}

}  // namespace

std::string pointset_to_text(const PointSet& points,
                             const std::vector<std::string>& comments) {
  std::string out;
  for (const std::string& comment : comments) {
    out += "# " + comment + "\n";
  }
  for (const Point& p : points) {
    out += format_coordinate(p.x) + "," + format_coordinate(p.y) + "\n";
  }
  return out;
}

std::string pointset_to_json(const PointSet& points) {
  nlohmann::json coords = nlohmann::json::array();
  for (const Point& p : points) {
    coords.push_back({p.x, p.y});
  }
  nlohmann::json j;
  j["points"] = std::move(coords);
  return j.dump(2);
}

PointSet pointset_from_text(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      continue;
    }
    if (ch == '{') {
      return pointset_from_json(text);
    }
    break;
  }

  std::vector<Point> points;
  std::istringstream stream(text);
  std::string line;
  int number = 0;
  while (std::getline(stream, line)) {
    ++number;
    if (blank_or_comment(line)) {
      continue;
    }
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw parse_error("expected 'x,y'", number);
    }
    if (line.find(',', comma + 1) != std::string::npos) {
      throw parse_error("expected exactly one comma", number);
    }
    Point p{parse_coordinate(line.substr(0, comma), number),
            parse_coordinate(line.substr(comma + 1), number)};
    points.push_back(p);
  }
  if (points.empty()) {
    throw parse_error("point file contains no points", 0);
  }
  return PointSet(std::move(points));
}

void save_pointset(const PointSet& points, const std::string& path,
                   const std::vector<std::string>& comments) {
  std::ofstream file(path);
  if (!file) {
    throw io_error("cannot open point file for writing: " + path);
  }
  file << pointset_to_text(points, comments);
  if (!file) {
    throw io_error("cannot write point file: " + path);
  }
}

PointSet load_pointset(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw io_error("cannot open point file: " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return pointset_from_text(buffer.str());
}

}  // namespace dartbound
