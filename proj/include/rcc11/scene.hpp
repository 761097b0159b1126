#pragma once

// Scene files: a JSON object with a "regions" array, classified pairwise.
//
//   {"model":"disk", "regions":[{"id":"a","kind":"disk","cx":"1/2","cy":0,"r":"3"}]}
//   {"model":"dyadic", "depth":3, "regions":[{"id":"a","expr":"x(00)+x(11)"}]}
//   {"model":"interval", "regions":[{"id":"a","expr":"[0,1]+(-inf,-2]"}]}
//
// "model" defaults to "disk".

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcc11/disk/classify.hpp"
#include "rcc11/dyadic.hpp"
#include "rcc11/interval1d.hpp"

namespace rcc11::scene {

struct SceneError : std::runtime_error {
  SceneError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line), column(column) {}
  int line;
  int column;
};

enum class Model { Disk, Dyadic, Interval };

using AnyRegion = std::variant<disk::DiskRegion, dyadic::BwRegion, interval1d::IntervalRegion>;

struct NamedRegion {
  std::string id;
  AnyRegion region;
};

struct Scene {
  Model model = Model::Disk;
  std::vector<NamedRegion> regions;
};

namespace detail {

inline std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Offsets of the objects inside the top-level "regions" array, found with a
// string-aware bracket scan. nlohmann does not keep source positions.
inline std::vector<std::size_t> region_offsets(const std::string& text) {
  std::vector<std::size_t> out;
  int depth = 0;
  bool in_string = false;
  std::string last_key;
  std::size_t str_start = 0;
  int array_depth = -1;  // depth inside the regions array, once found
  bool expect_regions = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_string) {
      if (ch == '\\') {
        ++i;
      } else if (ch == '"') {
        in_string = false;
        last_key = text.substr(str_start, i - str_start);
      }
      continue;
    }
    switch (ch) {
      case '"':
        in_string = true;
        str_start = i + 1;
        break;
      case ':':
        expect_regions = depth == 1 && last_key == "regions";
        break;
      case '[':
        ++depth;
        if (expect_regions && array_depth < 0) array_depth = depth;
        expect_regions = false;
        break;
      case '{':
        if (array_depth > 0 && depth == array_depth) out.push_back(i);
        ++depth;
        expect_regions = false;
        break;
      case ']':
      case '}':
        --depth;
        if (array_depth > 0 && depth < array_depth) array_depth = 0;
        break;
      default:
        break;
    }
  }
  return out;
}

inline Rational json_rational(const nlohmann::json& v, const char* field) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument(std::string("field '") + field + "' must be an integer or a \"p/q\" string");
}

}  // namespace detail

/// Throws SceneError with the position of the offending region (or of the
/// JSON syntax error).
inline Scene parse_scene(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw SceneError("malformed JSON", line, col);
  }
  auto fail_at = [&](std::size_t offset, const std::string& msg) -> SceneError {
    auto [line, col] = detail::line_column(text, offset);
    return SceneError(msg, line, col);
  };
  if (!doc.is_object() || !doc.contains("regions") || !doc["regions"].is_array())
    throw fail_at(0, "scene needs a \"regions\" array");

  Scene sc;
  int depth = 3;
  try {
    const std::string m = doc.value("model", std::string("disk"));
    if (m == "disk")
      sc.model = Model::Disk;
    else if (m == "dyadic")
      sc.model = Model::Dyadic;
    else if (m == "interval")
      sc.model = Model::Interval;
    else
      throw std::invalid_argument("unknown model '" + m + "'");
    depth = doc.value("depth", 3);
    if (sc.model == Model::Dyadic) dyadic::check_depth(depth);
  } catch (const std::exception& e) {
    throw fail_at(0, e.what());
  }

  const auto offsets = detail::region_offsets(text);
  const auto& regions = doc["regions"];
  for (std::size_t k = 0; k < regions.size(); ++k) {
    const std::size_t at = k < offsets.size() ? offsets[k] : 0;
    try {
      const auto& r = regions[k];
      if (!r.is_object()) throw std::invalid_argument("region must be an object");
      const std::string id = r.at("id").get<std::string>();
      if (id.empty() || id.find_first_of(",\n\"") != std::string::npos)
        throw std::invalid_argument("region id must be nonempty without commas or quotes");
      for (const auto& other : sc.regions)
        if (other.id == id) throw std::invalid_argument("duplicate region id '" + id + "'");
      switch (sc.model) {
        case Model::Disk: {
          const std::string kind = r.at("kind").get<std::string>();
          if (kind != "disk" && kind != "codisk") throw std::invalid_argument("kind must be \"disk\" or \"codisk\"");
          disk::DiskRegion d(kind == "disk" ? disk::Polarity::Disk : disk::Polarity::Codisk,
                             {detail::json_rational(r.at("cx"), "cx"), detail::json_rational(r.at("cy"), "cy")},
                             detail::json_rational(r.at("r"), "r"));
          sc.regions.push_back({id, d});
          break;
        }
        case Model::Dyadic:
          sc.regions.push_back({id, dyadic::parse_region(r.at("expr").get<std::string>(), depth)});
          break;
        case Model::Interval:
          sc.regions.push_back({id, interval1d::parse_region(r.at("expr").get<std::string>())});
          break;
      }
    } catch (const nlohmann::json::exception& e) {
      throw fail_at(at, "region " + std::to_string(k) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw fail_at(at, "region " + std::to_string(k) + ": " + e.what());
    }
  }
  return sc;
}

struct PairRow {
  std::string id1;
  std::string id2;
  BaseRel relation;
  std::optional<disk::NineMatrix> matrix;  // disk scenes only
};

inline BaseRel classify_any(const AnyRegion& a, const AnyRegion& b) {
  if (auto* x = std::get_if<disk::DiskRegion>(&a)) return disk::classify(*x, std::get<disk::DiskRegion>(b));
  if (auto* x = std::get_if<dyadic::BwRegion>(&a)) return dyadic::classify11(*x, std::get<dyadic::BwRegion>(b));
  return interval1d::classify11(std::get<interval1d::IntervalRegion>(a), std::get<interval1d::IntervalRegion>(b));
}

/// All ordered pairs of distinct regions, sorted by (id1, id2).
inline std::vector<PairRow> classify_scene(const Scene& sc, bool with_matrices) {
  std::vector<PairRow> rows;
  for (const auto& a : sc.regions)
    for (const auto& b : sc.regions) {
      if (&a == &b) continue;
      PairRow row{a.id, b.id, classify_any(a.region, b.region), std::nullopt};
      if (with_matrices && sc.model == Model::Disk)
        row.matrix = disk::nine_matrix(std::get<disk::DiskRegion>(a.region), std::get<disk::DiskRegion>(b.region));
      rows.push_back(std::move(row));
    }
  std::sort(rows.begin(), rows.end(),
            [](const PairRow& x, const PairRow& y) { return std::tie(x.id1, x.id2) < std::tie(y.id1, y.id2); });
  return rows;
}

inline std::string rows_to_csv(const std::vector<PairRow>& rows, bool with_matrices) {
  std::string out = "id1,id2,relation";
  if (with_matrices) out += ",ii,ib,ie,bi,bb,be,ei,eb,ee";
  out += '\n';
  for (const auto& r : rows) {
    out += r.id1 + "," + r.id2 + "," + std::string(token(r.relation));
    if (with_matrices && r.matrix) out += "," + r.matrix->to_csv();
    out += '\n';
  }
  return out;
}

}  // namespace rcc11::scene
