#pragma once

#include <json.hpp>

#include "sgt/pattern.hpp"
#include "sgt/shape.hpp"
#include "sgt/verify.hpp"

namespace sgt {

using Json = nlohmann::json;

inline Json shape_to_json(const Shape& s) {
  Json a = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) a.push_back(s[i]);
  return a;
}

inline Shape shape_from_json(const Json& j) {
  std::vector<Coord> c;
  for (const auto& v : j) c.push_back(v.get<Coord>());
  return Shape(std::move(c));
}

// Shared wire format: {"k": int, "rows": [[int,...],...]}.
inline Json pattern_to_json(const GTPattern& p) {
  Json rows = Json::array();
  for (const Shape& r : p.rows()) rows.push_back(shape_to_json(r));
  return Json{{"k", p.depth()}, {"rows", rows}};
}

inline GTPattern pattern_from_json(const Json& j) {
  std::vector<Shape> rows;
  for (const auto& r : j.at("rows")) rows.push_back(shape_from_json(r));
  return GTPattern(j.at("k").get<int>(), std::move(rows));
}

inline Json report_to_json(const VerificationReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json line{{"statistic", c.statistic}, {"value", c.value},      {"threshold", c.threshold},
              {"exact", c.exact},         {"pass", c.pass}};
    if (!c.note.empty()) line["note"] = c.note;
    checks.push_back(line);
  }
  return Json{{"claim", rep.claim},     {"pass", rep.pass()},
              {"checks", checks},       {"samples", rep.samples},
              {"seed", rep.seed},       {"threads", rep.threads},
              {"runtime_seconds", rep.runtime_seconds},
              {"status", rep.status}};
}

}  // namespace sgt
