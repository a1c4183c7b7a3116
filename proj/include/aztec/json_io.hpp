#pragma once

// JSON wire formats for tilings, arrow fields, verification reports and
// sampling summaries. Keys are emitted in the documented order.

#include <string>

#include "json.hpp"

#include "aztec/arrowfield.hpp"
#include "aztec/bijection.hpp"
#include "aztec/errors.hpp"
#include "aztec/sampler.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

using Json = nlohmann::ordered_json;

inline Json region_to_json(const Region& r) {
  Json j;
  if (r.is_aztec()) {
    j["kind"] = "aztec";
    j["order"] = r.order();
  } else {
    j["kind"] = "rect";
    j["w"] = r.width();
    j["h"] = r.height();
  }
  return j;
}

inline Region region_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "aztec") return Region::aztec(j.at("order").get<int>());
  if (kind == "rect") return Region::rectangle(j.at("w").get<int>(), j.at("h").get<int>());
  throw InvalidInput("unknown region kind '" + kind + "'");
}

inline Json tiling_to_json(const Tiling& t) {
  Json dominoes = Json::array();
  for (const Domino& d : t.dominoes)  // already sorted by (y, x)
    dominoes.push_back(Json{{"x", d.cell.x}, {"y", d.cell.y}, {"o", d.horizontal() ? "h" : "v"}});
  Json j;
  j["region"] = region_to_json(t.region);
  j["dominoes"] = std::move(dominoes);
  return j;
}

inline Tiling tiling_from_json(const Json& j) {
  try {
    std::vector<Domino> dominoes;
    for (const Json& d : j.at("dominoes")) {
      const std::string o = d.at("o").get<std::string>();
      if (o != "h" && o != "v") throw InvalidInput("domino orientation must be \"h\" or \"v\"");
      dominoes.push_back({{d.at("x").get<int>(), d.at("y").get<int>()},
                          o == "h" ? Orientation::Horizontal : Orientation::Vertical});
    }
    return Tiling(region_from_json(j.at("region")), std::move(dominoes));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed tiling JSON: ") + e.what());
  }
}

inline Json field_to_json(const ArrowField& f) {
  Json arrows = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Cell c = f.region().cells()[i];
    const Point h = f.head_at(i);
    arrows.push_back(Json{{"x", c.x}, {"y", c.y}, {"hx", h.x}, {"hy", h.y}});
  }
  Json j;
  j["inner_order"] = f.inner_order();
  j["arrows"] = std::move(arrows);
  return j;
}

inline ArrowField field_from_json(const Json& j) {
  try {
    ArrowField f(NodeContext(j.at("inner_order").get<int>()));
    std::vector<std::uint8_t> seen(f.size(), 0);
    for (const Json& a : j.at("arrows")) {
      const Cell c{a.at("x").get<int>(), a.at("y").get<int>()};
      f.set_head(c, {a.at("hx").get<int>(), a.at("hy").get<int>()});
      seen[*f.region().index_of(c)] = 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InvalidInput("arrow field JSON misses cells");
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed arrow field JSON: ") + e.what());
  } catch (const GeometryError& e) {
    throw InvalidInput(std::string("malformed arrow field JSON: ") + e.what());
  }
}

inline Json report_to_json(const RecursionReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json j;
  j["n"] = r.n;
  j["checks"] = std::move(checks);
  return j;
}

inline Json summary_to_json(const SampleSummary& s) {
  Json hist = Json::object();
  for (const auto& [k, c] : s.hist) hist[std::to_string(k)] = c;
  Json j;
  j["order"] = s.order;
  j["count"] = s.count;
  j["hist"] = std::move(hist);
  j["h_occupancy"] = s.h_occupancy;
  return j;
}

}  // namespace aztec
