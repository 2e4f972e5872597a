#include "lcgerm/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lcgerm/errors.hpp"
#include "json_util.hpp"

namespace lcgerm {

using nlohmann::ordered_json;

const CurveGerm& ConfigFile::curve(const std::string& name) const {
  for (const auto& c : curves) {
    if (c.name == name) return c.germ;
  }
  throw InvariantError("unknown curve '" + name + "'");
}

WeightedGerm ConfigFile::omega() const {
  std::vector<WeightedGerm::Component> comps;
  for (const auto& e : divisor) comps.push_back({curve(e.curve), e.coefficient});
  return WeightedGerm(std::move(comps));
}

WeightedGerm ConfigFile::boundary() const {
  std::vector<WeightedGerm::Component> comps;
  if (delta1) comps.push_back({curve(*delta1), a1});
  if (delta2) comps.push_back({curve(*delta2), a2});
  for (const auto& e : divisor) comps.push_back({curve(e.curve), e.coefficient});
  return WeightedGerm(std::move(comps));
}

LocalConfig ConfigFile::local_config() const {
  if (!has_deltas()) throw InvariantError("configuration names no deltas");
  return LocalConfig(curve(*delta1), curve(*delta2), a1, a2, omega());
}

TreeOptions ConfigFile::tree_options() const {
  TreeOptions o;
  if (depth_cap) o.depth_cap = *depth_cap;
  return o;
}

namespace {

using detail::rational_field;
using detail::require;

std::string name_field(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) throw InvariantError(where + " must be a curve name");
  return v.get<std::string>();
}

}  // namespace

ConfigFile parse_config(std::string_view json_text) {
  const ordered_json doc = detail::parse_json(json_text, "configuration");
  if (!doc.is_object()) throw InvariantError("configuration must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    static const char* known[] = {"variables", "curves", "divisor", "family", "deltas",
                                  "a1",        "a2",     "kosta",   "kosta_original", "depth_cap"};
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) == std::end(known)) {
      throw InvariantError("unknown configuration field '" + key + "'");
    }
  }
  ConfigFile cfg;
  if (doc.contains("variables")) {
    const auto& v = doc["variables"];
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) {
      throw InvariantError("'variables' must be a list of two names");
    }
    cfg.variables = {v[0].get<std::string>(), v[1].get<std::string>()};
  }
  const auto& curves = require(doc, "curves", "configuration");
  if (!curves.is_object()) throw InvariantError("'curves' must map names to polynomials");
  for (const auto& [name, text] : curves.items()) {
    if (!text.is_string()) throw InvariantError("curve '" + name + "' must be a polynomial string");
    const std::string src = text.get<std::string>();
    BivarPoly poly;
    try {
      poly = parse_poly(src, cfg.variables);
    } catch (const ParseError& e) {
      throw ParseError("curve '" + name + "': " + e.message(), e.position());
    }
    cfg.curves.push_back({name, src, CurveGerm(std::move(poly), name)});
  }
  const auto& divisor = require(doc, "divisor", "configuration");
  if (!divisor.is_array()) throw InvariantError("'divisor' must be a list");
  for (std::size_t i = 0; i < divisor.size(); ++i) {
    const std::string where = "divisor entry " + std::to_string(i);
    const auto& e = divisor[i];
    DivisorEntry d{name_field(require(e, "curve", where), where + " curve"),
                   rational_field(require(e, "coefficient", where), where + " coefficient")};
    cfg.curve(d.curve);
    if (d.coefficient < 0) throw InvariantError(where + ": negative coefficient");
    cfg.divisor.push_back(std::move(d));
  }
  if (doc.contains("family")) {
    cfg.family = name_field(doc["family"], "'family'");
    cfg.curve(*cfg.family);
  }
  if (doc.contains("deltas")) {
    const auto& d = doc["deltas"];
    cfg.delta1 = name_field(require(d, "delta1", "'deltas'"), "delta1");
    cfg.curve(*cfg.delta1);
    if (d.contains("delta2")) {
      cfg.delta2 = name_field(d["delta2"], "delta2");
      cfg.curve(*cfg.delta2);
    }
  }
  if (doc.contains("a1")) cfg.a1 = rational_field(doc["a1"], "a1");
  if (doc.contains("a2")) cfg.a2 = rational_field(doc["a2"], "a2");
  if (cfg.a1 < 0 || cfg.a2 < 0) throw InvariantError("a1 and a2 must be non-negative");
  if (doc.contains("kosta")) {
    const auto& k = doc["kosta"];
    KostaParams p;
    p.alpha = rational_field(require(k, "alpha", "'kosta'"), "alpha");
    p.beta = rational_field(require(k, "beta", "'kosta'"), "beta");
    p.A = rational_field(require(k, "A", "'kosta'"), "A");
    p.B = rational_field(require(k, "B", "'kosta'"), "B");
    p.M = rational_field(require(k, "M", "'kosta'"), "M");
    p.N = rational_field(require(k, "N", "'kosta'"), "N");
    cfg.kosta = p;
  }
  if (doc.contains("kosta_original")) {
    const auto& n = require(doc["kosta_original"], "n", "'kosta_original'");
    if (!n.is_number_integer()) throw InvariantError("kosta_original.n must be an integer");
    cfg.kosta_original_n = n.get<long>();
  }
  if (doc.contains("depth_cap")) {
    const auto& d = doc["depth_cap"];
    if (!d.is_number_integer() || d.get<long>() < 1) throw InvariantError("depth_cap must be a positive integer");
    cfg.depth_cap = d.get<int>();
  }
  // Shared components among the boundary curves are reported here rather
  // than at first use.
  cfg.boundary();
  if (cfg.has_deltas()) cfg.local_config();
  return cfg;
}

ConfigFile read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvariantError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

namespace detail {

ordered_json config_json(const ConfigFile& cfg) {
  ordered_json j;
  if (cfg.variables.x != "x" || cfg.variables.y != "y") j["variables"] = {cfg.variables.x, cfg.variables.y};
  j["curves"] = ordered_json::object();
  for (const auto& c : cfg.curves) j["curves"][c.name] = c.text;
  j["divisor"] = ordered_json::array();
  for (const auto& e : cfg.divisor) j["divisor"].push_back({{"curve", e.curve}, {"coefficient", to_pq(e.coefficient)}});
  if (cfg.family) j["family"] = *cfg.family;
  if (cfg.delta1) {
    j["deltas"]["delta1"] = *cfg.delta1;
    if (cfg.delta2) j["deltas"]["delta2"] = *cfg.delta2;
  }
  if (cfg.delta1 || cfg.a1 != 0) j["a1"] = to_pq(cfg.a1);
  if (cfg.delta2 || cfg.a2 != 0) j["a2"] = to_pq(cfg.a2);
  if (cfg.kosta) {
    const auto& p = *cfg.kosta;
    j["kosta"] = {{"alpha", to_pq(p.alpha)}, {"beta", to_pq(p.beta)}, {"A", to_pq(p.A)},
                  {"B", to_pq(p.B)},         {"M", to_pq(p.M)},       {"N", to_pq(p.N)}};
  }
  if (cfg.kosta_original_n) j["kosta_original"] = {{"n", *cfg.kosta_original_n}};
  if (cfg.depth_cap) j["depth_cap"] = *cfg.depth_cap;
  return j;
}

}  // namespace detail

std::string config_to_json(const ConfigFile& cfg) { return detail::config_json(cfg).dump(2) + "\n"; }

ConfigFile to_config_file(const LocalConfig& lc) {
  ConfigFile cfg;
  auto add = [&](const std::string& name, const CurveGerm& g) {
    const std::string text = g.poly().to_string();
    cfg.curves.push_back({name, text, CurveGerm(g.poly(), name)});
  };
  add("delta1", lc.delta1());
  add("delta2", lc.delta2());
  cfg.delta1 = "delta1";
  cfg.delta2 = "delta2";
  cfg.a1 = lc.a1();
  cfg.a2 = lc.a2();
  int i = 0;
  for (const auto& c : lc.omega().components()) {
    const std::string name = "c" + std::to_string(++i);
    add(name, c.germ);
    cfg.divisor.push_back({name, c.coefficient});
  }
  return cfg;
}

}  // namespace lcgerm
