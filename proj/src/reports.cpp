#include "lcgerm/reports.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "json_util.hpp"
#include "lcgerm/errors.hpp"
#include "lcgerm/scenarios.hpp"

namespace lcgerm {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string lct_text(const LctValue& v) { return v.is_infinite() ? "inf" : to_pq(v.value()); }

std::string lct_display(const LctValue& v) { return v.is_infinite() ? "inf" : to_display(v.value()); }

// Curve names of the boundary components in WeightedGerm order (zero
// coefficients are dropped there too).
std::vector<std::string> boundary_names(const ConfigFile& cfg) {
  std::vector<std::string> names;
  if (cfg.delta1 && cfg.a1 != 0) names.push_back(*cfg.delta1);
  if (cfg.delta2 && cfg.a2 != 0) names.push_back(*cfg.delta2);
  for (const auto& e : cfg.divisor) {
    if (e.coefficient != 0) names.push_back(e.curve);
  }
  return names;
}

ordered_json binding_json(const Binding& b, const std::vector<std::string>& names) {
  switch (b.kind) {
    case Binding::Kind::None: return {{"kind", "none"}};
    case Binding::Kind::Cap: return {{"kind", "coefficient-cap"}};
    case Binding::Kind::Component:
      return {{"kind", "component"}, {"curve", names.at(static_cast<std::size_t>(b.index))}};
    case Binding::Kind::Node: return {{"kind", "node"}, {"node", b.index}};
  }
  return {};
}

std::string binding_text(const Binding& b, const std::vector<std::string>& names) {
  switch (b.kind) {
    case Binding::Kind::None: return "nothing (no components)";
    case Binding::Kind::Cap: return "coefficient cap 1 on the family curve";
    case Binding::Kind::Component: return "coefficient of curve '" + names.at(static_cast<std::size_t>(b.index)) + "'";
    case Binding::Kind::Node: return "exceptional divisor at tree node " + std::to_string(b.index);
  }
  return {};
}

ordered_json input_json(const ConfigFile& cfg) { return detail::config_json(cfg); }

ConfigFile config_from_json(const ordered_json& j) { return parse_config(j.dump()); }

}  // namespace

Report lct_report(const ConfigFile& cfg) {
  const auto names = boundary_names(cfg);
  const WeightedGerm d = cfg.boundary();
  Report r;
  ordered_json j;
  std::ostringstream text;
  if (cfg.family) {
    const auto t = lct_threshold_in_family(d, cfg.curve(*cfg.family), cfg.tree_options());
    r.kind = "family-threshold";
    j["kind"] = r.kind;
    j["input"] = input_json(cfg);
    j["threshold"] = to_pq(t.value);
    j["binding"] = binding_json(t.binding, names);
    j["resolution_depth"] = t.resolution_depth;
    text << "threshold = " << to_display(t.value) << "\n"
         << "binding: " << binding_text(t.binding, names) << "\n"
         << "resolution depth: " << t.resolution_depth << "\n";
  } else {
    if (d.empty()) throw InvariantError("empty divisor");
    const auto res = lct_at_origin(d, cfg.tree_options());
    r.kind = "lct";
    j["kind"] = r.kind;
    j["input"] = input_json(cfg);
    j["lct"] = lct_text(res.lct);
    j["binding"] = binding_json(res.binding, names);
    j["resolution_depth"] = res.resolution_depth;
    text << "lct = " << lct_display(res.lct) << "\n"
         << "binding: " << binding_text(res.binding, names) << "\n"
         << "resolution depth: " << res.resolution_depth << "\n";
  }
  r.json = dump(j);
  r.text = text.str();
  return r;
}

Report loglc_report(const ConfigFile& cfg) {
  const auto names = boundary_names(cfg);
  const WeightedGerm d = cfg.boundary();
  if (d.empty()) throw InvariantError("empty divisor");
  const auto rep = is_log_canonical_at_origin(d, cfg.tree_options());
  Report r;
  r.kind = "loglc";
  ordered_json j;
  j["kind"] = r.kind;
  j["input"] = input_json(cfg);
  j["log_canonical"] = rep.is_lc;
  std::ostringstream text;
  text << "log canonical at the origin: " << (rep.is_lc ? "yes" : "no") << "\n";
  if (rep.witness) {
    const auto& w = *rep.witness;
    if (w.kind == LcWitness::Kind::Component) {
      const auto& name = names.at(static_cast<std::size_t>(w.index));
      j["witness"] = {{"kind", "component"}, {"curve", name}, {"coefficient", to_pq(w.coefficient)}};
      text << "witness: curve '" << name << "' has coefficient " << to_display(w.coefficient) << " > 1\n";
    } else {
      ordered_json ord = ordered_json::array();
      for (int o : w.ord) ord.push_back(o);
      j["witness"] = {{"kind", "node"},
                      {"node", w.index},
                      {"discrepancy_excess", to_pq(w.coefficient)},
                      {"log_discrepancy", to_pq(w.logdisc)},
                      {"orders", ord}};
      text << "witness: exceptional divisor at tree node " << w.index << " has coefficient "
           << to_display(w.coefficient) << " > 1 (log discrepancy " << to_display(w.logdisc) << ")\n";
    }
  } else {
    j["witness"] = nullptr;
  }
  j["resolution_depth"] = rep.resolution_depth;
  text << "resolution depth: " << rep.resolution_depth << "\n";
  r.json = dump(j);
  r.text = text.str();
  return r;
}

Report imult_report(const ConfigFile& cfg, const std::optional<std::pair<std::string, std::string>>& pair) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (pair) {
    cfg.curve(pair->first);
    cfg.curve(pair->second);
    pairs.push_back(*pair);
  } else {
    for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
      for (std::size_t k = i + 1; k < cfg.curves.size(); ++k) pairs.push_back({cfg.curves[i].name, cfg.curves[k].name});
    }
  }
  Report r;
  r.kind = "imult";
  ordered_json j;
  j["kind"] = r.kind;
  j["input"] = input_json(cfg);
  if (pair) j["pair"] = {pair->first, pair->second};
  j["pairs"] = ordered_json::array();
  std::ostringstream text;
  for (const auto& [a, b] : pairs) {
    const auto& f = cfg.curve(a);
    const auto& g = cfg.curve(b);
    ordered_json e{{"curves", {a, b}}};
    if (!are_coprime(f.poly(), g.poly())) {
      if (pair) throw InvariantError("curves '" + a + "' and '" + b + "' share a component");
      e["value"] = nullptr;
      e["note"] = "shared component";
      text << "I(" << a << ", " << b << ") undefined: shared component\n";
    } else {
      const long v = intersection_multiplicity(f, g, cfg.tree_options());
      e["value"] = v;
      text << "I(" << a << ", " << b << ") = " << v << "\n";
    }
    j["pairs"].push_back(std::move(e));
  }
  r.json = dump(j);
  r.text = text.str();
  return r;
}

TheoremSelector parse_theorem_selector(std::string_view name) {
  if (name == "all") return TheoremSelector::All;
  if (name == "adjunction") return TheoremSelector::Adjunction;
  if (name == "main") return TheoremSelector::Main;
  if (name == "kosta") return TheoremSelector::Kosta;
  if (name == "kosta-original") return TheoremSelector::KostaOriginal;
  throw InvariantError("unknown theorem '" + std::string(name) + "' (all, adjunction, main, kosta, kosta-original)");
}

const char* to_string(TheoremSelector s) {
  switch (s) {
    case TheoremSelector::All: return "all";
    case TheoremSelector::Adjunction: return "adjunction";
    case TheoremSelector::Main: return "main";
    case TheoremSelector::Kosta: return "kosta";
    case TheoremSelector::KostaOriginal: return "kosta-original";
  }
  return "?";
}

namespace {

struct TheoremRun {
  std::string name;
  std::optional<Conclusion> conclusion;
  std::string reason;  // hypothesis failure
};

template <class F>
TheoremRun run(const std::string& name, F&& f) {
  TheoremRun t{name, std::nullopt, {}};
  try {
    t.conclusion = f();
  } catch (const HypothesisNotMet& e) {
    t.reason = e.what();
  }
  return t;
}

}  // namespace

Report theorem_report(const ConfigFile& cfg, TheoremSelector which) {
  const bool all = which == TheoremSelector::All;
  const auto want = [&](TheoremSelector s) { return all || which == s; };
  std::vector<TheoremRun> runs;
  std::optional<bool> lc;
  if (cfg.has_deltas()) {
    const auto local = cfg.local_config();
    const auto a = analyze(local, cfg.tree_options());
    lc = a.lc.is_lc;
    if (want(TheoremSelector::Adjunction)) {
      runs.push_back(run("adjunction-delta1", [&] { return adjunction_conclusion(local, 1, a); }));
      runs.push_back(run("adjunction-delta2", [&] { return adjunction_conclusion(local, 2, a); }));
    }
    if (want(TheoremSelector::Main)) runs.push_back(run("main", [&] { return main_conclusion(local, a); }));
    if (want(TheoremSelector::Kosta)) {
      if (cfg.kosta) {
        runs.push_back(run("kosta", [&] { return kosta_conclusion(local, *cfg.kosta, a); }));
      } else if (!all) {
        throw InvariantError("configuration has no 'kosta' parameter block");
      }
    }
    if (want(TheoremSelector::KostaOriginal)) {
      if (cfg.kosta_original_n) {
        runs.push_back(run("kosta-original", [&] { return kosta_original_conclusion(local, *cfg.kosta_original_n, a); }));
      } else if (!all) {
        throw InvariantError("configuration has no 'kosta_original' block");
      }
    }
  } else if (cfg.delta1 && (which == TheoremSelector::All || which == TheoremSelector::Adjunction)) {
    runs.push_back(run("adjunction-delta1", [&] {
      return adjunction_conclusion(cfg.curve(*cfg.delta1), cfg.a1, cfg.omega(), cfg.tree_options());
    }));
  } else {
    throw InvariantError(cfg.delta1 ? "this theorem needs both delta1 and delta2" : "configuration names no deltas");
  }
  if (!all && std::none_of(runs.begin(), runs.end(), [](const TheoremRun& t) { return t.conclusion.has_value(); })) {
    throw HypothesisNotMet(runs.front().reason);
  }

  Report r;
  r.kind = "theorem";
  ordered_json j;
  j["kind"] = r.kind;
  j["input"] = input_json(cfg);
  j["selector"] = to_string(which);
  if (lc) j["log_canonical"] = *lc;
  j["results"] = ordered_json::array();
  std::ostringstream text;
  for (const auto& t : runs) {
    ordered_json e{{"theorem", t.name}};
    if (!t.conclusion) {
      e["status"] = "hypothesis-not-met";
      e["reason"] = t.reason;
      text << t.name << ": hypothesis not met (" << t.reason << ")\n";
    } else {
      const bool holds = t.conclusion->holds();
      if (!holds) r.ok = false;
      e["status"] = holds ? "holds" : "fails";
      e["disjuncts"] = ordered_json::array();
      text << t.name << ": " << (holds ? "holds" : "FAILS") << "\n";
      for (const auto& b : t.conclusion->disjuncts) {
        e["disjuncts"].push_back({{"label", b.label},
                                  {"value", to_pq(b.value)},
                                  {"threshold", to_pq(b.threshold)},
                                  {"holds", b.holds()}});
        text << "  " << b.label << " = " << to_display(b.value) << (b.holds() ? " > " : " <= ")
             << to_display(b.threshold) << "\n";
      }
    }
    j["results"].push_back(std::move(e));
  }
  r.json = dump(j);
  r.text = text.str();
  return r;
}

namespace {

ordered_json rationals_json(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(to_pq(q));
  return a;
}

}  // namespace

Report audit_report(const std::vector<CatalogEntry>& catalog, std::uint64_t seed, const std::string& source) {
  const auto audit = audit_catalog(catalog, seed);
  Report r;
  r.kind = "audit";
  r.ok = audit.passed();
  ordered_json j;
  j["kind"] = r.kind;
  j["source"] = source;
  j["seed"] = seed;
  j["entries"] = ordered_json::array();
  std::ostringstream text;
  for (const auto& e : audit.entries) {
    const auto& sys = e.entry.system;
    ordered_json cons = ordered_json::array();
    for (std::size_t i = 0; i < sys.constraints().size(); ++i) cons.push_back(sys.constraint_text(i));
    ordered_json o{{"name", e.entry.name},
                   {"anchor", e.entry.anchor},
                   {"variables", sys.variables()},
                   {"constraints", cons},
                   {"expect", e.entry.expect_feasible ? "feasible" : "infeasible"},
                   {"verdict", e.result.feasible ? "feasible" : "infeasible"}};
    if (e.result.feasible) {
      o["witness"] = rationals_json(e.result.witness);
    } else {
      o["certificate"] = rationals_json(e.result.certificate);
    }
    o["evidence_verified"] = e.evidence_verified;
    o["order_independent"] = e.order_independent;
    o["passed"] = e.passed();
    j["entries"].push_back(std::move(o));
    text << (e.passed() ? "ok    " : "FAIL  ") << e.entry.name << ": " << (e.result.feasible ? "feasible" : "infeasible")
         << (e.result.feasible == e.entry.expect_feasible ? "" : " (unexpected)")
         << (e.evidence_verified ? ", evidence verified" : ", EVIDENCE REJECTED")
         << (e.order_independent ? "" : ", ORDER DEPENDENT") << "\n";
  }
  j["failures"] = audit.failures();
  j["passed"] = audit.passed();
  text << audit.entries.size() << " systems, " << audit.failures() << " failures\n";
  r.json = dump(j);
  r.text = text.str();
  return r;
}

Report scenario_report(const std::string& name) {
  std::vector<ScenarioReport> reps;
  if (name == "all") {
    for (const auto& n : scenario_names()) {
      auto more = run_scenario(n);
      reps.insert(reps.end(), more.begin(), more.end());
    }
  } else {
    reps = run_scenario(name);
  }
  Report r;
  r.kind = "scenario";
  ordered_json j;
  j["kind"] = r.kind;
  j["name"] = name;
  j["reports"] = ordered_json::array();
  std::ostringstream text;
  for (const auto& s : reps) {
    ordered_json inputs = ordered_json::object();
    for (const auto& [k, v] : s.inputs) inputs[k] = v;
    ordered_json checks = ordered_json::array();
    long failed = 0;
    for (const auto& c : s.checks) {
      checks.push_back({{"label", c.label},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"provenance", to_string(c.provenance)},
                        {"passed", c.passed}});
      if (!c.passed) ++failed;
    }
    j["reports"].push_back(
        {{"name", s.name}, {"anchor", s.anchor}, {"inputs", inputs}, {"checks", checks}, {"passed", s.passed()}});
    if (!s.passed()) r.ok = false;
    text << (s.passed() ? "PASS  " : "FAIL  ") << s.name;
    for (const auto& [k, v] : s.inputs) {
      if (k == "m" || k == "k" || k == "k_max") text << " " << k << "=" << v;
    }
    text << ": " << s.checks.size() - static_cast<std::size_t>(failed) << "/" << s.checks.size() << " checks\n";
    for (const auto& c : s.checks) {
      if (!c.passed) text << "      " << c.label << ": expected " << c.expected << ", got " << c.actual << "\n";
    }
  }
  j["passed"] = r.ok;
  r.json = dump(j);
  r.text = text.str();
  return r;
}

namespace {

ordered_json spec_json(const GenSpec& s) {
  return {{"seed", s.seed},
          {"count", s.count},
          {"max_components", s.max_components},
          {"weights",
           {{"branch", s.weights.branch},
            {"cusp", s.weights.cusp},
            {"tacnode", s.weights.tacnode},
            {"swapped", s.weights.swapped}}},
          {"coefficient_bound", s.coefficient_bound},
          {"max_coefficient", to_pq(s.max_coefficient)},
          {"max_order", s.max_order},
          {"shear", s.shear}};
}

GenSpec spec_from_json(const ordered_json& j) {
  GenSpec s;
  s.seed = detail::require(j, "seed", "spec").get<std::uint64_t>();
  s.count = detail::require(j, "count", "spec").get<long>();
  s.max_components = detail::require(j, "max_components", "spec").get<int>();
  const auto& w = detail::require(j, "weights", "spec");
  s.weights = {detail::require(w, "branch", "weights").get<int>(), detail::require(w, "cusp", "weights").get<int>(),
               detail::require(w, "tacnode", "weights").get<int>(), detail::require(w, "swapped", "weights").get<int>()};
  s.coefficient_bound = detail::require(j, "coefficient_bound", "spec").get<long>();
  s.max_coefficient = detail::rational_field(detail::require(j, "max_coefficient", "spec"), "max_coefficient");
  s.max_order = detail::require(j, "max_order", "spec").get<int>();
  s.shear = detail::require(j, "shear", "spec").get<bool>();
  return s;
}

ordered_json tally_json(const TheoremTally& t) {
  return {{"asserted", t.asserted}, {"vacuous", t.vacuous}, {"lc", t.lc}, {"failures", t.failures}};
}

}  // namespace

Report fuzz_report(const GenSpec& spec) {
  const auto c = run_campaign(spec);
  Report r;
  r.kind = "fuzz";
  r.ok = c.passed();
  ordered_json j;
  j["kind"] = r.kind;
  j["spec"] = spec_json(spec);
  j["totals"] = {{"generated", c.generated}, {"lc", c.lc}, {"not_lc", c.not_lc}};
  j["theorems"] = {{"adjunction", tally_json(c.adjunction)},
                   {"main", tally_json(c.main)},
                   {"kosta", tally_json(c.kosta)},
                   {"kosta-original", tally_json(c.kosta_original)}};
  j["kosta_instances"] = c.kosta_instances;
  j["kosta_original_instances"] = c.kosta_original_instances;
  j["coverage"] = {{"main_asserted", c.main.asserted},
                   {"required", CampaignReport::kMinMainAssertions},
                   {"ok", c.coverage_ok()}};
  j["failures"] = ordered_json::array();
  for (const auto& f : c.failures) {
    j["failures"].push_back({{"index", f.index},
                             {"theorem", f.theorem},
                             {"detail", f.detail},
                             {"config", ordered_json::parse(f.config_json)}});
  }
  j["passed"] = c.passed();
  r.json = dump(j);
  std::ostringstream text;
  text << "seed " << spec.seed << ", " << c.generated << " configurations: " << c.lc << " lc, " << c.not_lc
       << " not lc\n";
  const std::pair<const char*, const TheoremTally*> rows[] = {
      {"adjunction", &c.adjunction}, {"main", &c.main}, {"kosta", &c.kosta}, {"kosta-original", &c.kosta_original}};
  for (const auto& [name, t] : rows) {
    text << "  " << name << ": " << t->asserted << " asserted, " << t->vacuous << " vacuous, " << t->failures
         << " failures\n";
  }
  text << "  (" << c.kosta_instances << " kosta and " << c.kosta_original_instances
       << " kosta-original parameter instances)\n";
  if (!c.coverage_ok()) {
    text << "coverage policy failed: " << c.main.asserted << " main assertions, need "
         << CampaignReport::kMinMainAssertions << "\n";
  }
  for (const auto& f : c.failures) text << "FAILURE #" << f.index << " " << f.theorem << ": " << f.detail << "\n";
  text << (c.passed() ? "PASS" : "FAIL") << "\n";
  r.text = text.str();
  return r;
}

namespace {

Report verdict(const std::string& kind, bool ok, const std::string& detail) {
  Report r;
  r.kind = "verify";
  r.ok = ok;
  ordered_json j{{"kind", "verify"}, {"verified_kind", kind}, {"ok", ok}, {"detail", detail}};
  r.json = dump(j);
  r.text = std::string(ok ? "verified" : "NOT verified") + " (" + kind + "): " + detail + "\n";
  return r;
}

std::vector<Rational> rationals_from(const ordered_json& a) {
  std::vector<Rational> out;
  for (const auto& v : a) out.push_back(detail::rational_field(v, "evidence"));
  return out;
}

Report verify_audit(const ordered_json& j) {
  const auto& entries = detail::require(j, "entries", "audit report");
  std::size_t bad = 0;
  std::string first_bad;
  for (const auto& e : entries) {
    const std::string name = detail::require(e, "name", "entry").get<std::string>();
    LinSystem sys(detail::require(e, "variables", name).get<std::vector<std::string>>());
    for (const auto& c : detail::require(e, "constraints", name)) sys.add(c.get<std::string>());
    const bool feasible = detail::require(e, "verdict", name).get<std::string>() == "feasible";
    const bool expect = detail::require(e, "expect", name).get<std::string>() == "feasible";
    bool ok = feasible == expect;
    ok = ok && (feasible ? verify_witness(sys, rationals_from(detail::require(e, "witness", name)))
                         : verify_certificate(sys, rationals_from(detail::require(e, "certificate", name))));
    ok = ok && is_feasible(sys).feasible == feasible;
    if (!ok && bad++ == 0) first_bad = name;
  }
  if (bad > 0) return verdict("audit", false, std::to_string(bad) + " entries fail, first: " + first_bad);
  return verdict("audit", true, std::to_string(entries.size()) + " entries, evidence re-verified");
}

Report compare(const std::string& kind, const std::string& original, const Report& again) {
  if (again.json != original) return verdict(kind, false, "recomputed report differs");
  if (!again.ok) return verdict(kind, false, "report is reproducible but records a failed property");
  return verdict(kind, true, "recomputed report is byte-identical");
}

Report verify_parsed(std::string_view json_text) {
  const ordered_json j = detail::parse_json(json_text, "report");
  const std::string kind = detail::require(j, "kind", "report").get<std::string>();
  const std::string original = dump(j);
  if (kind == "audit") return verify_audit(j);
  if (kind == "lct" || kind == "family-threshold") {
    return compare(kind, original, lct_report(config_from_json(detail::require(j, "input", kind))));
  }
  if (kind == "loglc") return compare(kind, original, loglc_report(config_from_json(detail::require(j, "input", kind))));
  if (kind == "imult") {
    std::optional<std::pair<std::string, std::string>> pair;
    if (j.contains("pair")) pair = {{j["pair"][0].get<std::string>(), j["pair"][1].get<std::string>()}};
    return compare(kind, original, imult_report(config_from_json(detail::require(j, "input", kind)), pair));
  }
  if (kind == "theorem") {
    const auto which = parse_theorem_selector(detail::require(j, "selector", kind).get<std::string>());
    return compare(kind, original, theorem_report(config_from_json(detail::require(j, "input", kind)), which));
  }
  if (kind == "scenario") {
    return compare(kind, original, scenario_report(detail::require(j, "name", kind).get<std::string>()));
  }
  if (kind == "fuzz") return compare(kind, original, fuzz_report(spec_from_json(detail::require(j, "spec", kind))));
  throw InvariantError("cannot verify a report of kind '" + kind + "'");
}

}  // namespace

Report verify_report(std::string_view json_text) {
  try {
    return verify_parsed(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
}

}  // namespace lcgerm
