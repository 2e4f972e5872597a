#include "lcgerm/scenarios.hpp"

#include <algorithm>

#include "lcgerm/errors.hpp"
#include "lcgerm/linfeas.hpp"
#include "lcgerm/parse.hpp"
#include "lcgerm/theorems.hpp"

namespace lcgerm {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Formula: return "formula";
    case Provenance::Oracle: return "oracle";
    case Provenance::Arithmetic: return "arithmetic";
  }
  return "?";
}

bool ScenarioReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ScenarioCheck& c) { return c.passed; });
}

namespace {

CurveGerm germ(const std::string& s) { return CurveGerm(parse_poly(s), s); }

std::string display(const LctValue& v) { return v.is_infinite() ? "inf" : to_pq(v.value()); }

void check_value(ScenarioReport& r, std::string label, const Rational& expected, const Rational& actual,
                 Provenance p) {
  r.checks.push_back({std::move(label), to_pq(expected), to_pq(actual), p, expected == actual});
}

void check_true(ScenarioReport& r, std::string label, bool actual, Provenance p) {
  r.checks.push_back({std::move(label), "true", actual ? "true" : "false", p, actual});
}

// Evaluates a theorem conclusion, recording a hypothesis failure as a
// failed check rather than letting it escape.
template <class F>
void check_conclusion(ScenarioReport& r, const std::string& label, F&& conclude) {
  try {
    check_true(r, label, conclude().holds(), Provenance::Oracle);
  } catch (const HypothesisNotMet& e) {
    r.checks.push_back({label, "true", std::string("hypothesis not met: ") + e.what(), Provenance::Oracle, false});
  }
}

}  // namespace

ScenarioReport smooth_branch_family(long m, long k) {
  if (m < 2 || k < 2) throw InvariantError("smooth-branch family needs m, k >= 2");
  const long r = k * m * (m - 1);
  const Rational a1 = frac(1, m), a2 = 1 - frac(1, m);
  const std::string curve = "y - x^" + std::to_string(r);
  ScenarioReport rep;
  rep.name = "smooth-branch-family";
  rep.anchor = "smooth branch with high tangency to one of two transverse boundary lines";
  rep.inputs = {{"m", std::to_string(m)}, {"k", std::to_string(k)}, {"delta1", "x"}, {"delta2", "y"},
                {"a1", to_pq(a1)}, {"a2", to_pq(a2)}, {"curve", curve}};

  const CurveGerm d1 = germ("x"), d2 = germ("y"), c = germ(curve);
  const WeightedGerm fixed({{d1, a1}, {d2, a2}});
  const Rational t = frac(1, m) + frac(1, k * m * m);
  check_value(rep, "family threshold", t, lct_threshold_in_family(fixed, c).value, Provenance::Formula);

  const Rational upper = frac(k, k * m - 1);
  std::vector<Rational> samples{t};
  for (long i = 1; i <= 3; ++i) samples.push_back(t + (upper - t) * frac(i, 4));
  for (const auto& lambda : samples) {
    const WeightedGerm omega({{c, lambda}});
    const std::string at = " at lambda = " + to_display(lambda);
    check_value(rep, "mult(omega.delta1)" + at, lambda, pair_mult(omega, d1), Provenance::Formula);
    check_value(rep, "mult(omega.delta2)" + at, Rational(r) * lambda, pair_mult(omega, d2), Provenance::Formula);
  }

  const KostaParams p{Rational(1), Rational(1), frac(1, k * m - 1), Rational(k * m), Rational(1), Rational(0)};
  check_true(rep, "parameter clauses c1..c7", kosta_hypotheses(p, a1, a2).holds(), Provenance::Arithmetic);
  const Rational kosta_bound = p.N + p.B * a2 - a1;
  const Rational main_bound = 2 * (1 - a1);
  check_value(rep, "delta2 bound N + B a2 - a1", Rational(k * (m - 1)) - frac(1, m), kosta_bound,
              Provenance::Formula);
  check_value(rep, "delta2 bound 2(1 - a1)", frac(2 * m - 2, m), main_bound, Provenance::Formula);
  check_true(rep, "parameter bound exceeds the two-curve bound", kosta_bound > main_bound, Provenance::Arithmetic);

  {
    const LocalConfig cfg(d1, d2, a1, a2, WeightedGerm({{c, t}}));
    check_true(rep, "lc at the threshold", analyze(cfg).lc.is_lc, Provenance::Oracle);
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const LocalConfig cfg(d1, d2, a1, a2, WeightedGerm({{c, samples[i]}}));
    const auto a = analyze(cfg);
    const std::string at = " at lambda = " + to_display(samples[i]);
    check_true(rep, "not lc" + at, !a.lc.is_lc, Provenance::Oracle);
    check_conclusion(rep, "two-curve bound" + at, [&] { return main_conclusion(cfg, a); });
    check_conclusion(rep, "parameter bound" + at, [&] { return kosta_conclusion(cfg, p, a); });
  }
  return rep;
}

ScenarioReport germ_lct_table() {
  ScenarioReport rep;
  rep.name = "germ-lct-table";
  rep.anchor = "log canonical thresholds of the basic plane curve singularities";
  // For a Newton-nondegenerate germ the lct is min(1, 1/t) with (t, t) on
  // the Newton boundary; (a, b) are the boundary intercepts.
  struct Row {
    const char* label;
    const char* poly;
    long a, b;
  };
  const Row rows[] = {
      {"smooth", "y - x^2", 1, 2},           {"node", "x*y", 2, 2},
      {"cusp", "y^2 - x^3", 2, 3},           {"tacnode", "y^2 - x^4", 2, 4},
      {"ordinary triple point", "x^3 - y^3", 3, 3}, {"tacnode, irrational branches", "y^2 - 2*x^4", 2, 4},
  };
  for (const auto& row : rows) {
    rep.inputs.push_back({row.label, row.poly});
    const Rational t = frac(row.a * row.b, row.a + row.b);
    const Rational expected = t <= 1 ? Rational(1) : 1 / t;
    const auto got = lct_at_origin(WeightedGerm({{germ(row.poly), Rational(1)}}));
    rep.checks.push_back({std::string("lct ") + row.poly, to_pq(expected), display(got.lct), Provenance::Formula,
                          !got.lct.is_infinite() && got.lct.value() == expected});
  }
  return rep;
}

ScenarioReport fibonacci_tiger(long k_max) {
  if (k_max < 0) throw InvariantError("k_max must be non-negative");
  ScenarioReport rep;
  rep.name = "fibonacci-tiger";
  rep.anchor = "anticanonical divisors with Fibonacci coefficients on a quartic del Pezzo surface";
  rep.inputs = {{"k_max", std::to_string(k_max)}, {"fibonacci", "a1 = a2 = 1"}};
  auto fib = [](unsigned long i) {
    Integer f;
    mpz_fib_ui(f.get_mpz_t(), i);
    return f;
  };
  for (long k = 0; k <= k_max; ++k) {
    const Integer a = fib(2 * k + 1), b = fib(2 * k + 3);
    const std::string at = " at k = " + std::to_string(k);
    // Five curves of degree b each plus (4a - b) L have degree 4(a + b).
    const Integer lhs = 5 * b + (4 * a - b), rhs = 4 * (a + b);
    rep.checks.push_back({"degree identity" + at, rhs.get_str(), lhs.get_str(), Provenance::Arithmetic, lhs == rhs});
    const Rational cl = Rational(Integer(4 * a - b), Integer(a + b));
    Rational coef_l = cl;
    coef_l.canonicalize();
    check_true(rep, "0 < coefficient of L < 1" + at, coef_l > 0 && coef_l < 1, Provenance::Arithmetic);
    Rational t = Rational(Integer(b * (a + b)));
    const Rational value = t / (1 + t);
    check_true(rep, "T/(1 + T) < 1" + at, value < 1, Provenance::Arithmetic);
    if (k == 0) {
      Rational c = Rational(Integer(1), Integer(a + b));
      c.canonicalize();
      check_value(rep, "coefficient of C_i at k = 0", frac(1, 3), c, Provenance::Formula);
      check_value(rep, "coefficient of L at k = 0", frac(2, 3), coef_l, Provenance::Formula);
      check_value(rep, "lct formula at k = 0", frac(6, 7), value, Provenance::Formula);
      const WeightedGerm surrogate({{germ("y"), frac(1, 3)},
                                    {germ("y - x"), frac(1, 3)},
                                    {germ("y + x"), frac(1, 3)},
                                    {germ("y - 2*x"), frac(1, 3)},
                                    {germ("y + 2*x"), frac(1, 3)},
                                    {germ("x"), frac(2, 3)}});
      const auto got = lct_at_origin(surrogate);
      rep.checks.push_back({"surrogate lct at k = 0", to_pq(value), display(got.lct), Provenance::Oracle,
                            !got.lct.is_infinite() && got.lct.value() == value});
    }
    if (k == 1) {
      check_value(rep, "coefficient of L at k = 1", frac(3, 7), coef_l, Provenance::Formula);
      check_value(rep, "lct formula at k = 1", frac(35, 36), value, Provenance::Formula);
    }
  }
  return rep;
}

ScenarioReport line_conic_params() {
  ScenarioReport rep;
  rep.name = "line-conic-params";
  rep.anchor = "tangent hyperplane section of a cubic surface made of a line and a conic";
  const std::vector<std::string> vars{"n", "m"};
  const std::vector<std::string> region{"n >= 0", "m >= 0", "2*n + m <= 2"};
  const KostaParams p{Rational(1), Rational(1), Rational(1), Rational(2), Rational(1), Rational(0)};
  rep.inputs = {{"a1", "n + m - 1"}, {"a2", "n"}, {"region", "2*n + m <= 2, n >= 0, m >= 0"},
                {"(alpha, beta, A, B, M, N)", "(1, 1, 1, 2, 1, 0)"}};
  const std::string a1 = "(n + m - 1)", a2 = "(n)";
  auto num = [](const Rational& q) { return "(" + to_display(q) + ")"; };
  const auto& [alpha, beta, A, B, M, N] = p;
  // The negation of each clause (the first alternative for c7) must be
  // infeasible over the region.
  const std::vector<std::pair<std::string, std::string>> negations{
      {"c1", num(alpha) + "*" + a1 + " + " + num(beta) + "*" + a2 + " > 1"},
      {"c2", num(A) + "*(" + num(B) + " - 1) < 1"},
      {"c3", num(M) + " > 1"},
      {"c4", num(N) + " > 1"},
      {"c5", num(alpha) + "*(" + num(A) + " + " + num(M) + " - 1) < " + num(A * A) + "*(" + num(B) + " + " + num(N) +
                 " - 1)*" + num(beta)},
      {"c6", num(alpha) + "*(1 - " + num(M) + ") + " + num(A) + "*" + num(beta) + " < " + num(A)},
      {"c7", "2*" + num(M) + " + " + num(A) + "*" + num(N) + " > 2"},
  };
  for (const auto& [clause, text] : negations) {
    LinSystem s(vars);
    for (const auto& c : region) s.add(c);
    s.add(text);
    const auto res = is_feasible(s);
    check_true(rep, clause + " holds on the region (negation certified infeasible)",
               !res.feasible && verify_certificate(s, res.certificate), Provenance::Arithmetic);
  }
  const auto form = [&](const std::string& t) { return parse_linear_form(t, vars); };
  check_true(rep, "M + A a1 - a2 = m",
             form(num(M) + " + " + num(A) + "*" + a1 + " - " + a2) == form("m"), Provenance::Arithmetic);
  check_true(rep, "N + B a2 - a1 = 1 + n - m",
             form(num(N) + " + " + num(B) + "*" + a2 + " - " + a1) == form("1 + n - m"), Provenance::Arithmetic);
  return rep;
}

std::vector<std::string> scenario_names() {
  return {"smooth-branch-family", "germ-lct-table", "fibonacci-tiger", "line-conic-params"};
}

std::vector<ScenarioReport> run_scenario(const std::string& name) {
  if (name == "smooth-branch-family") {
    std::vector<ScenarioReport> out;
    for (long m : {2, 3}) {
      for (long k : {2, 3, 4}) out.push_back(smooth_branch_family(m, k));
    }
    return out;
  }
  if (name == "germ-lct-table") return {germ_lct_table()};
  if (name == "fibonacci-tiger") return {fibonacci_tiger(50)};
  if (name == "line-conic-params") return {line_conic_params()};
  throw InvariantError("unknown scenario '" + name + "'");
}

}  // namespace lcgerm
