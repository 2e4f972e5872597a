#include <doctest.h>

#include "lcgerm/errors.hpp"
#include "lcgerm/parse.hpp"
#include "lcgerm/theorems.hpp"

using namespace lcgerm;

namespace {

CurveGerm G(const char* s) { return CurveGerm(parse_poly(s)); }
CurveGerm G(const std::string& s) { return CurveGerm(parse_poly(s)); }

WeightedGerm W(std::vector<std::pair<std::string, Rational>> comps) {
  std::vector<WeightedGerm::Component> v;
  for (auto& [s, c] : comps) v.push_back({G(s), c});
  return WeightedGerm(std::move(v));
}

Rational Q(long p, long q = 1) { return frac(p, q); }

// Delta1 = {x = 0} at 1/m, Delta2 = {y = 0} at 1 - 1/m, omega = lambda*(y - x^r).
LocalConfig smooth_branch_config(long m, long k, const Rational& lambda) {
  const long r = k * m * (m - 1);
  return LocalConfig(G("x"), G("y"), Q(1, m), 1 - Q(1, m), W({{"y - x^" + std::to_string(r), lambda}}));
}

}  // namespace

TEST_CASE("LocalConfig validation") {
  CHECK_THROWS_AS(LocalConfig(G("y^2 - x^3"), G("x"), Q(0), Q(0), {}), InvariantError);
  CHECK_THROWS_AS(LocalConfig(G("y"), G("y - x^2"), Q(0), Q(0), {}), InvariantError);
  CHECK_THROWS_AS(LocalConfig(G("x"), G("y"), Q(-1), Q(0), {}), InvariantError);
  CHECK_THROWS_AS(LocalConfig(G("x"), G("y"), Q(0), Q(0), W({{"x*(y - x)", Q(1)}})), InvariantError);
  CHECK_NOTHROW(LocalConfig(G("x - y"), G("y + 2*x"), Q(0), Q(0), W({{"y^2 - x^3", Q(1)}})));
}

TEST_CASE("analyze reads one resolution") {
  const auto a = analyze(smooth_branch_config(2, 2, Q(41, 64)));
  CHECK_FALSE(a.lc.is_lc);
  CHECK(a.m == Q(41, 64));
  CHECK(a.omega_delta1 == Q(41, 64));
  CHECK(a.omega_delta2 == Q(41, 16));
}

TEST_CASE("adjunction_conclusion examples") {
  auto c1 = adjunction_conclusion(G("x"), Q(0), W({{"y", Q(3, 2)}}));
  CHECK(c1.holds());
  CHECK(c1.disjuncts[0].value == Q(3, 2));

  // The cusp alone has lct 5/6, so the pair is not lc.
  CHECK_FALSE(is_log_canonical_at_origin(W({{"y", Q(1, 2)}, {"y^2 - x^3", Q(1)}})).is_lc);
  auto c2 = adjunction_conclusion(G("y"), Q(1, 2), W({{"y^2 - x^3", Q(1)}}));
  CHECK(c2.holds());
  CHECK(c2.disjuncts[0].value == 3);

  auto c3 = adjunction_conclusion(G("y"), Q(1), W({{"y - x", Q(2, 3)}, {"y + x", Q(2, 3)}}));
  CHECK(c3.holds());
  CHECK(c3.disjuncts[0].value == Q(4, 3));

  CHECK_THROWS_AS(adjunction_conclusion(G("y"), Q(1, 2), W({{"y - x", Q(1, 2)}})), HypothesisNotMet);
  CHECK_THROWS_AS(adjunction_conclusion(G("y"), Q(3, 2), W({{"x", Q(1)}})), HypothesisNotMet);
  CHECK_THROWS_AS(adjunction_conclusion(G("y"), Q(1), W({{"y*(y - x^2)", Q(1)}})), InvariantError);
}

TEST_CASE("kosta_original_hypothesis examples") {
  CHECK(kosta_original_hypothesis(Q(1, 2), Q(1, 2), 3));
  CHECK_FALSE(kosta_original_hypothesis(Q(1), Q(1), 3));
  CHECK(kosta_original_hypothesis(Q(0), Q(0), 100));
  CHECK_THROWS_AS(kosta_original_hypothesis(Q(0), Q(0), 2), InvariantError);
}

TEST_CASE("kosta_original_conclusion examples") {
  const auto c1 = kosta_original_conclusion(smooth_branch_config(2, 2, Q(41, 64)), 3);
  CHECK(c1.disjuncts[0].threshold == Q(1, 2));
  CHECK(c1.disjuncts[0].holds());
  CHECK(c1.holds());

  LocalConfig cfg2(G("x"), G("y"), Q(1, 4), Q(1, 4), W({{"y - x", Q(5, 4)}}));
  const auto c2 = kosta_original_conclusion(cfg2, 3);
  CHECK(c2.disjuncts[0].value == Q(5, 4));
  CHECK(c2.disjuncts[0].threshold == Q(1, 4));
  CHECK(c2.holds());

  LocalConfig lc(G("x"), G("y"), Q(1, 4), Q(1, 4), W({{"y - x", Q(1, 4)}}));
  CHECK_THROWS_AS(kosta_original_conclusion(lc, 3), HypothesisNotMet);
  LocalConfig big(G("x"), G("y"), Q(1), Q(1), W({{"y - x", Q(1)}}));
  CHECK_THROWS_AS(kosta_original_conclusion(big, 3), HypothesisNotMet);
}

TEST_CASE("kosta_hypotheses examples") {
  const auto k1 = kosta_hypotheses({Q(1), Q(1), Q(1, 3), Q(4), Q(1), Q(0)}, Q(1, 2), Q(1, 2));
  CHECK(k1.holds());
  const auto k2 = kosta_hypotheses({Q(1), Q(1), Q(1), Q(2), Q(1), Q(0)}, Q(0), Q(1, 2));
  CHECK(k2.holds());
  const auto k3 = kosta_hypotheses({Q(1), Q(1), Q(1), Q(1), Q(1), Q(1)}, Q(0), Q(0));
  CHECK_FALSE(k3.holds());
  CHECK_FALSE(k3.clauses[1]);
  CHECK(k3.clauses[0]);
  CHECK(KostaCheck::kClauseText[1] == std::string("A*(B - 1) >= 1"));
  CHECK_THROWS_AS(kosta_hypotheses({Q(-1), Q(1), Q(1), Q(1), Q(1), Q(1)}, Q(0), Q(0)), InvariantError);
}

TEST_CASE("smooth-branch family parameters satisfy every clause") {
  for (long m : {2, 3, 4}) {
    for (long k : {2, 3, 4, 5}) {
      const KostaParams p{Q(1), Q(1), Q(1, k * m - 1), Q(k * m), Q(1), Q(0)};
      CHECK(kosta_hypotheses(p, Q(1, m), 1 - Q(1, m)).holds());
      CHECK(p.N + p.B * (1 - Q(1, m)) - Q(1, m) == Q(k * (m - 1)) - Q(1, m));
    }
  }
}

TEST_CASE("kosta_conclusion examples") {
  const KostaParams p{Q(1), Q(1), Q(1, 3), Q(4), Q(1), Q(0)};
  const auto c = kosta_conclusion(smooth_branch_config(2, 2, Q(41, 64)), p);
  CHECK(c.disjuncts[0].threshold == Q(2, 3));
  CHECK(c.disjuncts[1].threshold == Q(3, 2));
  CHECK_FALSE(c.disjuncts[0].holds());
  CHECK(c.disjuncts[1].holds());
  CHECK(c.holds());

  // Line-plus-conic instance with n = 1/2, m = 1: a1 = n + m - 1, a2 = n and
  // omega has mult 1 along Delta1. Thresholds reduce to m and 1 + n - m.
  const KostaParams q{Q(1), Q(1), Q(1), Q(2), Q(1), Q(0)};
  LocalConfig cfg(G("x"), G("y"), Q(1, 2), Q(1, 2), W({{"y - x^3", Q(1)}}));
  const auto a = analyze(cfg);
  CHECK_FALSE(a.lc.is_lc);
  CHECK(a.omega_delta1 == 1);
  const auto d = kosta_conclusion(cfg, q, a);
  CHECK(d.disjuncts[0].threshold == 1);
  CHECK(d.disjuncts[1].threshold == Q(1, 2));
  CHECK(d.holds());

  LocalConfig lc(G("x"), G("y"), Q(1, 2), Q(1, 2), W({{"y - x", Q(1, 4)}}));
  CHECK_THROWS_AS(kosta_conclusion(lc, p), HypothesisNotMet);
  const KostaParams bad{Q(1), Q(1), Q(1), Q(1), Q(1), Q(1)};
  CHECK_THROWS_AS(kosta_conclusion(cfg, bad), HypothesisNotMet);
}

TEST_CASE("main_conclusion examples") {
  const auto c = main_conclusion(smooth_branch_config(2, 2, Q(41, 64)));
  CHECK(c.disjuncts[0].threshold == 1);
  CHECK(c.disjuncts[1].threshold == 1);
  CHECK_FALSE(c.disjuncts[0].holds());
  CHECK(c.disjuncts[1].value == Q(41, 16));
  CHECK(c.holds());

  // Total mult 5/2 at the origin: not lc, so the conclusion is asserted.
  LocalConfig heavy(G("x"), G("y"), Q(1), Q(1), W({{"y - x", Q(1, 2)}}));
  CHECK_FALSE(analyze(heavy).lc.is_lc);
  CHECK(main_conclusion(heavy).holds());

  LocalConfig light(G("x"), G("y"), Q(1, 4), Q(1, 4), W({{"y - x", Q(1, 2)}}));
  CHECK_THROWS_AS(main_conclusion(light), HypothesisNotMet);

  LocalConfig two_cusps(G("x"), G("y"), Q(0), Q(0), W({{"y^2 - x^3", Q(1, 2)}, {"y^2 - 2*x^3", Q(1, 2)}}));
  CHECK_THROWS_AS(main_conclusion(two_cusps), HypothesisNotMet);
}

TEST_CASE("main_conclusion along the smooth-branch family") {
  // Just past the threshold the pair stops being lc and the bound must hold.
  for (long m : {2, 3}) {
    for (long k : {2, 3}) {
      const Rational t = Q(1, m) + Q(1, k * m * m);
      for (const Rational& lambda : std::vector<Rational>{t + Q(1, 1000), (t + Q(k, k * m - 1)) / 2}) {
        const auto cfg = smooth_branch_config(m, k, lambda);
        const auto a = analyze(cfg);
        CHECK_FALSE(a.lc.is_lc);
        CHECK(main_conclusion(cfg, a).holds());
        const KostaParams p{Q(1), Q(1), Q(1, k * m - 1), Q(k * m), Q(1), Q(0)};
        CHECK(kosta_conclusion(cfg, p, a).holds());
      }
      CHECK(analyze(smooth_branch_config(m, k, t)).lc.is_lc);
    }
  }
}

TEST_CASE("dominance_in_region examples") {
  CHECK(dominance_in_region(Q(1, 2), Q(3, 4), Q(1, 4), 3).holds());
  CHECK(dominance_in_region(Q(0), Q(0), Q(0), 3).holds());
  CHECK_THROWS_AS(dominance_in_region(Q(1), Q(1), Q(0), 3), HypothesisNotMet);
  CHECK_THROWS_AS(dominance_in_region(Q(0), Q(0), Q(0), 2), InvariantError);

  // A region point where the stated bounds fail; the comparison against the
  // actual Delta2 threshold n/(n-1) a2 - a1 still holds.
  const auto r = dominance_in_region(Q(3, 5), Q(1, 2), Q(1, 10), 3);
  CHECK(r.delta1_dominates);
  CHECK_FALSE(r.delta2_dominates);
  CHECK(r.delta2_dominates_bound);
  CHECK_FALSE(r.a1_at_most_half);
  CHECK_FALSE(r.holds());
}

TEST_CASE("dominance grid") {
  for (long n : {3, 4, 5, 10}) {
    const auto grid = dominance_region_grid(n, 10000);
    CHECK(grid.size() >= 10000);
    long literal_violations = 0;
    for (const auto& p : grid) {
      REQUIRE(in_dominance_region(p.a1, p.a2, p.m, n));
      const auto r = dominance_in_region(p.a1, p.a2, p.m, n);
      CHECK(r.delta1_dominates);
      CHECK(r.delta2_dominates_bound);
      CHECK(r.a2_at_most_one);
      CHECK(r.m_at_most_one);
      if (!r.holds()) ++literal_violations;
    }
    CHECK(literal_violations > 0);
  }
}
