#include <doctest.h>

#include <numeric>
#include <random>

#include "lcgerm/errors.hpp"
#include "lcgerm/invariants.hpp"
#include "lcgerm/parse.hpp"

using namespace lcgerm;

namespace {

CurveGerm G(const char* s) { return CurveGerm(parse_poly(s)); }

WeightedGerm W(std::vector<std::pair<const char*, Rational>> comps) {
  std::vector<WeightedGerm::Component> v;
  for (auto& [s, c] : comps) v.push_back({G(s), c});
  return WeightedGerm(std::move(v));
}

Rational Q(long p, long q = 1) { return frac(p, q); }

// lct of y^a - x^b by the Newton polygon: the diagonal meets the edge at
// t = ab/(a+b), and the threshold is min(1, 1/t).
Rational binomial_lct(long a, long b) {
  Rational t(a * b, a + b);
  t.canonicalize();
  return t <= 1 ? Rational(1) : 1 / t;
}

BivarPoly random_linear_change(const BivarPoly& f, std::mt19937_64& rng, std::array<Elem, 4>& m) {
  std::uniform_int_distribution<int> c(-3, 3);
  while (true) {
    for (auto& e : m) e = Elem(c(rng));
    if (!(m[0] * m[3] - m[1] * m[2]).is_zero()) break;
  }
  return f.linear_substitution(m[0], m[1], m[2], m[3]);
}

}  // namespace

TEST_CASE("intersection_multiplicity examples") {
  CHECK(intersection_multiplicity(G("x"), G("y")) == 1);
  CHECK(intersection_multiplicity(G("y - x^4"), G("y")) == 4);
  CHECK(intersection_multiplicity(G("y^2 - x^3"), G("y")) == 3);
  CHECK(intersection_multiplicity(G("y^2 - x^3"), G("x")) == 2);
  CHECK(intersection_multiplicity(G("y^2 - x^3"), G("y^2 - 2*x^3")) == 6);
  CHECK(intersection_multiplicity(G("y^2 - x^3"), G("y^3 - x^2")) == 4);
  CHECK_THROWS_AS(intersection_multiplicity(G("x*y"), G("x*(y - x)")), InvariantError);
}

TEST_CASE("Noether sum and resultant agree on a corpus of pairs") {
  const char* corpus[] = {"x", "y", "y - x", "y - x^2", "y + x^2", "y^2 - x^3", "y^2 - 2*x^3", "y^2 - x^5",
                          "x^2 - y^3", "y^3 - x^4", "x*y", "y^2 - x^4", "y^2 - 2*x^4", "x^3 - y^3",
                          "(y - x)*(y - 2*x)", "y - x^3 + x*y", "y^2 - x^2 - x^3", "x - y^2"};
  const int n = sizeof(corpus) / sizeof(corpus[0]);
  int compared = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const CurveGerm f = G(corpus[i]), g = G(corpus[j]);
      if (!are_coprime(f.poly(), g.poly())) continue;
      CHECK_MESSAGE(intersection_multiplicity_noether(f, g) == intersection_multiplicity_resultant(f, g),
                    corpus[i], " vs ", corpus[j]);
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("pair_mult and total_mult") {
  const Rational lambda = Q(41, 64);
  CHECK(pair_mult(W({{"y - x^4", lambda}}), G("x")) == lambda);
  CHECK(pair_mult(W({{"y - x^4", lambda}}), G("y")) == 4 * lambda);
  CHECK(pair_mult(WeightedGerm(), G("y")) == 0);
  CHECK_THROWS_AS(pair_mult(W({{"x*y", Q(1)}}), G("y")), InvariantError);

  CHECK(total_mult(W({{"x", Q(1, 3)}, {"y", Q(1, 3)}, {"y - x", Q(1, 3)}, {"y + x", Q(1, 3)},
                      {"y - 2*x", Q(1, 3)}, {"y + 2*x", Q(2, 3)}})) == Q(7, 3));
  CHECK(total_mult(W({{"y^2 - x^3", Q(1)}})) == 2);
  CHECK(total_mult(WeightedGerm()) == 0);
}

TEST_CASE("weighted germ validation") {
  CHECK_THROWS_AS(W({{"x", Q(-1)}}), InvariantError);
  CHECK_THROWS_AS(W({{"x*y", Q(1)}, {"y", Q(1)}}), InvariantError);
  const auto w = W({{"x", Q(0)}, {"y", Q(1, 2)}});
  CHECK(w.size() == 1);
  CHECK(w.dropped_zero_entries());
}

TEST_CASE("is_log_canonical_at_origin examples") {
  CHECK(is_log_canonical_at_origin(W({{"y^2 - x^3", Q(5, 6)}})).is_lc);

  const auto cusp = is_log_canonical_at_origin(W({{"y^2 - x^3", Q(1)}}));
  CHECK_FALSE(cusp.is_lc);
  REQUIRE(cusp.witness.has_value());
  CHECK(cusp.witness->kind == LcWitness::Kind::Node);
  CHECK(cusp.witness->index == 2);
  CHECK(cusp.witness->logdisc == 5);
  CHECK(cusp.witness->ord == std::vector<int>{6});
  CHECK(cusp.witness->coefficient == 2);

  CHECK(is_log_canonical_at_origin(W({{"x", Q(1, 2)}, {"y", Q(1, 2)}})).is_lc);

  const auto big = is_log_canonical_at_origin(W({{"x", Q(3, 2)}}));
  CHECK_FALSE(big.is_lc);
  CHECK(big.witness->kind == LcWitness::Kind::Component);
}

TEST_CASE("witness arithmetic is exact") {
  for (const auto& d : {W({{"y^2 - x^3", Q(1)}}), W({{"y^2 - x^5", Q(4, 5)}, {"x", Q(1, 2)}}),
                        W({{"y - x^3", Q(1)}, {"y", Q(1)}, {"x", Q(1, 3)}})}) {
    const auto r = is_log_canonical_at_origin(d);
    REQUIRE_FALSE(r.is_lc);
    REQUIRE(r.witness.has_value());
    if (r.witness->kind == LcWitness::Kind::Node) {
      Rational e = 1 - r.witness->logdisc;
      for (std::size_t j = 0; j < d.size(); ++j) e += d.components()[j].coefficient * Rational(r.witness->ord[j]);
      CHECK(e == r.witness->coefficient);
      CHECK(e > 1);
    }
  }
}

TEST_CASE("lct_at_origin examples") {
  CHECK(lct_at_origin(W({{"y^2 - x^3", Q(1)}})).lct == LctValue::finite(Q(5, 6)));
  CHECK(lct_at_origin(W({{"y^2 - x^4", Q(1)}})).lct == LctValue::finite(Q(3, 4)));
  CHECK(lct_at_origin(W({{"y^2 - 2*x^4", Q(1)}})).lct == LctValue::finite(Q(3, 4)));
  CHECK(lct_at_origin(W({{"x^3 - y^3", Q(1)}})).lct == LctValue::finite(Q(2, 3)));
  CHECK(lct_at_origin(W({{"x", Q(1, 3)}, {"y", Q(1, 3)}, {"y - x", Q(1, 3)}, {"y + x", Q(1, 3)},
                         {"y - 2*x", Q(1, 3)}, {"y + 2*x", Q(2, 3)}}))
            .lct == LctValue::finite(Q(6, 7)));
  CHECK(lct_at_origin(WeightedGerm()).lct.is_infinite());
  CHECK_THROWS_AS(lct_at_origin(W({{"x", Q(0)}})), InvariantError);
  CHECK(lct_at_origin(WeightedGerm()).lct.to_string() == "inf");
}

TEST_CASE("lct of binomials matches the Newton polygon formula") {
  for (long a = 1; a <= 6; ++a) {
    for (long b = a; b <= 7; ++b) {
      const BivarPoly f = BivarPoly::y().pow(a) - BivarPoly::x().pow(b);
      const auto r = lct_at_origin(WeightedGerm({{CurveGerm(f), Q(1)}}));
      CHECK_MESSAGE(r.lct.value() == binomial_lct(a, b), "a=", a, " b=", b);
    }
  }
}

TEST_CASE("lct_threshold_in_family examples") {
  CHECK(lct_threshold_in_family(W({{"x", Q(1, 2)}, {"y", Q(1, 2)}}), G("y - x^4")).value == Q(5, 8));
  CHECK(lct_threshold_in_family(W({{"x", Q(1, 3)}, {"y", Q(2, 3)}}), G("y - x^6")).value == Q(4, 9));
  CHECK(lct_threshold_in_family(WeightedGerm(), G("y^2 - x^3")).value == Q(5, 6));
  CHECK_THROWS_AS(lct_threshold_in_family(W({{"x*y", Q(1, 2)}}), G("y")), InvariantError);
  CHECK_THROWS_AS(lct_threshold_in_family(W({{"y^2 - x^3", Q(1)}}), G("x")), InvariantError);
}

namespace {

// Random coprime configuration of up to three components with rational tangents.
WeightedGerm random_divisor(std::mt19937_64& rng) {
  static const char* pool[] = {"x", "y", "y - x", "y + 2*x", "y - x^2", "y + x^3", "y^2 - x^3", "y^2 - x^5",
                               "x^2 - y^3", "y^2 - x^4 - x^5", "y - 3*x^2 + x^3", "x - y^2"};
  std::uniform_int_distribution<int> pick(0, 11), count(1, 3), num(1, 12), den(1, 12);
  while (true) {
    std::vector<WeightedGerm::Component> comps;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      Rational c(num(rng), den(rng));
      c.canonicalize();
      comps.push_back({G(pool[pick(rng)]), c});
    }
    try {
      return WeightedGerm(std::move(comps));
    } catch (const InvariantError&) {
    }
  }
}

}  // namespace

TEST_CASE("lct is attained and is sharp") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_divisor(rng);
    const auto r = lct_at_origin(d);
    REQUIRE_FALSE(r.lct.is_infinite());
    const Rational t = r.lct.value();
    CHECK(is_log_canonical_at_origin(d.scaled(t)).is_lc);
    CHECK_FALSE(is_log_canonical_at_origin(d.scaled(t + Rational(1, 1000))).is_lc);
  }
}

TEST_CASE("lct scales inversely") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(1, 9), den(1, 9);
  for (int i = 0; i < 60; ++i) {
    const auto d = random_divisor(rng);
    Rational t(num(rng), den(rng));
    t.canonicalize();
    CHECK(lct_at_origin(d.scaled(t)).lct.value() == lct_at_origin(d).lct.value() / t);
  }
}

TEST_CASE("lct and intersection numbers are invariant under linear coordinate changes") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const auto d = random_divisor(rng);
    std::array<Elem, 4> m;
    std::vector<WeightedGerm::Component> moved;
    const BivarPoly first = random_linear_change(d.components()[0].germ.poly(), rng, m);
    for (const auto& c : d.components()) {
      moved.push_back({CurveGerm(c.germ.poly().linear_substitution(m[0], m[1], m[2], m[3])), c.coefficient});
    }
    (void)first;
    const WeightedGerm d2(std::move(moved));
    CHECK(lct_at_origin(d2).lct == lct_at_origin(d).lct);
    if (d.size() >= 2) {
      CHECK(intersection_multiplicity(d.components()[0].germ, d.components()[1].germ) ==
            intersection_multiplicity(d2.components()[0].germ, d2.components()[1].germ));
    }
  }
}

TEST_CASE("adding a component never raises the lct") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto d = random_divisor(rng);
    const auto extra = random_divisor(rng);
    std::vector<WeightedGerm::Component> comps = d.components();
    comps.push_back(extra.components()[0]);
    try {
      const WeightedGerm bigger(std::move(comps));
      CHECK(lct_at_origin(bigger).lct.value() <= lct_at_origin(d).lct.value());
    } catch (const InvariantError&) {
    }
  }
}

TEST_CASE("pair_mult dominates total_mult against smooth curves") {
  std::mt19937_64 rng(8);
  const char* smooth[] = {"x + y^2", "y - x + x^3", "2*x + 3*y", "y + 5*x^2"};
  for (int i = 0; i < 40; ++i) {
    const auto d = random_divisor(rng);
    for (const char* s : smooth) {
      const CurveGerm delta = G(s);
      bool coprime = true;
      for (const auto& c : d.components()) coprime = coprime && are_coprime(c.germ.poly(), delta.poly());
      if (!coprime) continue;
      CHECK(pair_mult(d, delta) >= total_mult(d));
    }
  }
}
