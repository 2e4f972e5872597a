#include <doctest.h>

#include <random>

#include "lcgerm/errors.hpp"
#include "lcgerm/factor.hpp"
#include "lcgerm/germ.hpp"
#include "lcgerm/parse.hpp"

using namespace lcgerm;

namespace {

BivarPoly P(const char* s) { return parse_poly(s); }

BivarPoly random_poly(std::mt19937_64& rng, int max_terms, int max_deg) {
  std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_deg), num(-9, 9), den(1, 6);
  BivarPoly p;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    p = p + BivarPoly::monomial(nullptr, Elem(Rational(num(rng), den(rng))), deg(rng), deg(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("rational sums match cross-multiplication") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 10000; ++i) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational lhs = Rational(a, b) + Rational(c, d);
    lhs.canonicalize();
    const Integer n = Integer(a) * d + Integer(c) * b;
    const Integer m = Integer(b) * d;
    // reduced form: n/m equals lhs and lhs is in lowest terms
    CHECK(lhs.get_num() * m == n * lhs.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), lhs.get_num().get_mpz_t(), lhs.get_den().get_mpz_t());
    CHECK(g == 1);
    CHECK(lhs.get_den() > 0);
  }
}

TEST_CASE("rational text forms") {
  CHECK(to_pq(Rational(2)) == "2/1");
  CHECK(to_pq(Rational(-3, 6)) == "-1/2");
  CHECK(to_display(Rational(4, 2)) == "2");
  CHECK(parse_rational("5/6") == Rational(5, 6));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("parse_poly examples") {
  const auto cusp = P("y^2 - x^3");
  CHECK(cusp.terms().size() == 2);
  CHECK(cusp.coeff(0, 2) == Elem(1));
  CHECK(cusp.coeff(3, 0) == Elem(-1));

  const auto branch = P("y - x^4");
  CHECK(branch.terms().size() == 2);
  CHECK(branch.coeff(0, 1) == Elem(1));
  CHECK(branch.coeff(4, 0) == Elem(-1));

  const auto squares = P("(y - x)*(y + x)");
  CHECK(squares.terms().size() == 2);
  CHECK(squares.coeff(0, 2) == Elem(1));
  CHECK(squares.coeff(2, 0) == Elem(-1));

  CHECK(P("1/2*x + 1 / 3 * y") == BivarPoly::monomial(nullptr, Elem(Rational(1, 2)), 1, 0) +
                                        BivarPoly::monomial(nullptr, Elem(Rational(1, 3)), 0, 1));
  CHECK(P("-x + y") == BivarPoly::y() - BivarPoly::x());
}

TEST_CASE("parse_poly errors report positions") {
  try {
    parse_poly("2x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  try {
    parse_poly("y + z");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_poly("x/0"), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0*x"), ParseError);
  CHECK_THROWS_AS(parse_poly("(x + y"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x^"), ParseError);
}

TEST_CASE("parse_poly maps custom variable names") {
  const VariableNames uv{"u", "v"};
  CHECK(parse_poly("v^2 - u^3", uv) == P("y^2 - x^3"));
  CHECK_THROWS_AS(parse_poly("x", uv), ParseError);
}

TEST_CASE("parse then print then parse is a fixed point") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const BivarPoly p = random_poly(rng, 6, 5);
    const BivarPoly again = parse_poly(p.to_string());
    CHECK(again == p);
    CHECK(parse_poly(again.to_string()).to_string() == p.to_string());
  }
  CHECK(P("y^2 - x^3").to_string() == "y^2 - x^3");
  CHECK(P("0").to_string() == "0");
}

TEST_CASE("mult_at_origin") {
  CHECK(mult_at_origin(P("y^2 - x^3")) == 2);
  CHECK(mult_at_origin(P("y - x^4")) == 1);
  CHECK(mult_at_origin(P("x*y")) == 2);
  CHECK_THROWS_AS(mult_at_origin(P("0")), InvariantError);
}

TEST_CASE("mult_at_origin is additive under products") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const BivarPoly f = random_poly(rng, 4, 4), g = random_poly(rng, 4, 4);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(mult_at_origin(f * g) == mult_at_origin(f) + mult_at_origin(g));
  }
}

TEST_CASE("smoothness and transversality") {
  CHECK(is_smooth_at_origin(CurveGerm(P("y - x^4"))));
  CHECK_FALSE(is_smooth_at_origin(CurveGerm(P("y^2 - x^3"))));
  CHECK(is_smooth_at_origin(CurveGerm(P("x"))));

  CHECK(are_transverse_at_origin(CurveGerm(P("x")), CurveGerm(P("y"))));
  CHECK_FALSE(are_transverse_at_origin(CurveGerm(P("y - x")), CurveGerm(P("y - x + x^2"))));
  CHECK(are_transverse_at_origin(CurveGerm(P("x")), CurveGerm(P("y - x^4"))));
  CHECK_THROWS_AS(are_transverse_at_origin(CurveGerm(P("x")), CurveGerm(P("y^2 - x^3"))), InvariantError);
}

TEST_CASE("transversality is symmetric") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int i = 0; i < 200; ++i) {
    const BivarPoly f = BivarPoly::monomial(nullptr, Elem(c(rng)), 1, 0) +
                        BivarPoly::monomial(nullptr, Elem(c(rng)), 0, 1) + P("x^2");
    const BivarPoly g = BivarPoly::monomial(nullptr, Elem(c(rng)), 1, 0) +
                        BivarPoly::monomial(nullptr, Elem(c(rng)), 0, 1) + P("y^3");
    if (mult_at_origin(f) != 1 || mult_at_origin(g) != 1) continue;
    const CurveGerm a(f), b(g);
    CHECK(are_transverse_at_origin(a, b) == are_transverse_at_origin(b, a));
  }
}

TEST_CASE("squarefree_check") {
  CHECK(squarefree_check(P("y^2 - x^3")));
  CHECK_FALSE(squarefree_check(P("(y - x)^2")));
  CHECK(squarefree_check(P("x*y")));
  CHECK_FALSE(squarefree_check(P("x*(y - x^2)^2*(y + 1)")));
  CHECK(squarefree_check(P("(y^2 - x^3)*(y^2 - 2*x^3)")));
  CHECK_THROWS_AS(squarefree_check(P("0")), InvariantError);
}

TEST_CASE("germ invariants are enforced") {
  CHECK_THROWS_AS(CurveGerm(P("0")), InvariantError);
  CHECK_THROWS_AS(CurveGerm(P("y - 1")), InvariantError);
  CHECK_THROWS_AS(CurveGerm(P("(y - x)^2")), InvariantError);
}

TEST_CASE("bivariate gcd") {
  CHECK(gcd(P("(y - x)*(y + x^2)"), P("(y - x)*(x - 3)")) == P("y - x"));
  CHECK(gcd(P("x^2*y"), P("x*y^2")) == P("x*y"));
  CHECK(gcd(P("y^2 - x^3"), P("y")).is_constant());
}

TEST_CASE("univariate factorization over Q") {
  auto t = [](std::vector<int> c) {
    std::vector<Elem> e;
    for (int v : c) e.emplace_back(v);
    return UPoly(nullptr, e);
  };
  // (t - 1)(t^2 + t + 1)
  auto f = factor(t({-1, 0, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == t({-1, 1}));
  CHECK(f[1] == t({1, 1, 1}));

  CHECK(factor(t({-2, 0, 1})).size() == 1);
  // x^4 + 1 is irreducible over Q but splits mod every prime
  CHECK(factor(t({1, 0, 0, 0, 1})).size() == 1);
  // (t^2 - 2)(t^2 - 3)
  auto g = factor(t({6, 0, -5, 0, 1}));
  CHECK(g.size() == 2);
  // (2t - 1)(3t + 2)(t^2 + 1) with repeated factor squared away
  UPoly h = t({-1, 2}) * t({2, 3}) * t({1, 0, 1}) * t({1, 0, 1});
  auto hf = factor(h);
  REQUIRE(hf.size() == 3);
  CHECK(hf[0] == UPoly(nullptr, {Elem(Rational(-1, 2)), Elem(1)}));
  CHECK(hf[1] == UPoly(nullptr, {Elem(Rational(2, 3)), Elem(1)}));
  CHECK(hf[2] == t({1, 0, 1}));
  // x^8 - 1 = (x-1)(x+1)(x^2+1)(x^4+1)
  CHECK(factor(t({-1, 0, 0, 0, 0, 0, 0, 0, 1})).size() == 4);
}

TEST_CASE("factorization over an extension tower") {
  const UPoly t2m2(nullptr, {Elem(-2), Elem(0), Elem(1)});
  const FieldPtr k = Field::extend(t2m2, "s2");
  const Elem s2 = Elem::generator(k);
  CHECK(s2 * s2 == Elem(2));
  CHECK((s2 + Elem(1)).inverse() == s2 - Elem(1));

  auto split = factor(t2m2.lifted(k));
  REQUIRE(split.size() == 2);
  CHECK(split[0].degree() == 1);
  CHECK(split[1].degree() == 1);
  CHECK(split[0] * split[1] == t2m2.lifted(k));

  const UPoly t2m3(k, {Elem(-3), Elem(0), Elem(1)});
  CHECK(factor(t2m3).size() == 1);

  // t^4 - 10 t^2 + 1 has roots +-sqrt2 +- sqrt3: two quadratics over Q(sqrt2)
  const UPoly quartic(k, {Elem(1), Elem(0), Elem(-10), Elem(0), Elem(1)});
  auto q = factor(quartic);
  REQUIRE(q.size() == 2);
  CHECK(q[0].degree() == 2);
  CHECK(q[0] * q[1] == quartic);

  // second level: Q(sqrt2)(sqrt3)
  const FieldPtr k2 = Field::extend(t2m3, "s3");
  const Elem s3 = Elem::generator(k2);
  CHECK(s3 * s3 == Elem(3));
  CHECK(factor(quartic.lifted(k2)).size() == 4);
  CHECK(k2->absolute_degree() == 4);

  CHECK_THROWS_AS(Field::extend(UPoly(nullptr, {Elem(-4), Elem(0), Elem(1)}), "bad"), InvariantError);
}

TEST_CASE("tower height is bounded") {
  FieldPtr f;
  int primes[] = {2, 3, 5, 7, 11};
  for (int i = 0; i < 4; ++i) {
    f = Field::extend(UPoly(f, {Elem(-primes[i]), Elem(0), Elem(1)}), "r" + std::to_string(i), 4);
  }
  CHECK(f->height() == 4);
  CHECK_THROWS_AS(Field::extend(UPoly(f, {Elem(-11), Elem(0), Elem(1)}), "r4", 4), TowerHeightExceeded);
}
