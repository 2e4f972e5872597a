#include <doctest.h>

#include "lcgerm/blowup.hpp"
#include "lcgerm/errors.hpp"
#include "lcgerm/parse.hpp"

using namespace lcgerm;

namespace {

BivarPoly P(const char* s) { return parse_poly(s); }

// Substitutes (x, y) -> (x, x*y) term by term and strips x^m.
BivarPoly substitute_chart1(const BivarPoly& f) {
  BivarPoly out;
  const BivarPoly x = BivarPoly::x(), xy = BivarPoly::x() * BivarPoly::y();
  for (const auto& [e, c] : f.terms()) out = out + c * (x.pow(e.first) * xy.pow(e.second));
  const int m = f.order();
  BivarPoly stripped;
  for (const auto& [e, c] : out.terms()) {
    REQUIRE(e.first >= m);
    stripped = stripped + BivarPoly::monomial(nullptr, c, e.first - m, e.second);
  }
  return stripped;
}

Chart chart_of(std::vector<const char*> polys) {
  Chart c;
  int i = 0;
  for (auto p : polys) c.residents.push_back({i++, P(p)});
  return c;
}

}  // namespace

TEST_CASE("blow_up_origin transports germs") {
  auto [c1, c2] = blow_up_origin(chart_of({"y^2 - x^3"}), 0);
  REQUIRE(c1.residents.size() == 1);
  CHECK(c1.residents[0].poly == P("y^2 - x"));
  CHECK(c1.ex_x == 0);
  CHECK_FALSE(c1.ex_y.has_value());
  CHECK(c2.ex_y == 0);

  auto node = blow_up_origin(chart_of({"x*y"}), 0);
  CHECK(node.first.residents[0].poly == P("y"));

  auto smooth = blow_up_origin(chart_of({"y - x^4"}), 0);
  CHECK(smooth.first.residents[0].poly == P("y - x^3"));
}

TEST_CASE("chart substitution agrees with a direct substitution oracle") {
  for (const char* s : {"y^2 - x^3", "x*y", "y - x^4", "y^3 - x^5 + x^2*y", "(y - x)*(y + 2*x)*(y - x^2)",
                        "x^3 - y^3", "y^2 - 2*x^4 + x^5"}) {
    auto charts = blow_up_origin(chart_of({s}), 0);
    CHECK(charts.first.residents[0].poly == substitute_chart1(P(s)));
    // the second chart is the first with the variables swapped
    const BivarPoly swapped = P(s).linear_substitution(Elem(0), Elem(1), Elem(1), Elem(0));
    CHECK(charts.second.residents[0].poly ==
          substitute_chart1(swapped).linear_substitution(Elem(0), Elem(1), Elem(1), Elem(0)));
  }
}

TEST_CASE("points_on_exceptional") {
  int counter = 0;
  auto cusp = points_on_exceptional(blow_up_origin(chart_of({"y^2 - x^3"}), 0), counter);
  REQUIRE(cusp.size() == 1);
  CHECK(cusp[0].direction.kind == Direction::Kind::Affine);
  CHECK(cusp[0].direction.value.is_zero());
  CHECK(cusp[0].chart.residents[0].poly == P("y^2 - x"));

  auto node = points_on_exceptional(blow_up_origin(chart_of({"x*y"}), 0), counter);
  REQUIRE(node.size() == 2);
  CHECK(node[0].direction.kind == Direction::Kind::Affine);
  CHECK(node[1].direction.kind == Direction::Kind::Infinity);

  auto irr = points_on_exceptional(blow_up_origin(chart_of({"y^2 - 2*x^2"}), 0), counter);
  REQUIRE(irr.size() == 1);
  CHECK(irr[0].direction.kind == Direction::Kind::Cluster);
  CHECK(irr[0].direction.minpoly == UPoly(nullptr, {Elem(-2), Elem(0), Elem(1)}));
  CHECK(irr[0].chart.field->height() == 1);
  CHECK(counter == 1);

  // three rational slopes come out in order
  auto three = points_on_exceptional(blow_up_origin(chart_of({"(y - x)*(y + x)*(y - 2*x)"}), 0), counter);
  REQUIRE(three.size() == 3);
  CHECK(three[0].direction.value == Elem(-1));
  CHECK(three[1].direction.value == Elem(1));
  CHECK(three[2].direction.value == Elem(2));
}

TEST_CASE("build_tree on the cusp") {
  const auto tree = build_tree({CurveGerm(P("y^2 - x^3"))});
  REQUIRE(tree.nodes.size() == 3);
  CHECK(tree.nodes[0].logdisc == 2);
  CHECK(tree.nodes[1].logdisc == 3);
  CHECK(tree.nodes[2].logdisc == 5);
  CHECK(tree.nodes[0].ord[0] == 2);
  CHECK(tree.nodes[1].ord[0] == 3);
  CHECK(tree.nodes[2].ord[0] == 6);
  CHECK(tree.nodes[2].through == std::vector<int>{0, 1});
}

TEST_CASE("build_tree on normal crossings needs no blow-up") {
  const auto tree = build_tree({CurveGerm(P("x")), CurveGerm(P("y"))});
  CHECK(tree.nodes.empty());
  REQUIRE(tree.leaves.size() == 1);
  CHECK(tree.leaves[0].germs.size() == 2);
}

TEST_CASE("build_tree separates a tangency in two blow-ups") {
  const auto tree = build_tree({CurveGerm(P("y - x^2")), CurveGerm(P("y"))});
  REQUIRE(tree.nodes.size() == 2);
  CHECK(tree.nodes[0].logdisc == 2);
  CHECK(tree.nodes[0].ord == std::vector<int>{1, 1});
  CHECK(tree.nodes[1].logdisc == 3);
  CHECK(tree.nodes[1].ord == std::vector<int>{2, 2});
}

TEST_CASE("logdisc and ord recursions hold on every node") {
  for (const char* s : {"y^2 - x^3", "(y^2 - x^3)*(y^2 - 2*x^3)", "y^3 - x^7", "(y - x^2)*(y + x^2)*x",
                        "y^2 - 2*x^4", "x^3 - y^3", "(y^2 - x^5)*(y - x^2)"}) {
    const auto tree = build_tree({CurveGerm(P(s))});
    for (const auto& n : tree.nodes) {
      CHECK(n.through.size() <= 2);
      Rational expected = n.through.empty() ? Rational(2) : Rational(1);
      int ord = n.mult[0];
      for (int j : n.through) {
        CHECK(j < n.id);
        ord += tree.nodes[j].ord[0];
      }
      if (n.through.size() == 1) expected = tree.nodes[n.through[0]].logdisc + 1;
      if (n.through.size() == 2) expected = tree.nodes[n.through[0]].logdisc + tree.nodes[n.through[1]].logdisc;
      CHECK(n.logdisc == expected);
      CHECK(n.ord[0] == ord);
      if (n.parent >= 0) CHECK(n.depth == tree.nodes[n.parent].depth + 1);
    }
  }
}

TEST_CASE("Galois clusters extend the field and carry their degree as weight") {
  const auto tree = build_tree({CurveGerm(P("y^2 - 2*x^4"))});
  bool saw_cluster = false;
  for (const auto& n : tree.nodes) {
    if (n.direction.kind == Direction::Kind::Cluster) {
      saw_cluster = true;
      CHECK(n.weight == 2);
      CHECK(n.field_height == 1);
    }
  }
  // the cluster is resolved by the second blow-up of the tacnode
  CHECK(tree.nodes.size() == 2);
  CHECK_FALSE(saw_cluster);
  REQUIRE(tree.leaves.size() == 1);
  CHECK(tree.leaves[0].weight == 2);
  CHECK(tree.leaves[0].direction.kind == Direction::Kind::Cluster);
}

TEST_CASE("irrational tangent cones of higher order recurse inside the extension") {
  const auto tree = build_tree({CurveGerm(P("(y^2 - 2*x^2)*(y^2 - 3*x^2) + x^5"))});
  int max_height = 0;
  for (const auto& n : tree.nodes) max_height = std::max(max_height, n.field_height);
  CHECK(tree.nodes.front().mult[0] == 4);
  CHECK(max_height <= 2);
}

TEST_CASE("depth cap and tower cap are enforced") {
  CHECK_THROWS_AS(build_tree({CurveGerm(P("y - x^10")), CurveGerm(P("y"))}, {3, 4}), DepthCapExceeded);
  CHECK_NOTHROW(build_tree({CurveGerm(P("y - x^10")), CurveGerm(P("y"))}, {10, 4}));
  // tangent direction sqrt(2), then inside that chart a second irrational direction
  const BivarPoly deep = P("(y^2 - 2*x^2)^2 - x^5");
  CHECK_THROWS_AS(build_tree({CurveGerm(P("y^2 - 2*x^2"))}, {64, 0}), TowerHeightExceeded);
  CHECK_NOTHROW(build_tree({CurveGerm(deep)}, {64, 4}));
}
