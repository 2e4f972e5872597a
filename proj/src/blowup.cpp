#include "lcgerm/blowup.hpp"

#include <algorithm>
#include <deque>

#include "lcgerm/errors.hpp"
#include "lcgerm/factor.hpp"

namespace lcgerm {

std::string Direction::to_string() const {
  switch (kind) {
    case Kind::Root: return "root";
    case Kind::Affine: return "t=" + value.to_string();
    case Kind::Infinity: return "t=inf";
    case Kind::Cluster: return "root of " + minpoly.to_string("t");
  }
  return "";
}

std::pair<Chart, Chart> blow_up_origin(const Chart& chart, int new_id) {
  Chart c1{chart.field, {}, new_id, chart.ex_y};
  Chart c2{chart.field, {}, chart.ex_x, new_id};
  for (const auto& r : chart.residents) {
    if (!r.poly.coeff(0, 0).is_zero()) continue;
    Resident r1{r.germ, r.poly.chart_x()};
    Resident r2{r.germ, r.poly.chart_y()};
    if (!squarefree_check(r1.poly) || !squarefree_check(r2.poly)) {
      throw InvariantError("proper transform of germ " + std::to_string(r.germ) + " is not squarefree");
    }
    c1.residents.push_back(std::move(r1));
    c2.residents.push_back(std::move(r2));
  }
  return {std::move(c1), std::move(c2)};
}

namespace {

std::vector<UPoly> irreducible_factors(const UPoly& g) {
  if (g.degree() <= 0) return {};
  if (g.degree() == 1) return {g.monic()};
  return factor(g);
}

}  // namespace

std::vector<ExceptionalPoint> points_on_exceptional(const std::pair<Chart, Chart>& charts,
                                                    int& extension_counter, int max_tower_height) {
  const Chart& c1 = charts.first;
  const Chart& c2 = charts.second;

  std::vector<UPoly> restrictions;
  std::vector<UPoly> linear, clusters;
  for (const auto& r : c1.residents) {
    UPoly g = r.poly.restrict_to_x_axis_zero();
    if (g.is_zero()) {
      throw InvariantError("proper transform of germ " + std::to_string(r.germ) +
                           " contains the exceptional line");
    }
    for (auto& q : irreducible_factors(g)) {
      auto& bucket = q.degree() == 1 ? linear : clusters;
      if (std::find(bucket.begin(), bucket.end(), q) == bucket.end()) bucket.push_back(std::move(q));
    }
    restrictions.push_back(std::move(g));
  }

  std::vector<Elem> roots;
  for (const auto& q : linear) roots.push_back(-q.coeff(0));
  std::sort(roots.begin(), roots.end(), [](const Elem& a, const Elem& b) { return compare(a, b) < 0; });
  std::sort(clusters.begin(), clusters.end(), [](const UPoly& a, const UPoly& b) { return compare(a, b) < 0; });

  std::vector<ExceptionalPoint> out;
  for (const auto& c : roots) {
    ExceptionalPoint p;
    p.direction.kind = Direction::Kind::Affine;
    p.direction.value = c;
    p.chart.field = c1.field;
    p.chart.ex_x = c1.ex_x;
    if (c.is_zero()) p.chart.ex_y = c1.ex_y;
    for (std::size_t i = 0; i < c1.residents.size(); ++i) {
      if (!restrictions[i].eval(c).is_zero()) continue;
      p.chart.residents.push_back({c1.residents[i].germ, c1.residents[i].poly.shift_y(c)});
    }
    out.push_back(std::move(p));
  }

  for (const auto& q : clusters) {
    const FieldPtr ext = Field::extend(q, "a" + std::to_string(++extension_counter), max_tower_height);
    const Elem alpha = Elem::generator(ext);
    ExceptionalPoint p;
    p.direction.kind = Direction::Kind::Cluster;
    p.direction.minpoly = q;
    p.chart.field = ext;
    p.chart.ex_x = c1.ex_x;
    for (std::size_t i = 0; i < c1.residents.size(); ++i) {
      if (!divmod(restrictions[i], q).second.is_zero()) continue;
      p.chart.residents.push_back({c1.residents[i].germ, c1.residents[i].poly.lifted(ext).shift_y(alpha)});
    }
    out.push_back(std::move(p));
  }

  ExceptionalPoint inf;
  inf.direction.kind = Direction::Kind::Infinity;
  inf.chart.field = c2.field;
  inf.chart.ex_x = c2.ex_x;
  inf.chart.ex_y = c2.ex_y;
  for (const auto& r : c2.residents) {
    if (r.poly.coeff(0, 0).is_zero()) inf.chart.residents.push_back(r);
  }
  if (!inf.chart.residents.empty()) out.push_back(std::move(inf));
  return out;
}

bool is_snc_at_origin(const Chart& chart) {
  std::vector<std::array<Elem, 2>> lines;
  for (const auto& r : chart.residents) {
    if (!r.poly.coeff(0, 0).is_zero()) continue;
    if (r.poly.order() != 1) return false;
    lines.push_back(r.poly.linear_part());
  }
  if (chart.ex_x) lines.push_back({Elem(1), Elem(0)});
  if (chart.ex_y) lines.push_back({Elem(0), Elem(1)});
  if (lines.size() > 2) return false;
  if (lines.size() == 2) return !(lines[0][0] * lines[1][1] - lines[0][1] * lines[1][0]).is_zero();
  return true;
}

int ResolutionTree::max_depth() const {
  int d = 0;
  for (const auto& n : nodes) d = std::max(d, n.depth + 1);
  return d;
}

namespace {

struct Pending {
  Chart chart;
  int parent;
  Direction direction;
  int depth;
  long weight;
};

}  // namespace

ResolutionTree build_tree(const std::vector<CurveGerm>& germs, const TreeOptions& options) {
  if (options.depth_cap < 1) throw InvariantError("depth cap must be at least 1");
  ResolutionTree tree;
  tree.germ_count = static_cast<int>(germs.size());
  const std::size_t n = germs.size();

  std::deque<Pending> queue;
  Pending root{Chart{}, -1, Direction{}, 0, 1};
  for (std::size_t i = 0; i < n; ++i) root.chart.residents.push_back({static_cast<int>(i), germs[i].poly()});
  queue.push_back(std::move(root));

  int extension_counter = 0;
  while (!queue.empty()) {
    Pending p = std::move(queue.front());
    queue.pop_front();

    if (is_snc_at_origin(p.chart)) {
      if (p.chart.residents.empty()) continue;
      LeafPoint leaf{p.parent, p.direction, {}, {}, p.weight};
      for (const auto& r : p.chart.residents) leaf.germs.push_back(r.germ);
      if (p.chart.ex_x) leaf.exceptionals.push_back(*p.chart.ex_x);
      if (p.chart.ex_y) leaf.exceptionals.push_back(*p.chart.ex_y);
      tree.leaves.push_back(std::move(leaf));
      continue;
    }
    if (p.depth >= options.depth_cap) {
      throw DepthCapExceeded("resolution not reached within depth cap " + std::to_string(options.depth_cap));
    }

    TreeNode node;
    node.id = static_cast<int>(tree.nodes.size());
    node.parent = p.parent;
    node.direction = p.direction;
    node.depth = p.depth;
    node.weight = p.weight;
    node.field_height = field_height(p.chart.field);
    if (p.chart.ex_x) node.through.push_back(*p.chart.ex_x);
    if (p.chart.ex_y) node.through.push_back(*p.chart.ex_y);
    std::sort(node.through.begin(), node.through.end());
    node.mult.assign(n, 0);
    for (const auto& r : p.chart.residents) node.mult[r.germ] = r.poly.order();
    node.logdisc = Rational(2 - static_cast<long>(node.through.size()));
    node.ord = node.mult;
    for (int j : node.through) {
      node.logdisc += tree.nodes[j].logdisc;
      for (std::size_t g = 0; g < n; ++g) node.ord[g] += tree.nodes[j].ord[g];
    }
    const int id = node.id;
    tree.nodes.push_back(std::move(node));

    const auto charts = blow_up_origin(p.chart, id);
    for (auto& pt : points_on_exceptional(charts, extension_counter, options.max_tower_height)) {
      const long w = p.weight * pt.direction.degree();
      queue.push_back({std::move(pt.chart), id, std::move(pt.direction), p.depth + 1, w});
    }
  }
  return tree;
}

}  // namespace lcgerm
