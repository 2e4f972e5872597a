#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcgerm/bivar_poly.hpp"
#include "lcgerm/germ.hpp"

namespace lcgerm {

inline constexpr int kDefaultDepthCap = 64;

// Proper transform of input germ `germ` in the local coordinates of a chart.
struct Resident {
  int germ = 0;
  BivarPoly poly;
};

// Local coordinates (x, y) around a point of a blown-up surface. Exceptional
// divisors through the chart origin are coordinate axes: ex_x is the divisor
// {x = 0}, ex_y the divisor {y = 0}; values are tree node ids.
struct Chart {
  FieldPtr field;
  std::vector<Resident> residents;
  std::optional<int> ex_x;
  std::optional<int> ex_y;
};

// Where an infinitely near point sits on its parent's exceptional line.
struct Direction {
  enum class Kind { Root, Affine, Infinity, Cluster };
  Kind kind = Kind::Root;
  Elem value;       // Affine: the slope t = y/x
  UPoly minpoly;    // Cluster: irreducible over the parent's field, degree >= 2
  int degree() const { return kind == Kind::Cluster ? minpoly.degree() : 1; }
  std::string to_string() const;
};

// Blows up the chart origin with new exceptional divisor `new_id`. The first
// chart substitutes (x, y) -> (x, x*y), the second (x, y) -> (x*y, y). Only
// residents through the origin are transformed. Throws InvariantError if a
// proper transform is not squarefree.
std::pair<Chart, Chart> blow_up_origin(const Chart& chart, int new_id);

// A point of the new exceptional line lying on at least one proper transform,
// recentred so that it is the origin of `chart`. Only residents through the
// point are kept.
struct ExceptionalPoint {
  Direction direction;
  Chart chart;
};

// Points of the exceptional line of `charts` (as returned by blow_up_origin)
// met by proper transforms: affine points in slope order, then Galois
// clusters, then the point at infinity. A cluster is represented once by a
// root of its minimal polynomial in a new extension field named `a<N>`,
// where N is taken from and advances `extension_counter`.
std::vector<ExceptionalPoint> points_on_exceptional(const std::pair<Chart, Chart>& charts,
                                                    int& extension_counter,
                                                    int max_tower_height = kDefaultMaxTowerHeight);

struct TreeOptions {
  int depth_cap = kDefaultDepthCap;
  int max_tower_height = kDefaultMaxTowerHeight;
};

// Exceptional divisor created by blowing up one infinitely near point.
struct TreeNode {
  int id = 0;
  int parent = -1;           // node whose exceptional line holds this point; -1 for the root
  Direction direction;
  int depth = 0;             // blow-ups before this one along the path
  Rational logdisc;          // log discrepancy k_E + 1
  std::vector<int> mult;     // per input germ: multiplicity of its proper transform at the point
  std::vector<int> ord;      // per input germ: order of its total transform along E
  std::vector<int> through;  // earlier exceptional divisors through the blown-up point
  long weight = 1;           // number of Galois-conjugate points this node stands for
  int field_height = 0;
};

// A point where the resolution stopped (normal crossings) met by at least
// one proper transform.
struct LeafPoint {
  int parent = -1;
  Direction direction;
  std::vector<int> germs;
  std::vector<int> exceptionals;
  long weight = 1;
};

struct ResolutionTree {
  int germ_count = 0;
  std::vector<TreeNode> nodes;  // breadth-first, children in direction order
  std::vector<LeafPoint> leaves;
  int max_depth() const;
};

// Normal-crossings test at the chart origin: every passing proper transform
// is smooth, at most two curves (transforms plus exceptional divisors) pass,
// and two passing curves are transverse.
bool is_snc_at_origin(const Chart& chart);

// Iterated blow-up of the origin until every point is normal crossings.
// Germs must be squarefree and pairwise coprime. Throws DepthCapExceeded or
// TowerHeightExceeded.
ResolutionTree build_tree(const std::vector<CurveGerm>& germs, const TreeOptions& options = {});

}  // namespace lcgerm
