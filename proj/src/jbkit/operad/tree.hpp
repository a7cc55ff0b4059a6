#pragma once

#include "jbkit/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace jbkit::operad {

enum class OperadId { hs_inf, lp_inf, lp_half };
enum class Colour : int { straight = 0, wavy = 1 };

// Generator schemas of the three free 2-coloured operads.
//   G(m): m skew straight inputs, straight output, degree 2-m, m >= 2
//   F(m,n): m skew straight + n symmetric wavy inputs, wavy output,
//           degree 1-m, m >= 1, m+n >= 1. The unary (1,0) corolla is the
//           resolution's preimage of the morphism generator; without it no
//           differential term can reproduce the coefficient recursion, and
//           the projection to the quotient operad could not be surjective.
//   H(n): n skew wavy inputs, wavy output, degree 2-n, n >= 2
//   P(m): m skew straight inputs, wavy output, degree 1-m, m >= 1
struct Gen {
  enum class Kind : int { G = 0, F = 1, H = 2, P = 3 };
  Kind kind = Kind::G;
  int m = 0;  // straight inputs (G, F, P)
  int n = 0;  // wavy inputs (F, H)

  static Gen g(int m) { return {Kind::G, m, 0}; }
  static Gen f(int m, int n) { return {Kind::F, m, n}; }
  static Gen h(int n) { return {Kind::H, 0, n}; }
  static Gen p(int m) { return {Kind::P, m, 0}; }

  int straight_in() const { return m; }
  int wavy_in() const { return n; }
  int arity() const { return m + n; }
  int degree() const {
    switch (kind) {
      case Kind::G: return 2 - m;
      case Kind::F: return 1 - m;
      case Kind::H: return 2 - n;
      default: return 1 - m;
    }
  }
  Colour out() const { return kind == Kind::G ? Colour::straight : Colour::wavy; }
  bool valid() const {
    switch (kind) {
      case Kind::G: return m >= 2 && n == 0;
      case Kind::F: return m >= 1 && n >= 0;
      case Kind::H: return n >= 2 && m == 0;
      default: return m >= 1 && n == 0;
    }
  }
  bool in_operad(OperadId id) const {
    switch (id) {
      case OperadId::hs_inf: return kind == Kind::G || kind == Kind::F;
      case OperadId::lp_inf: return kind == Kind::G || kind == Kind::H || kind == Kind::P;
      default:
        return (kind == Kind::G && m == 2) || (kind == Kind::H && n == 2) || kind == Kind::P;
    }
  }
  auto operator<=>(const Gen&) const = default;
  std::string str() const;
};

// Canonical decorated tree in flat form. nodes[0] is the root and nodes are
// listed in DFS preorder, which doubles as the orientation (tensor order) of
// the vertices. Child entries >= 0 are node indices; an entry c < 0 encodes
// the input leaf with label ~c. Children of each vertex are sorted per
// colour class by least descendant leaf. Straight leaves carry labels
// 0..m-1, wavy ones m..m+n-1 (per the ambient component).
struct Node {
  Gen gen;
  std::vector<int> str, wav;
  auto operator<=>(const Node&) const = default;
};

struct Tree {
  std::vector<Node> nodes;
  auto operator<=>(const Tree&) const = default;
  int total_degree() const {
    int d = 0;
    for (const auto& nd : nodes) d += nd.gen.degree();
    return d;
  }
  std::string str() const;
};

// Assembly form: vertices in arbitrary order with explicit tensor positions
// (`orient`); canonicalize() computes the Koszul sign of the reordering into
// DFS order plus the skew-leg sorting signs.
struct RawTree {
  struct RNode {
    Gen gen;
    int orient = 0;
    std::vector<int> str, wav;  // child encoding as in Node
  };
  std::vector<RNode> nodes;
  int root = 0;

  int add(Gen g, int orient) {
    nodes.push_back({g, orient, {}, {}});
    return static_cast<int>(nodes.size()) - 1;
  }
  static int leaf(int label) { return ~label; }
};

struct Canonical {
  Tree tree;
  int sign = 1;
};
Canonical canonicalize(const RawTree& raw);

// Formal sum of canonical trees with exact coefficients.
struct TreeSum {
  std::map<Tree, Rat> terms;

  bool zero() const { return terms.empty(); }
  void add(const Tree& t, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
      terms.emplace(t, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  void add_raw(const RawTree& raw, const Rat& c) {
    Canonical cn = canonicalize(raw);
    add(cn.tree, Rat(cn.sign) * c);
  }
  TreeSum& operator+=(const TreeSum& o) {
    for (const auto& [t, c] : o.terms) add(t, c);
    return *this;
  }
  TreeSum& operator*=(const Rat& s) {
    if (s == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [t, c] : terms) c *= s;
    return *this;
  }
  std::string str() const;
};

// Single corolla with identity leaf labelling.
Tree gen_tree(Gen g);

// Replaces vertex v of a canonical tree by a replacement tree whose leaves
// 0..arity-1 stand for v's child slots (straight slots first). The sign of
// the rearrangement is folded into the result.
TreeSum replace_vertex(const Tree& host, int v, const TreeSum& replacement);

// A child value during composition: either an untouched global leaf label or
// an already-evaluated tree sum.
using ChildVal = std::variant<int, TreeSum>;

// gamma-composition: plugs child values into the images' slot leaves. The
// images' leaves are slot positions 0..k-1; global labels come from the
// children.
TreeSum compose_vertex(const TreeSum& images, const std::vector<ChildVal>& children);

// Applies a morphism of free operads given on generators; a vertex whose
// image is zero kills the whole term.
TreeSum apply_morphism(const TreeSum& s, const std::function<const TreeSum&(const Gen&)>& image);

}  // namespace jbkit::operad
