#include "doctest.h"

#include "jbkit/operad/delta.hpp"
#include "jbkit/operad/jb.hpp"
#include "jbkit/operad/tree.hpp"

using namespace jbkit;
using namespace jbkit::operad;

namespace {

// two-vertex helper: top(gen) with bottom grafted into the given class
RawTree two_vertex(Gen top, Gen bottom, bool graft_straight,
                   std::initializer_list<int> bottom_leaves,
                   std::initializer_list<int> top_str_leaves,
                   std::initializer_list<int> top_wav_leaves, bool bottom_first_orient = false) {
  RawTree raw;
  int r = raw.add(top, bottom_first_orient ? 1 : 0);
  int b = raw.add(bottom, bottom_first_orient ? 0 : 1);
  if (graft_straight) raw.nodes[r].str.push_back(b);
  for (int l : top_str_leaves) raw.nodes[r].str.push_back(RawTree::leaf(l));
  if (!graft_straight) raw.nodes[r].wav.push_back(b);
  for (int l : top_wav_leaves) raw.nodes[r].wav.push_back(RawTree::leaf(l));
  for (int l : bottom_leaves) raw.nodes[b].str.push_back(RawTree::leaf(l));
  return raw;
}

}  // namespace

TEST_CASE("canonicalization is idempotent and sign-coherent") {
  // G3 over G2 with shuffled leaves
  RawTree raw = two_vertex(Gen::g(3), Gen::g(2), true, {2, 0}, {3, 1}, {});
  Canonical c1 = canonicalize(raw);
  // feeding the canonical tree back through a raw shell is a fixed point
  RawTree again;
  for (std::size_t u = 0; u < c1.tree.nodes.size(); ++u)
    again.add(c1.tree.nodes[u].gen, static_cast<int>(u));
  for (std::size_t u = 0; u < c1.tree.nodes.size(); ++u) {
    again.nodes[u].str = c1.tree.nodes[u].str;
    again.nodes[u].wav = c1.tree.nodes[u].wav;
  }
  Canonical c2 = canonicalize(again);
  CHECK(c2.tree == c1.tree);
  CHECK(c2.sign == 1);
}

TEST_CASE("skew straight legs pick up the transposition sign") {
  // F(2,1) corolla with the two straight leaves written in both orders
  RawTree a;
  int r = a.add(Gen::f(2, 1), 0);
  a.nodes[r].str = {RawTree::leaf(0), RawTree::leaf(1)};
  a.nodes[r].wav = {RawTree::leaf(2)};
  RawTree b;
  r = b.add(Gen::f(2, 1), 0);
  b.nodes[r].str = {RawTree::leaf(1), RawTree::leaf(0)};
  b.nodes[r].wav = {RawTree::leaf(2)};
  Canonical ca = canonicalize(a), cb = canonicalize(b);
  CHECK(ca.tree == cb.tree);
  CHECK(ca.sign == -cb.sign);
}

TEST_CASE("symmetric wavy legs of F carry no sign, skew wavy legs of H do") {
  RawTree f1;
  int r = f1.add(Gen::f(1, 2), 0);
  f1.nodes[r].str = {RawTree::leaf(0)};
  f1.nodes[r].wav = {RawTree::leaf(2), RawTree::leaf(1)};
  CHECK(canonicalize(f1).sign == 1);

  RawTree h1;
  r = h1.add(Gen::h(2), 0);
  h1.nodes[r].wav = {RawTree::leaf(1), RawTree::leaf(0)};
  CHECK(canonicalize(h1).sign == -1);
}

TEST_CASE("vertex orientation contributes the Koszul sign of odd generators") {
  // two odd vertices: P(2) (degree -1) under H2 next to another P(2)
  RawTree a;
  int r = a.add(Gen::h(2), 0);
  int p1 = a.add(Gen::p(2), 1);
  int p2 = a.add(Gen::p(2), 2);
  a.nodes[r].wav = {p1, p2};
  a.nodes[p1].str = {RawTree::leaf(0), RawTree::leaf(1)};
  a.nodes[p2].str = {RawTree::leaf(2), RawTree::leaf(3)};
  Canonical ca = canonicalize(a);

  RawTree b;  // same tree, opposite tensor order of the two odd blocks
  r = b.add(Gen::h(2), 0);
  p1 = b.add(Gen::p(2), 2);
  p2 = b.add(Gen::p(2), 1);
  b.nodes[r].wav = {p1, p2};
  b.nodes[p1].str = {RawTree::leaf(0), RawTree::leaf(1)};
  b.nodes[p2].str = {RawTree::leaf(2), RawTree::leaf(3)};
  Canonical cb = canonicalize(b);
  CHECK(ca.tree == cb.tree);
  CHECK(ca.sign == -cb.sign);
}

TEST_CASE("a tree added with its sign-reversed image cancels") {
  RawTree a = two_vertex(Gen::g(2), Gen::g(2), true, {0, 1}, {2}, {});
  RawTree b = two_vertex(Gen::g(2), Gen::g(2), true, {1, 0}, {2}, {});
  TreeSum s;
  s.add_raw(a, Rat(1));
  s.add_raw(b, Rat(1));  // the swapped bottom contributes with a minus
  CHECK(s.zero());
}

TEST_CASE("replace_vertex grafts the differential shape correctly") {
  // host: single F(1,2) corolla; replace its vertex by a two-vertex ladder
  Tree host = gen_tree(Gen::f(1, 2));
  TreeSum r;
  RawTree ladder;
  int top = ladder.add(Gen::h(2), 0);
  int bot = ladder.add(Gen::f(1, 1), 1);
  ladder.nodes[top].wav = {bot, RawTree::leaf(2)};
  ladder.nodes[bot].str = {RawTree::leaf(0)};
  ladder.nodes[bot].wav = {RawTree::leaf(1)};
  r.add_raw(ladder, Rat(1));

  TreeSum out = replace_vertex(host, 0, r);
  REQUIRE(out.terms.size() == 1);
  CHECK(out.terms.begin()->first.nodes.size() == 2);
}

TEST_CASE("compose_vertex flattens gamma-order tensor blocks") {
  // images: G2 corolla; children: leaf 5 and a G2 subtree on (1,3)
  TreeSum img{{{gen_tree(Gen::g(2)), Rat(1)}}};
  TreeSum sub{{{gen_tree(Gen::g(2)), Rat(1)}}};
  // relabel sub leaves by composing with leaves 1,3
  TreeSum sub13 = compose_vertex(sub, {ChildVal{1}, ChildVal{3}});
  TreeSum out = compose_vertex(img, {ChildVal{5}, ChildVal{sub13}});
  REQUIRE(out.terms.size() == 1);
  const Tree& t = out.terms.begin()->first;
  CHECK(t.nodes.size() == 2);
  CHECK(t.total_degree() == 0);
  // min-leaf ordering puts the (1,3) block before leaf 5
  CHECK(t.nodes[0].str[0] == 1);  // node index of the subtree
}

TEST_CASE("apply_morphism kills trees with a zero-image vertex") {
  TreeSum s;
  RawTree raw = two_vertex(Gen::g(2), Gen::g(3), true, {0, 1, 2}, {3}, {});
  s.add_raw(raw, Rat(1));
  TreeSum empty_img;
  TreeSum g2_img{{{gen_tree(Gen::g(2)), Rat(1)}}};
  auto image = [&](const Gen& g) -> const TreeSum& {
    return (g.kind == Gen::Kind::G && g.m == 2) ? g2_img : empty_img;
  };
  CHECK(apply_morphism(s, image).zero());
}

TEST_CASE("textual tree notation is stable (golden forms)") {
  CHECK(gen_tree(Gen::f(2, 1)).str() == "F2,1(s0,s1|w2)");
  TreeSum d3 = gen_delta(Gen::g(3), OperadId::hs_inf);
  CHECK(d3.str() ==
        "-1*G2(s0,G2(s1,s2)) + G2(G2(s0,s1),s2) + -1*G2(G2(s0,s2),s1)");
  TreeSum lad = ladder_image(1, 2, {});
  CHECK(lad.str() ==
        "1/12*H2(H2(P1(s0),w1),w2) + 1/12*H2(H2(P1(s0),w2),w1)");
}
