#include "doctest.h"

#include "fixtures.hpp"
#include "jbkit/cone.hpp"

using namespace jbkit;
namespace fx = jbkit::fixtures;

namespace {

LiePair abelian_zero_pair() {
  LiePair p;
  p.g = fx::abelian(2, "a");
  p.h = fx::abelian(2, "b");
  return p;  // phi = 0
}

Word wg(std::initializer_list<int> g_idx, std::initializer_list<int> h_idx) {
  Word w;
  for (int i : g_idx) w.ls.push_back({0, i});
  for (int i : h_idx) w.ls.push_back({1, i});
  return w;
}

}  // namespace

TEST_CASE("strict abelian pair with zero phi has a zero codifferential") {
  auto p = abelian_zero_pair();
  auto cd = build_codifferential(p, ConeMode::strict, 4);
  CHECK(cd.dprime.empty());
  CHECK(cd.dsecond.empty());
  CHECK(apply_D(cd, wg({0, 1}, {0})).zero());
  CHECK(check_D_squared(cd, 4).ok());
}

TEST_CASE("codifferential rows of the sl2 identity pair") {
  auto p = fx::pair_identity(fx::sl2());
  auto cd = build_codifferential(p, ConeMode::strict, 4);

  // the (1,0) row is phi itself
  WordSum one = apply_D(cd, wg({1}, {}));  // letter e'
  REQUIRE(one.terms.size() == 1);
  CHECK(one.terms.begin()->first == wg({}, {1}));
  CHECK(one.terms.begin()->second == Rat(1));

  // the (1,1) row carries -1/2 [phi(.),.]
  auto it = cd.dsecond.find({1, 1});
  REQUIRE(it != cd.dsecond.end());
  // ({h},{e}): -1/2 [h,e] = -e
  auto entry = it->second.t.find({{0}, {1}});
  REQUIRE(entry != it->second.t.end());
  CHECK(entry->second == SparseVec::unit(1, Rat(-1)));

  // a pure-h word dies in strict mode
  CHECK(apply_D(cd, wg({}, {0, 1})).zero());

  // the g'.h word produces the ladder term among others
  WordSum gh = apply_D(cd, wg({0}, {1}));  // h' . e
  bool ladder_term = false;
  for (const auto& [w, c] : gh.terms)
    if (w == wg({}, {1}) && c == Rat(-1)) ladder_term = true;  // -1/2 [h,e] = -e
  CHECK(ladder_term);
}

TEST_CASE("D squared vanishes on the strict fixtures") {
  for (const LiePair& p : {fx::pair_identity(fx::sl2()), fx::pair_sl2_gl2(),
                           fx::pair_heis_ab(), fx::pair_identity(fx::aff2())}) {
    auto cd = build_codifferential(p, ConeMode::strict, 4);
    CHECK(check_D_squared(cd, 4, Exec::parallel).ok());
  }
}

TEST_CASE("a spoiled Jacobi constant is caught by weight 3") {
  auto p = fx::pair_identity(fx::sl2());
  SparseVec bad = SparseVec::unit(0);
  bad.add_term(1, Rat(1));
  p.h.bracket2.erase({1, 2});
  p.h.set_bracket(1, 2, bad);  // [e,f] = h + e in the target only
  auto cd = build_codifferential(p, ConeMode::strict, 3, {}, /*validate=*/false);
  CHECK(!check_D_squared(cd, 3).ok());
}

TEST_CASE("D squared in dg mode") {
  auto small = fx::pair_identity(fx::cplx2());
  auto cd_small = build_codifferential(small, ConeMode::dg, 4);
  CHECK(cd_small.unary_h);
  CHECK(check_D_squared(cd_small, 4).ok());

  auto p = fx::pair_sl2_dg();
  auto cd = build_codifferential(p, ConeMode::dg, 3);
  CHECK(check_D_squared(cd, 3, Exec::parallel).ok());
}

TEST_CASE("exported cone brackets: normalization and independence check") {
  auto p = fx::pair_identity(fx::sl2());
  auto cd = build_codifferential(p, ConeMode::strict, 4);
  AlgebraSpec cone = export_cone_brackets(cd, 4);
  REQUIRE(cone.dim() == 6);

  // mu_2 on g (x) g is +[,]_g: [h', e'] = 2e'
  CHECK(cone.bracket(0, 1) == SparseVec::unit(1, Rat(2)));
  // mu_2 mixing g and h[-1] is the half ladder, up to the decalage sign
  SparseVec mixed = cone.bracket(0, 3 + 1);  // (h', e-part)
  REQUIRE(!mixed.zero());
  REQUIRE(mixed.c.size() == 1);
  CHECK(mixed.c.begin()->first == 3 + 1);
  CHECK((mixed.c.begin()->second == Rat(1) || mixed.c.begin()->second == Rat(-1)));

  // the independent checker accepts the exported structure
  CHECK(check_linfinity(cone, 4, Exec::parallel).ok());
  CHECK(check_structural_zeros(cone, p.g.dim(), false).ok());
}

TEST_CASE("exported brackets of every strict fixture pass the L-infinity check") {
  for (const LiePair& p : {fx::pair_sl2_gl2(), fx::pair_heis_ab(), fx::pair_identity(fx::aff2())}) {
    auto cd = build_codifferential(p, ConeMode::strict, 4);
    AlgebraSpec cone = export_cone_brackets(cd, 4);
    CHECK(check_linfinity(cone, 4).ok());
    CHECK(check_structural_zeros(cone, p.g.dim(), false).ok());
  }
}

TEST_CASE("dg export keeps the unary h row and passes the checker") {
  auto p = fx::pair_identity(fx::cplx2());
  auto cd = build_codifferential(p, ConeMode::dg, 4);
  AlgebraSpec cone = export_cone_brackets(cd, 4);
  CHECK(check_linfinity(cone, 4).ok());
  CHECK(check_structural_zeros(cone, p.g.dim(), true).ok());
  CHECK(!check_structural_zeros(cone, p.g.dim(), false).ok());  // d_h row is there
}

TEST_CASE("linf_morphism mode: abelian shifted target sees exactly the cocycle condition") {
  // g = gl2, h = one generator in degree -1, phi_1 = 0 and phi_2 given by a
  // 2-cochain; D^2 = 0 iff the cochain kills the boundaries of /\^3 g.
  LiePair p;
  p.g = fx::gl2();
  AlgebraSpec h;
  h.name = "shift";
  h.basis = {{"u", -1}};
  p.h = h;

  // coboundary-shaped cochain phi_2(a,b) = theta([a,b]) is always closed
  SkewTable good;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      SparseVec br = p.g.bracket(i, j);
      SparseVec v;
      for (const auto& [k, c] : br.c) v.add_term(0, c);  // theta = sum of coords
      if (!v.zero()) good.add({i, j}, v, p.g.degrees());
    }
  p.phi.components.emplace(2, std::move(good));
  auto cd = build_codifferential(p, ConeMode::linf_morphism, 4, {}, false);
  CHECK(check_D_squared(cd, 4).ok());

  LiePair bad = p;
  SkewTable one_entry;
  one_entry.add({0, 1}, SparseVec::unit(0), bad.g.degrees());  // phi_2(e11,e12) = u
  bad.phi.components.clear();
  bad.phi.components.emplace(2, std::move(one_entry));
  auto cd_bad = build_codifferential(bad, ConeMode::linf_morphism, 4, {}, false);
  CHECK(!check_D_squared(cd_bad, 4).ok());
}

TEST_CASE("serial and parallel D squared agree") {
  auto p = fx::pair_sl2_gl2();
  auto cd = build_codifferential(p, ConeMode::strict, 4);
  auto r1 = check_D_squared(cd, 4, Exec::serial);
  auto r2 = check_D_squared(cd, 4, Exec::parallel);
  CHECK(r1.ok() == r2.ok());
  CHECK(r1.violations.size() == r2.violations.size());
}
