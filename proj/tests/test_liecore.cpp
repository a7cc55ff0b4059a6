#include "doctest.h"

#include "fixtures.hpp"
#include "jbkit/algebra_spec.hpp"
#include "jbkit/linfinity.hpp"

using namespace jbkit;
namespace fx = jbkit::fixtures;

TEST_CASE("sl2 is a Lie algebra") {
  auto a = fx::sl2();
  CHECK(validate_lie(a).ok());
  CHECK(a.bracket(1, 2) == SparseVec::unit(0));  // [e,f] = h
  CHECK(a.bracket(2, 1) == Rat(-1) * SparseVec::unit(0));
  CHECK(a.bracket(1, 1).zero());
}

TEST_CASE("gl2, heis3, aff2 and the dg fixture validate") {
  CHECK(validate_lie(fx::gl2()).ok());
  CHECK(validate_lie(fx::heis3()).ok());
  CHECK(validate_lie(fx::aff2()).ok());
  CHECK(validate_lie(fx::abelian(3)).ok());
  CHECK(validate_lie(fx::tensor_dg(fx::sl2())).ok());
  CHECK(validate_lie(fx::cplx2()).ok());
}

TEST_CASE("jacobi violation is reported with a witness") {
  auto a = fx::sl2();
  SparseVec bad = SparseVec::unit(0);  // h
  bad.add_term(1, Rat(1));             // + e
  a.bracket2.erase({1, 2});
  a.set_bracket(1, 2, bad);  // [e,f] = h + e
  auto rep = validate_lie(a);
  CHECK(!rep.ok());
  bool witnessed = false;
  for (const auto& v : rep.violations)
    if (v.check == "jacobi" && v.witness.find("h") != std::string::npos &&
        v.witness.find("e") != std::string::npos && v.witness.find("f") != std::string::npos)
      witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("degree-incompatible entries are structural errors") {
  AlgebraSpec a;
  a.basis = {{"x", 0}, {"y", 1}};
  a.set_bracket(0, 1, SparseVec::unit(0));  // degree 1 bracket landing in degree 0
  CHECK(!validate_lie(a).ok());
}

TEST_CASE("strict morphism validation") {
  auto p = fx::pair_sl2_gl2();
  CHECK(validate_strict_morphism(p.phi, p.g, p.h).ok());

  MorphismSpec zero;
  CHECK(validate_strict_morphism(zero, p.g, p.h).ok());

  // scale e-image improperly: no longer a morphism
  auto broken = p;
  SkewTable c1;
  SparseVec h_img;
  h_img.add_term(0, Rat(1));
  h_img.add_term(3, Rat(-1));
  c1.add({0}, h_img, broken.g.degrees());
  c1.add({1}, SparseVec::unit(1, Rat(2)), broken.g.degrees());
  c1.add({2}, SparseVec::unit(2), broken.g.degrees());
  broken.phi.components.clear();
  broken.phi.components.emplace(1, std::move(c1));
  CHECK(!validate_strict_morphism(broken.phi, broken.g, broken.h).ok());
}

TEST_CASE("dg morphism chain condition") {
  auto p = fx::pair_sl2_dg();
  CHECK(validate_strict_morphism(p.phi, p.g, p.h).ok());
}

TEST_CASE("check_linfinity accepts dg Lie structures to any cap") {
  CHECK(check_linfinity(fx::sl2(), 4).ok());
  CHECK(check_linfinity(fx::tensor_dg(fx::sl2()), 3).ok());
  CHECK(check_linfinity(fx::cplx2(), 4).ok());
}

TEST_CASE("check_linfinity flags a perturbed higher bracket") {
  // On the dg fixture a mu_3 entry pairs with the differential already in
  // the arity-3 identity: mu_3(h, e, d(f.t)) has no partner to cancel.
  auto a = fx::tensor_dg(fx::sl2());
  CHECK(check_linfinity(a, 3).ok());
  a.higher[3].add({0, 1, 8}, SparseVec::unit(0), a.degrees());  // mu_3(h,e,f.dt) = h
  CHECK(!check_linfinity(a, 3).ok());
}

TEST_CASE("check_linfinity parallel matches serial") {
  auto a = fx::tensor_dg(fx::sl2());
  auto r1 = check_linfinity(a, 3, Exec::serial);
  auto r2 = check_linfinity(a, 3, Exec::parallel);
  CHECK(r1.ok() == r2.ok());
  CHECK(r1.violations.size() == r2.violations.size());
}
