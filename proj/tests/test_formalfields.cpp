#include "doctest.h"

#include "fixtures.hpp"
#include "jbkit/taylor_field.hpp"

using namespace jbkit;
namespace fx = jbkit::fixtures;

namespace {

// x -> Ax as a Taylor field on a degree-0 h
TaylorField linear_field(const AlgebraSpec& h, const std::vector<std::vector<Rat>>& a, int order) {
  TaylorField f = TaylorField::zero(order);
  for (int j = 0; j < h.dim(); ++j) {
    SparseVec col;
    for (int i = 0; i < h.dim(); ++i) col.add_term(i, a[i][j]);
    if (!col.zero()) f.add_entry(1, {j}, col, h.degrees());
  }
  return f;
}

TaylorField constant_field(const AlgebraSpec& h, const SparseVec& c, int order) {
  TaylorField f = TaylorField::zero(order);
  if (!c.zero()) f.add_entry(0, {}, c, h.degrees());
  return f;
}

// deterministic little generator for sparse random fields
struct Lcg {
  unsigned long s;
  int next(int mod) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((s >> 33) % mod);
  }
};

TaylorField random_field(const AlgebraSpec& h, int order, Lcg& rng) {
  TaylorField f = TaylorField::zero(order);
  for (int n = 0; n <= order; ++n) {
    // a few sparse entries per component
    for (int k = 0; k < 3; ++k) {
      std::vector<int> key(n);
      for (int i = 0; i < n; ++i) key[i] = rng.next(h.dim());
      std::sort(key.begin(), key.end());
      int target = rng.next(h.dim());
      int coeff = rng.next(7) - 3;
      if (coeff == 0) continue;
      f.add_entry(n, key, SparseVec::unit(target, Rat(coeff)), h.degrees());
    }
  }
  return f;
}

}  // namespace

TEST_CASE("bracket of constant fields vanishes") {
  auto h = fx::abelian(2, "b");
  TaylorField x = constant_field(h, SparseVec::unit(0), 3);
  TaylorField y = constant_field(h, SparseVec::unit(1), 3);
  TaylorField br = vf_bracket(x, y, 2, h);
  for (int n = 0; n <= 2; ++n) CHECK(br.comp[n].t.empty());
}

TEST_CASE("linear against constant gives minus the matrix action") {
  auto h = fx::abelian(2, "b");
  // A = [[0,1],[0,0]] : A b2 = b1
  TaylorField x = linear_field(h, {{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}, 3);
  TaylorField y = constant_field(h, SparseVec::unit(1), 3);  // c = b2
  TaylorField br = vf_bracket(x, y, 2, h);
  // [X,Y] = X dY - Y dX = -A c
  REQUIRE(br.comp[0].t.size() == 1);
  CHECK(br.comp[0].t.begin()->second == Rat(-1) * SparseVec::unit(0));
  CHECK(br.comp[1].t.empty());
  CHECK(br.comp[2].t.empty());
}

TEST_CASE("linear fields bracket to the reversed matrix commutator") {
  auto h = fx::abelian(2, "b");
  std::vector<std::vector<Rat>> a = {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};  // A = diag(1,-1)
  std::vector<std::vector<Rat>> b = {{Rat(0), Rat(1)}, {Rat(0), Rat(0)}};   // B = E12
  TaylorField x = linear_field(h, a, 3);
  TaylorField y = linear_field(h, b, 3);
  TaylorField br = vf_bracket(x, y, 2, h);
  // classical: coordinate fields compose contravariantly, F_1 = BA - AB
  // BA - AB = E12*diag(1,-1) - diag(1,-1)*E12 = -E12 - E12 = -2 E12
  CHECK(br.comp[0].t.empty());
  REQUIRE(br.comp[1].t.size() == 1);
  auto it = br.comp[1].t.find({1});
  REQUIRE(it != br.comp[1].t.end());
  CHECK(it->second == SparseVec::unit(0, Rat(-2)));
}

TEST_CASE("vf_bracket satisfies antisymmetry and Jacobi on random fields") {
  auto h = fx::abelian(2, "b");
  Lcg rng{20240817};
  for (int trial = 0; trial < 4; ++trial) {
    TaylorField x = random_field(h, 5, rng);
    TaylorField y = random_field(h, 5, rng);
    TaylorField z = random_field(h, 5, rng);
    TaylorField xy = vf_bracket(x, y, 4, h);
    TaylorField yx = vf_bracket(y, x, 4, h);
    yx *= Rat(-1);
    CHECK(xy.same_components(yx, 4));

    TaylorField j1 = vf_bracket(xy, z, 3, h);
    TaylorField j2 = vf_bracket(vf_bracket(y, z, 4, h), x, 3, h);
    TaylorField j3 = vf_bracket(vf_bracket(z, x, 4, h), y, 3, h);
    j1 += j2;
    j1 += j3;
    for (int n = 0; n <= 3; ++n) CHECK(j1.comp[n].t.empty());
  }
}

TEST_CASE("truncation coherence") {
  auto h = fx::abelian(2, "b");
  Lcg rng{99};
  TaylorField x = random_field(h, 5, rng);
  TaylorField y = random_field(h, 5, rng);
  TaylorField lo = vf_bracket(x, y, 2, h);
  TaylorField hi = vf_bracket(x, y, 4, h);
  CHECK(lo.same_components(hi, 2));
}

TEST_CASE("constant fields on an abelian target form a morphism") {
  auto g = fx::abelian(3, "a");
  auto h = fx::abelian(2, "b");
  std::map<int, TaylorField> fields;
  for (int i = 0; i < 3; ++i)
    fields.emplace(i, constant_field(h, SparseVec::unit(i % 2), 4));
  CHECK(verify_field_morphism(fields, g, h, 3).ok());
}

TEST_CASE("bracket beyond the stored components is an error") {
  auto h = fx::abelian(2, "b");
  TaylorField x = constant_field(h, SparseVec::unit(0), 2);
  TaylorField y = constant_field(h, SparseVec::unit(1), 2);
  CHECK_THROWS_AS(vf_bracket(x, y, 2, h), std::invalid_argument);
}
