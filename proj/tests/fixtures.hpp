#pragma once

#include "jbkit/lie_pair.hpp"

namespace jbkit::fixtures {

inline AlgebraSpec sl2() {
  AlgebraSpec a;
  a.name = "sl2";
  a.basis = {{"h", 0}, {"e", 0}, {"f", 0}};
  a.set_bracket(0, 1, SparseVec::unit(1, Rat(2)));    // [h,e] = 2e
  a.set_bracket(0, 2, SparseVec::unit(2, Rat(-2)));   // [h,f] = -2f
  a.set_bracket(1, 2, SparseVec::unit(0));            // [e,f] = h
  return a;
}

inline AlgebraSpec gl2() {
  AlgebraSpec a;
  a.name = "gl2";
  a.basis = {{"e11", 0}, {"e12", 0}, {"e21", 0}, {"e22", 0}};
  auto idx = [](int r, int c) { return (r - 1) * 2 + (c - 1); };
  for (int a1 = 1; a1 <= 2; ++a1)
    for (int b1 = 1; b1 <= 2; ++b1)
      for (int c1 = 1; c1 <= 2; ++c1)
        for (int d1 = 1; d1 <= 2; ++d1) {
          int i = idx(a1, b1), j = idx(c1, d1);
          if (i >= j) continue;
          SparseVec v;
          if (b1 == c1) v.add_term(idx(a1, d1), Rat(1));
          if (d1 == a1) v.add_term(idx(c1, b1), Rat(-1));
          if (!v.zero()) a.set_bracket(i, j, v);
        }
  return a;
}

inline AlgebraSpec abelian(int dim, const std::string& prefix = "u") {
  AlgebraSpec a;
  a.name = "abelian" + std::to_string(dim);
  for (int i = 0; i < dim; ++i) a.basis.push_back({prefix + std::to_string(i + 1), 0});
  return a;
}

inline AlgebraSpec heis3() {
  AlgebraSpec a;
  a.name = "heis3";
  a.basis = {{"x", 0}, {"y", 0}, {"z", 0}};
  a.set_bracket(0, 1, SparseVec::unit(2));  // [x,y] = z
  return a;
}

inline AlgebraSpec aff2() {
  AlgebraSpec a;
  a.name = "aff2";
  a.basis = {{"a", 0}, {"b", 0}};
  a.set_bracket(0, 1, SparseVec::unit(1));  // [a,b] = b
  return a;
}

inline MorphismSpec identity_phi(const AlgebraSpec& g) {
  MorphismSpec phi;
  SkewTable c1;
  for (int i = 0; i < g.dim(); ++i) c1.add({i}, SparseVec::unit(i), g.degrees());
  phi.components.emplace(1, std::move(c1));
  return phi;
}

inline LiePair pair_identity(const AlgebraSpec& g) {
  LiePair p;
  p.g = g;
  p.h = g;
  p.phi = identity_phi(g);
  return p;
}

inline LiePair pair_sl2_gl2() {
  LiePair p;
  p.g = sl2();
  p.h = gl2();
  SkewTable c1;
  SparseVec h_img;
  h_img.add_term(0, Rat(1));   // e11
  h_img.add_term(3, Rat(-1));  // -e22
  c1.add({0}, h_img, p.g.degrees());
  c1.add({1}, SparseVec::unit(1), p.g.degrees());  // e -> e12
  c1.add({2}, SparseVec::unit(2), p.g.degrees());  // f -> e21
  p.phi.components.emplace(1, std::move(c1));
  return p;
}

inline LiePair pair_heis_ab() {
  LiePair p;
  p.g = heis3();
  p.h = abelian(2, "x");
  SkewTable c1;
  c1.add({0}, SparseVec::unit(0), p.g.degrees());
  c1.add({1}, SparseVec::unit(1), p.g.degrees());
  p.phi.components.emplace(1, std::move(c1));
  return p;
}

// base (x) Omega, with Omega spanned by 1 (deg 0), t (deg 0), dt (deg 1),
// t*t = t*dt = dt*dt = 0 and d(t) = dt. Acyclic in positive degree, so the
// result is a dg Lie algebra with a genuinely graded bracket table.
inline AlgebraSpec tensor_dg(const AlgebraSpec& base) {
  AlgebraSpec a;
  a.name = base.name + ".dg";
  const int n = base.dim();
  // layout: [x(x)1 : 0..n-1], [x(x)t : n..2n-1], [x(x)dt : 2n..3n-1]
  for (const auto& b : base.basis) a.basis.push_back({b.name, b.degree});
  for (const auto& b : base.basis) a.basis.push_back({b.name + ".t", b.degree});
  for (const auto& b : base.basis) a.basis.push_back({b.name + ".dt", b.degree + 1});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseVec br = base.bracket(i, j);
      if (br.zero()) continue;
      auto shift = [&](int off) {
        SparseVec v;
        for (const auto& [k, c] : br.c) v.add_term(k + off, c);
        return v;
      };
      if (i < j) a.set_bracket(i, j, shift(0));            // 1,1 -> 1
      a.set_bracket(i, j + n, shift(n));                   // 1,t -> t
      a.set_bracket(i, j + 2 * n, shift(2 * n));           // 1,dt -> dt
    }
  for (int i = 0; i < n; ++i) a.differential[i + n] = SparseVec::unit(i + 2 * n);
  return a;
}

inline LiePair pair_sl2_dg() { return pair_identity(tensor_dg(sl2())); }

// small dg pair: two-term complex with zero bracket
inline AlgebraSpec cplx2() {
  AlgebraSpec a;
  a.name = "cplx2";
  a.basis = {{"p", 0}, {"q", 1}};
  a.differential[0] = SparseVec::unit(1);
  return a;
}

}  // namespace jbkit::fixtures
