#include "jbkit/taylor_field.hpp"

#include <sstream>
#include <stdexcept>

#include "jbkit/combinatorics.hpp"

namespace jbkit {

TaylorField& TaylorField::operator+=(const TaylorField& o) {
  truncation_order = std::min(truncation_order, o.truncation_order);
  comp.resize(truncation_order + 1);
  for (int n = 0; n <= truncation_order; ++n)
    for (const auto& [key, v] : o.comp[n].t) {
      auto it = comp[n].t.find(key);
      if (it == comp[n].t.end()) {
        comp[n].t.emplace(key, v);
      } else {
        it->second += v;
        if (it->second.zero()) comp[n].t.erase(it);
      }
    }
  return *this;
}

TaylorField& TaylorField::operator*=(const Rat& s) {
  for (auto& table : comp) {
    if (s == 0) {
      table.t.clear();
      continue;
    }
    for (auto& [key, v] : table.t) v *= s;
  }
  return *this;
}

bool TaylorField::same_components(const TaylorField& o, int up_to_order) const {
  for (int n = 0; n <= up_to_order; ++n)
    if (comp[n].t != o.comp[n].t) return false;
  return true;
}

namespace {

// Directional composite (X > Y)_n(t) = sum_S eps_S Y(X(t_S), t_rest).
// Requires Y components up to n+1 when X has a constant term.
SparseVec compose_at(const TaylorField& x, const TaylorField& y, int n,
                     std::span<const int> tuple, const AlgebraSpec& h) {
  const auto& degs = h.degrees();
  std::vector<int> tdeg(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) tdeg[i] = degs[tuple[i]];

  SparseVec out;
  for (const auto& sel : subsets(n)) {
    const int k = static_cast<int>(sel.size());
    const int outer = n - k + 1;
    if (k > x.truncation_order || outer > y.truncation_order)
      throw std::invalid_argument("vf_bracket: order exceeds available components");
    std::vector<bool> in(n, false);
    std::vector<int> perm;
    perm.reserve(n);
    for (int p : sel) {
      perm.push_back(p);
      in[p] = true;
    }
    for (int p = 0; p < n; ++p)
      if (!in[p]) perm.push_back(p);
    int eps = koszul_sign(perm, tdeg);

    std::vector<int> inner_t, rest;
    for (int p : sel) inner_t.push_back(tuple[p]);
    for (int p = 0; p < n; ++p)
      if (!in[p]) rest.push_back(tuple[p]);

    SparseVec inner = x.eval(k, inner_t, degs);
    if (inner.zero()) continue;
    std::vector<int> outer_t(outer);
    for (int p = 0; p < n - k; ++p) outer_t[p + 1] = rest[p];
    for (const auto& [b, c] : inner.c) {
      outer_t[0] = b;
      SparseVec v = y.eval(outer, outer_t, degs);
      v *= Rat(eps) * c;
      out += v;
    }
  }
  return out;
}

}  // namespace

TaylorField vf_bracket(const TaylorField& x, const TaylorField& y, int order,
                       const AlgebraSpec& h) {
  TaylorField out = TaylorField::zero(order, x.field_degree + y.field_degree);
  const auto& degs = h.degrees();
  const int sgn_xy = (x.field_degree % 2 != 0 && y.field_degree % 2 != 0) ? -1 : 1;
  // symmetric tuples: only even-degree entries may repeat
  auto sym_repeat = [&](int b) { return degs[b] % 2 == 0; };
  for (int n = 0; n <= order; ++n) {
    for_each_sorted_tuple(h.dim(), n, sym_repeat, [&](std::span<const int> t) {
      SparseVec v = compose_at(x, y, n, t, h);
      SparseVec w = compose_at(y, x, n, t, h);
      w *= Rat(-sgn_xy);
      v += w;
      if (!v.zero()) out.add_entry(n, std::vector<int>(t.begin(), t.end()), v, degs);
    });
  }
  return out;
}

ValidationReport verify_field_morphism(const std::map<int, TaylorField>& fields,
                                       const AlgebraSpec& g, const AlgebraSpec& h,
                                       int order, Exec exec) {
  ValidationReport rep;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a; b < g.dim(); ++b) {
      if (a == b && g.deg(a) % 2 == 0) continue;
      pairs.push_back({a, b});
    }
  std::vector<ValidationReport> found(pairs.size());
  par_for(exec, static_cast<long>(pairs.size()), [&](long idx) {
    auto [a, b] = pairs[idx];
    TaylorField lhs = vf_bracket(fields.at(a), fields.at(b), order, h);
    TaylorField rhs = TaylorField::zero(order);
    for (const auto& [c, coeff] : g.bracket(a, b).c) {
      TaylorField t = fields.at(c);
      t *= coeff;
      rhs += t;
    }
    rhs.truncation_order = order;
    rhs.comp.resize(order + 1);
    for (int n = 0; n <= order; ++n) {
      if (lhs.comp[n].t == rhs.comp[n].t) continue;
      // report the first differing entry
      for (const auto& [key, v] : lhs.comp[n].t) {
        auto it = rhs.comp[n].t.find(key);
        if (it == rhs.comp[n].t.end() || !(it->second == v)) {
          std::ostringstream w;
          w << "(" << g.basis[a].name << "," << g.basis[b].name << ") order " << n << " at (";
          for (std::size_t i = 0; i < key.size(); ++i)
            w << (i ? "," : "") << h.basis[key[i]].name;
          w << ")";
          found[idx].add("field_morphism", w.str());
          return;
        }
      }
      for (const auto& [key, v] : rhs.comp[n].t) {
        if (!lhs.comp[n].t.count(key)) {
          std::ostringstream w;
          w << "(" << g.basis[a].name << "," << g.basis[b].name << ") order " << n << " at (";
          for (std::size_t i = 0; i < key.size(); ++i)
            w << (i ? "," : "") << h.basis[key[i]].name;
          w << ")";
          found[idx].add("field_morphism", w.str());
          return;
        }
      }
    }
  });
  for (auto& f : found) rep.merge(f);
  rep.normalize();
  return rep;
}

}  // namespace jbkit
