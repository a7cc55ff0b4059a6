#include "jbkit/linfinity.hpp"

#include <sstream>

#include "jbkit/combinatorics.hpp"

namespace jbkit {

SparseVec mu_eval(const AlgebraSpec& v, int n, std::span<const int> tuple) {
  const auto& degs = v.degrees();
  if (n == 1) return v.d_of(tuple[0]);
  if (n == 2) return v.bracket(tuple[0], tuple[1]);
  auto it = v.higher.find(n);
  if (it == v.higher.end()) return {};
  return it->second.eval(tuple, degs);
}

// mu_n(head, rest...) where head is a vector; degree of head terms is
// homogeneous by construction of the callers.
SparseVec mu_eval(const AlgebraSpec& v, int n, std::span<const int> rest,
                  const SparseVec& head) {
  SparseVec out;
  std::vector<int> tuple(rest.size() + 1);
  for (std::size_t i = 0; i < rest.size(); ++i) tuple[i + 1] = rest[i];
  for (const auto& [b, c] : head.c) {
    tuple[0] = b;
    SparseVec t = mu_eval(v, n, tuple);
    t *= c;
    out += t;
  }
  return out;
}

ValidationReport check_linfinity(const AlgebraSpec& v, int arity_cap, Exec exec) {
  ValidationReport rep;
  const auto& degs = v.degrees();
  const int dim = v.dim();
  auto odd = [&](int b) { return degs[b] % 2 != 0; };

  // every mu_n must raise total degree by exactly 2 - n
  auto check_degree = [&](int arity, std::span<const int> key, const SparseVec& val) {
    int want = 2 - arity;
    for (int i : key) want += degs[i];
    for (const auto& [k, c] : val.c)
      if (degs[k] != want)
        rep.add("degree(mu_" + std::to_string(arity) + ")",
                "entry hits " + v.basis[k].name);
  };
  for (const auto& [i, val] : v.differential) {
    int key[1] = {i};
    check_degree(1, key, val);
  }
  for (const auto& [key, val] : v.bracket2) {
    int k2[2] = {key.first, key.second};
    check_degree(2, k2, val);
  }
  for (const auto& [arity, table] : v.higher)
    for (const auto& [key, val] : table.t) check_degree(arity, key, val);
  if (!rep.ok()) {
    rep.normalize();
    return rep;
  }

  std::vector<std::vector<int>> tuples;
  for (int n = 1; n <= arity_cap; ++n)
    for_each_sorted_tuple(dim, n, odd, [&](std::span<const int> t) {
      tuples.emplace_back(t.begin(), t.end());
    });

  std::vector<ValidationReport> found(tuples.size());
  par_for(exec, static_cast<long>(tuples.size()), [&](long idx) {
    const std::vector<int>& tup = tuples[idx];
    const int n = static_cast<int>(tup.size());
    std::vector<int> tdeg(n);
    for (int i = 0; i < n; ++i) tdeg[i] = degs[tup[i]];

    SparseVec acc;
    for (const auto& sel : subsets(n)) {
      const int i = static_cast<int>(sel.size());
      if (i < 1) continue;
      const int j = n - i + 1;
      // positions sel go first, the rest keep order
      std::vector<int> perm;
      perm.reserve(n);
      std::vector<bool> in(n, false);
      for (int p : sel) {
        perm.push_back(p);
        in[p] = true;
      }
      for (int p = 0; p < n; ++p)
        if (!in[p]) perm.push_back(p);
      PermSigns chi = perm_and_koszul(perm, tdeg);

      std::vector<int> first, rest;
      for (int p : sel) first.push_back(tup[p]);
      for (int p = 0; p < n; ++p)
        if (!in[p]) rest.push_back(tup[p]);

      SparseVec inner = mu_eval(v, i, first);
      if (inner.zero()) continue;
      SparseVec outer = mu_eval(v, j, rest, inner);
      int sgn = chi.perm * chi.koszul;
      if ((i * (j - 1)) % 2 != 0) sgn = -sgn;
      outer *= Rat(sgn);
      acc += outer;
    }
    if (!acc.zero()) {
      std::ostringstream w;
      w << "(";
      for (int p = 0; p < n; ++p) w << (p ? "," : "") << v.basis[tup[p]].name;
      w << ") residual " << v.show(acc);
      found[idx].add("linfinity_arity_" + std::to_string(n), w.str());
    }
  });
  for (auto& f : found) rep.merge(f);
  rep.normalize();
  return rep;
}

}  // namespace jbkit
