#include "jbkit/operad/evaluate.hpp"

#include <algorithm>
#include <numeric>

#include "jbkit/combinatorics.hpp"

namespace jbkit::operad {

namespace {

struct SortResult {
  std::vector<int> key;
  int sign = 1;  // perm * koszul (skew) or koszul (sym)
};

SortResult sort_skew(std::span<const int> tuple, std::span<const int> degs_by_basis) {
  SortResult out;
  std::vector<int> pos(tuple.size());
  std::iota(pos.begin(), pos.end(), 0);
  std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) { return tuple[a] < tuple[b]; });
  std::vector<int> d(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) d[i] = degs_by_basis[tuple[i]];
  PermSigns s = perm_and_koszul(pos, d);
  out.sign = s.perm * s.koszul;
  for (int p : pos) out.key.push_back(tuple[p]);
  for (std::size_t i = 1; i < out.key.size(); ++i)
    if (out.key[i] == out.key[i - 1] && degs_by_basis[out.key[i]] % 2 == 0) out.sign = 0;
  return out;
}

SortResult sort_sym(std::span<const int> tuple, std::span<const int> degs_by_basis) {
  SortResult out;
  std::vector<int> pos(tuple.size());
  std::iota(pos.begin(), pos.end(), 0);
  std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) { return tuple[a] < tuple[b]; });
  std::vector<int> d(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) d[i] = degs_by_basis[tuple[i]];
  PermSigns s = perm_and_koszul(pos, d);
  out.sign = s.koszul;
  for (int p : pos) out.key.push_back(tuple[p]);
  for (std::size_t i = 1; i < out.key.size(); ++i)
    if (out.key[i] == out.key[i - 1] && degs_by_basis[out.key[i]] % 2 != 0) out.sign = 0;
  return out;
}

}  // namespace

SparseVec bitable_eval(const BiTable& table, std::span<const int> gt, std::span<const int> ht,
                       std::span<const int> gdeg, std::span<const int> hdeg) {
  SortResult sg = sort_skew(gt, gdeg);
  SortResult sh = sort_sym(ht, hdeg);
  if (sg.sign == 0 || sh.sign == 0) return {};
  auto it = table.t.find({sg.key, sh.key});
  if (it == table.t.end()) return {};
  SparseVec out = it->second;
  out *= Rat(sg.sign * sh.sign);
  return out;
}

namespace {

struct EvalFrame {
  SparseVec value;
  int op_degree = 0;
  int leaf_degree = 0;
};

EvalFrame eval_node(const Tree& t, int u, const OperadRep& rep,
                    std::span<const int> straight_inputs, std::span<const int> wavy_inputs) {
  const Node& nd = t.nodes[u];
  const int s_count = static_cast<int>(straight_inputs.size());
  std::vector<EvalFrame> child;
  std::vector<bool> child_is_straight;
  auto handle = [&](int c, bool straight_slot) {
    if (c < 0) {
      int label = ~c;
      EvalFrame f;
      if (label < s_count) {
        f.value = SparseVec::unit(straight_inputs[label]);
        f.leaf_degree = rep.g->deg(straight_inputs[label]);
      } else {
        f.value = SparseVec::unit(wavy_inputs[label - s_count]);
        f.leaf_degree = rep.h->deg(wavy_inputs[label - s_count]);
      }
      child.push_back(std::move(f));
    } else {
      child.push_back(eval_node(t, c, rep, straight_inputs, wavy_inputs));
    }
    child_is_straight.push_back(straight_slot);
  };
  for (int c : nd.str) handle(c, true);
  for (int c : nd.wav) handle(c, false);

  EvalFrame out;
  out.op_degree = nd.gen.degree();
  int sign = 1;
  int leafdeg_before = 0;
  for (std::size_t j = 0; j < child.size(); ++j) {
    if (j > 0 && child[j].op_degree % 2 != 0 && leafdeg_before % 2 != 0) sign = -sign;
    leafdeg_before += child[j].leaf_degree;
    out.op_degree += child[j].op_degree;
    out.leaf_degree += child[j].leaf_degree;
  }

  // multilinear expansion over the children values
  std::vector<int> gt, ht;
  std::function<void(std::size_t, Rat)> rec = [&](std::size_t j, Rat coeff) {
    if (j == child.size()) {
      SparseVec v = rep.value(nd.gen, gt, ht);
      v *= coeff;
      out.value += v;
      return;
    }
    for (const auto& [b, c] : child[j].value.c) {
      auto& side = child_is_straight[j] ? gt : ht;
      side.push_back(b);
      rec(j + 1, coeff * c);
      side.pop_back();
    }
  };
  rec(0, Rat(sign));
  return out;
}

}  // namespace

SparseVec evaluate_tree(const Tree& t, const OperadRep& rep,
                        std::span<const int> straight_inputs,
                        std::span<const int> wavy_inputs) {
  return eval_node(t, 0, rep, straight_inputs, wavy_inputs).value;
}

OperadRep pair_rep(const LiePair& pair, const LadderCoeffs& coeffs) {
  OperadRep rep;
  rep.g = &pair.g;
  rep.h = &pair.h;
  rep.value = [&pair, coeffs](const Gen& g, std::span<const int> gt,
                              std::span<const int> ht) -> SparseVec {
    const auto& gd = pair.g.degrees();
    const auto& hd = pair.h.degrees();
    switch (g.kind) {
      case Gen::Kind::G:
        if (g.m != 2) return {};
        return pair.g.bracket(gt[0], gt[1]);
      case Gen::Kind::H:
        if (g.n != 2) return {};
        return pair.h.bracket(ht[0], ht[1]);
      case Gen::Kind::P: {
        const SkewTable* c = pair.phi.component(g.m);
        return c ? c->eval(gt, gd) : SparseVec{};
      }
      default: {
        const SkewTable* c = pair.phi.component(g.m);
        if (!c) return {};
        SparseVec head = c->eval(gt, gd);
        if (head.zero()) return {};
        return ladder_value(pair.h, head, ht, coeffs(g.n));
      }
    }
  };
  return rep;
}

}  // namespace jbkit::operad
