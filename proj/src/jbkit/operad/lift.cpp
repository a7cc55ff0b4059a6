#include "jbkit/operad/lift.hpp"

#include <set>

namespace jbkit::operad {

namespace {

using LabelSet = std::vector<int>;

void assemble_children(RawTree& raw, int parent, bool straight_class,
                       const std::vector<std::vector<int>>& encoded_children) {
  for (const auto& enc : encoded_children)
    for (int e : enc)
      (straight_class ? raw.nodes[parent].str : raw.nodes[parent].wav).push_back(e);
}

// Appends a canonical copy of `sub` under construction, returning the id of
// its root inside raw; orients continue from the current node count.
int append_subtree(RawTree& raw, const Tree& sub) {
  int base = static_cast<int>(raw.nodes.size());
  for (std::size_t u = 0; u < sub.nodes.size(); ++u)
    raw.add(sub.nodes[u].gen, base + static_cast<int>(u));
  for (std::size_t u = 0; u < sub.nodes.size(); ++u) {
    for (int c : sub.nodes[u].str)
      raw.nodes[base + u].str.push_back(c < 0 ? c : base + c);
    for (int c : sub.nodes[u].wav)
      raw.nodes[base + u].wav.push_back(c < 0 ? c : base + c);
  }
  return base;
}

struct Enumerator {
  std::set<Tree> straight_result, wavy_result;

  // all ways to split `items` into k nonempty parts (ordered assignment,
  // deduplicated later through the canonical tree set)
  static void partitions(const LabelSet& items, int k,
                         const std::function<void(const std::vector<LabelSet>&)>& fn) {
    std::vector<int> assign(items.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == items.size()) {
        std::vector<LabelSet> parts(k);
        for (std::size_t j = 0; j < items.size(); ++j) parts[assign[j]].push_back(items[j]);
        for (const auto& p : parts)
          if (p.empty()) return;
        fn(parts);
        return;
      }
      for (int p = 0; p < k; ++p) {
        assign[i] = p;
        rec(i + 1);
      }
    };
    rec(0);
  }

  std::vector<Tree> straight_trees(const LabelSet& s) {
    std::vector<Tree> out;
    if (s.size() < 2) return out;
    for (int k = 2; k <= static_cast<int>(s.size()); ++k) {
      partitions(s, k, [&](const std::vector<LabelSet>& parts) {
        // child options per part: leaf (singleton) or straight subtree
        std::vector<std::vector<std::variant<int, Tree>>> opts(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (parts[i].size() == 1) opts[i].push_back(parts[i][0]);
          for (Tree& t : straight_trees(parts[i])) opts[i].push_back(std::move(t));
        }
        emit(Gen::g(k), opts, {}, true, out);
      });
    }
    return out;
  }

  std::vector<Tree> wavy_trees(const LabelSet& s, const LabelSet& w) {
    std::vector<Tree> out;
    // morphism corolla roots
    if (w.empty() && !s.empty()) {
      for (int k = 1; k <= static_cast<int>(s.size()); ++k) {
        partitions(s, k, [&](const std::vector<LabelSet>& parts) {
          std::vector<std::vector<std::variant<int, Tree>>> opts(parts.size());
          for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].size() == 1) opts[i].push_back(parts[i][0]);
            for (Tree& t : straight_trees(parts[i])) opts[i].push_back(std::move(t));
          }
          emit(Gen::p(k), opts, {}, true, out);
        });
      }
    }
    // wavy bracket roots
    LabelSet all = s;
    all.insert(all.end(), w.begin(), w.end());
    const std::size_t s_size = s.size();
    for (int k = 2; k <= static_cast<int>(all.size()); ++k) {
      partitions(all, k, [&](const std::vector<LabelSet>& parts) {
        std::vector<std::vector<std::variant<int, Tree>>> opts(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) {
          LabelSet ps, pw;
          for (int x : parts[i])
            (std::find(s.begin(), s.begin() + s_size, x) != s.begin() + s_size ? ps : pw)
                .push_back(x);
          if (ps.empty() && pw.size() == 1) opts[i].push_back(pw[0]);
          for (Tree& t : wavy_trees(ps, pw)) opts[i].push_back(std::move(t));
          if (opts[i].empty()) return;
        }
        emit(Gen::h(k), opts, {}, false, out);
      });
    }
    return out;
  }

  // cartesian product over child options, assembling canonical trees
  static void emit(Gen root, const std::vector<std::vector<std::variant<int, Tree>>>& opts,
                   const std::vector<std::variant<int, Tree>>& chosen_unused, bool straight_class,
                   std::vector<Tree>& out) {
    (void)chosen_unused;
    std::vector<int> pick(opts.size(), 0);
    std::set<Tree> dedupe;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == opts.size()) {
        RawTree raw;
        int r = raw.add(root, 0);
        for (std::size_t j = 0; j < opts.size(); ++j) {
          const auto& choice = opts[j][pick[j]];
          int enc;
          if (std::holds_alternative<int>(choice))
            enc = RawTree::leaf(std::get<int>(choice));
          else
            enc = append_subtree(raw, std::get<Tree>(choice));
          (straight_class ? raw.nodes[r].str : raw.nodes[r].wav).push_back(enc);
        }
        dedupe.insert(canonicalize(raw).tree);
        return;
      }
      for (std::size_t c = 0; c < opts[i].size(); ++c) {
        pick[i] = static_cast<int>(c);
        rec(i + 1);
      }
    };
    if (!opts.empty()) rec(0);
    out.insert(out.end(), dedupe.begin(), dedupe.end());
  }
};

}  // namespace

std::vector<Tree> enumerate_lp_trees(int straight_leaves, int wavy_leaves, Colour out,
                                     int degree) {
  LabelSet s(straight_leaves), w(wavy_leaves);
  for (int i = 0; i < straight_leaves; ++i) s[i] = i;
  for (int i = 0; i < wavy_leaves; ++i) w[i] = straight_leaves + i;
  Enumerator en;
  std::vector<Tree> all =
      out == Colour::straight ? en.straight_trees(s) : en.wavy_trees(s, w);
  std::set<Tree> uniq;
  for (Tree& t : all)
    if (t.total_degree() == degree) uniq.insert(std::move(t));
  return {uniq.begin(), uniq.end()};
}

namespace {

struct LinSolve {
  bool consistent = true;
  std::vector<Rat> x;
};

LinSolve solve_columns(const std::vector<TreeSum>& cols, const TreeSum& rhs) {
  std::map<Tree, int> rows;
  auto row_of = [&](const Tree& t) {
    auto it = rows.find(t);
    if (it == rows.end()) it = rows.emplace(t, static_cast<int>(rows.size())).first;
    return it->second;
  };
  for (const auto& col : cols)
    for (const auto& [t, c] : col.terms) row_of(t);
  for (const auto& [t, c] : rhs.terms) row_of(t);

  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(nc, Rat(0)));
  std::vector<Rat> b(nr, Rat(0));
  for (int j = 0; j < nc; ++j)
    for (const auto& [t, c] : cols[j].terms) a[rows.at(t)][j] = c;
  for (const auto& [t, c] : rhs.terms) b[rows.at(t)] = c;

  LinSolve out;
  out.x.assign(nc, Rat(0));
  std::vector<int> pivot_col(nr, -1);
  int rank = 0;
  for (int j = 0; j < nc && rank < nr; ++j) {
    int piv = -1;
    for (int i = rank; i < nr; ++i)
      if (a[i][j] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    std::swap(b[piv], b[rank]);
    Rat inv = a[rank][j];
    for (int jj = j; jj < nc; ++jj) a[rank][jj] /= inv;
    b[rank] /= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == rank || a[i][j] == 0) continue;
      Rat f = a[i][j];
      for (int jj = j; jj < nc; ++jj) a[i][jj] -= f * a[rank][jj];
      b[i] -= f * b[rank];
    }
    pivot_col[rank] = j;
    ++rank;
  }
  for (int i = rank; i < nr; ++i)
    if (b[i] != 0) {
      out.consistent = false;
      return out;
    }
  for (int i = 0; i < rank; ++i) out.x[pivot_col[i]] = b[i];
  return out;
}

}  // namespace

LiftResult lift_jb_infinity(int max_arity, int max_codegree, const LadderCoeffs& coeffs) {
  LiftResult res;
  static const TreeSum kEmpty;

  // degree-0 corollas: tree-shaped preimages of the strict images,
  // including the unary morphism corolla
  res.images[Gen::g(2)] = TreeSum{{{gen_tree(Gen::g(2)), Rat(1)}}};
  for (int n = 0; n + 1 <= max_arity; ++n)
    res.images[Gen::f(1, n)] = ladder_image(1, n, coeffs);

  auto image_fn = [&](const Gen& g) -> const TreeSum& {
    auto it = res.images.find(g);
    return it == res.images.end() ? kEmpty : it->second;
  };

  for (int r = 1; r <= max_codegree; ++r) {
    for (const Gen& c : generators(OperadId::hs_inf, max_arity)) {
      if (c.degree() != -r) continue;
      TreeSum rhs = apply_morphism(gen_delta(c, OperadId::hs_inf), image_fn);
      std::vector<Tree> cands = enumerate_lp_trees(
          c.straight_in(), c.wavy_in(), c.out(), c.degree());
      std::vector<TreeSum> cols;
      cols.reserve(cands.size());
      for (const Tree& t : cands)
        cols.push_back(delta_tree_sum(TreeSum{{{t, Rat(1)}}}, OperadId::lp_inf));
      LinSolve sol = solve_columns(cols, rhs);
      if (!sol.consistent) {
        res.report.add("lift_consistency(" + c.str() + ")",
                       "no solution over " + std::to_string(cands.size()) + " candidate trees");
        continue;
      }
      TreeSum e;
      for (std::size_t j = 0; j < cands.size(); ++j) e.add(cands[j], sol.x[j]);
      TreeSum check = delta_tree_sum(e, OperadId::lp_inf);
      TreeSum diff = check;
      TreeSum neg = rhs;
      neg *= Rat(-1);
      diff += neg;
      if (!diff.zero())
        res.report.add("lift_resubstitution(" + c.str() + ")", "delta e != image(delta C)");
      res.images[c] = std::move(e);
    }
  }
  res.report.normalize();
  return res;
}

}  // namespace jbkit::operad
