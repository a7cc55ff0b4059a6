#include "jbkit/operad/jb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "jbkit/combinatorics.hpp"

namespace jbkit::operad {

TreeSum ladder_image(int m, int n, const LadderCoeffs& coeffs) {
  TreeSum out;
  Rat cn = coeffs(n);
  if (cn == 0) return out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // built bottom-up: [..[[P(m), w_{perm(1)}], w_{perm(2)}].., w_{perm(n)}]
    RawTree raw;
    int cur = raw.add(Gen::p(m), n);
    for (int s = 0; s < m; ++s) raw.nodes[cur].str.push_back(RawTree::leaf(s));
    for (int i = 0; i < n; ++i) {
      int v = raw.add(Gen::h(2), n - 1 - i);
      raw.nodes[v].wav.push_back(cur);
      raw.nodes[v].wav.push_back(RawTree::leaf(m + perm[i]));
      cur = v;
    }
    raw.root = cur;
    out.add_raw(raw, cn);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TreeSum jb_image(Gen g, const LadderCoeffs& coeffs) {
  if (g.kind == Gen::Kind::G)
    return g.m == 2 ? TreeSum{{{gen_tree(g), Rat(1)}}} : TreeSum{};
  if (g.kind == Gen::Kind::F && g.m == 1) return ladder_image(1, g.n, coeffs);
  return {};
}

TreeSum jb_half_image(Gen g, const LadderCoeffs& coeffs) {
  if (g.kind == Gen::Kind::G)
    return g.m == 2 ? TreeSum{{{gen_tree(g), Rat(1)}}} : TreeSum{};
  if (g.kind == Gen::Kind::F) return ladder_image(g.m, g.n, coeffs);
  return {};
}

int ExprContext::intern(const Atom& a) {
  auto it = ids.find(a);
  if (it != ids.end()) return it->second;
  int id = static_cast<int>(atoms.size());
  atoms.push_back(a);
  ids.emplace(a, id);
  return id;
}

namespace {

using AWord = std::vector<int>;
using APoly = std::map<AWord, Rat>;

void ap_add(APoly& p, const AWord& w, const Rat& c) {
  if (c == 0) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

int word_degree(const AWord& w, const std::function<int(int)>& deg) {
  int d = 0;
  for (int a : w) d += deg(a);
  return d;
}

// super-commutator in the free associative algebra on graded letters
APoly ap_bracket(const APoly& x, const APoly& y, const std::function<int(int)>& deg) {
  APoly out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) {
      AWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      ap_add(out, uv, cu * cv);
      AWord vu = v;
      vu.insert(vu.end(), u.begin(), u.end());
      int s = (word_degree(u, deg) % 2 != 0 && word_degree(v, deg) % 2 != 0) ? 1 : -1;
      ap_add(out, vu, Rat(s) * cu * cv);
    }
  return out;
}

// associative expansion of the left-normed ladder [[..[w0,w1]..],wk]
APoly ladder_expand(const AWord& lad, const std::function<int(int)>& deg) {
  APoly p{{AWord{lad[0]}, Rat(1)}};
  for (std::size_t i = 1; i < lad.size(); ++i)
    p = ap_bracket(p, APoly{{AWord{lad[i]}, Rat(1)}}, deg);
  return p;
}

// Writes a multilinear Lie polynomial in the basis of left-normed ladders
// headed by the least letter of their support. Triangular: the expansion of
// such a ladder contains exactly one word starting with its head.
std::map<AWord, Rat> lie_decompose(APoly p, const std::function<int(int)>& deg) {
  std::map<AWord, Rat> out;
  while (!p.empty()) {
    const AWord* pick = nullptr;
    for (const auto& [w, c] : p) {
      int mn = *std::min_element(w.begin(), w.end());
      if (w[0] == mn) {
        pick = &w;
        break;
      }
    }
    if (!pick) throw std::logic_error("lie_decompose: not a Lie element");
    AWord lad = *pick;
    Rat c = p.at(lad);
    APoly e = ladder_expand(lad, deg);
    for (const auto& [w, ce] : e) ap_add(p, w, -c * ce);
    out[lad] += c;
    if (out[lad] == 0) out.erase(lad);
  }
  return out;
}

const std::function<int(int)> kDegZero = [](int) { return 0; };

struct Reducer {
  const Tree* t;
  ExprContext* ctx;
  bool phi_strict = false;

  APoly straight_region(int c) const {
    if (c < 0) return APoly{{AWord{~c}, Rat(1)}};
    const Node& nd = t->nodes[c];
    if (nd.gen.kind != Gen::Kind::G || nd.gen.m != 2)
      throw std::invalid_argument("reduce: straight region must consist of binary brackets");
    return ap_bracket(straight_region(nd.str[0]), straight_region(nd.str[1]), kDegZero);
  }

  APoly wavy_region(int c) const {
    auto deg = [this](int id) { return ctx->degree(id); };
    if (c < 0) {
      Atom a;
      a.kind = 0;
      a.leaf = ~c;
      return APoly{{AWord{ctx->intern(a)}, Rat(1)}};
    }
    const Node& nd = t->nodes[c];
    if (nd.gen.kind == Gen::Kind::H) {
      if (nd.gen.n != 2)
        throw std::invalid_argument("reduce: wavy region must consist of binary brackets");
      return ap_bracket(wavy_region(nd.wav[0]), wavy_region(nd.wav[1]), deg);
    }
    if (nd.gen.kind != Gen::Kind::P)
      throw std::invalid_argument("reduce: unexpected vertex " + nd.gen.str());
    if (phi_strict && nd.gen.m == 1) {
      // strict morphism: a block on a bracket monomial is the bracket of
      // the blocks on the letters
      APoly out;
      for (const auto& [mono, mc] : lie_decompose(straight_region(nd.str[0]), kDegZero)) {
        AWord atom_ladder;
        for (int label : mono) {
          Atom a;
          a.kind = 1;
          a.p = 1;
          a.args.push_back({label});
          atom_ladder.push_back(ctx->intern(a));
        }
        APoly e = ladder_expand(atom_ladder, deg);
        for (const auto& [w, ce] : e) ap_add(out, w, mc * ce);
      }
      return out;
    }
    if (phi_strict)
      throw std::invalid_argument("reduce: higher morphism corolla in the strict operad");
    // morphism block: straighten every argument, expand multilinearly
    std::vector<std::map<AWord, Rat>> args;
    for (int sc : nd.str) args.push_back(lie_decompose(straight_region(sc), kDegZero));
    APoly out;
    std::vector<std::pair<SMono, Rat>> chosen(args.size());
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t k, Rat coeff) {
      if (k == args.size()) {
        Atom a;
        a.kind = 1;
        a.p = nd.gen.m;
        std::vector<SMono> mons;
        for (const auto& [mn, mc] : chosen) mons.push_back(mn);
        // skew slots: sort the arguments, track the permutation parity
        std::vector<int> order(mons.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int x, int y) { return mons[x] < mons[y]; });
        int sgn = perm_sign(order);
        for (int o : order) a.args.push_back(mons[o]);
        ap_add(out, AWord{ctx->intern(a)}, coeff * Rat(sgn));
        return;
      }
      for (const auto& [mn, mc] : args[k]) {
        chosen[k] = {mn, mc};
        rec(k + 1, coeff * mc);
      }
    };
    rec(0, Rat(1));
    return out;
  }
};

}  // namespace

Reduced reduce_mod_relations(const TreeSum& s, ExprContext& ctx, bool phi_strict) {
  Reduced out;
  auto deg = [&ctx](int id) { return ctx.degree(id); };
  for (const auto& [t, c] : s.terms) {
    Reducer r{&t, &ctx, phi_strict};
    if (t.nodes[0].gen.out() == Colour::straight) {
      for (const auto& [mono, mc] : lie_decompose(r.straight_region(0), kDegZero)) {
        out.straight[mono] += c * mc;
        if (out.straight[mono] == 0) out.straight.erase(mono);
      }
    } else {
      for (const auto& [mono, mc] : lie_decompose(r.wavy_region(0), deg)) {
        out.wavy[mono] += c * mc;
        if (out.wavy[mono] == 0) out.wavy.erase(mono);
      }
    }
  }
  return out;
}

std::string Reduced::str(const ExprContext& ctx) const {
  std::ostringstream os;
  auto smono_str = [](const SMono& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? ",s" : "s") + std::to_string(m[i]);
    return s + "]";
  };
  bool first = true;
  for (const auto& [mono, c] : straight) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*" << smono_str(mono);
  }
  for (const auto& [mono, c] : wavy) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*[";
    for (std::size_t i = 0; i < mono.size(); ++i) {
      const Atom& a = ctx.atoms[mono[i]];
      if (i) os << ",";
      if (a.kind == 0) {
        os << "w" << a.leaf;
      } else {
        os << "P" << a.p << "(";
        for (std::size_t j = 0; j < a.args.size(); ++j)
          os << (j ? ";" : "") << smono_str(a.args[j]);
        os << ")";
      }
    }
    os << "]";
  }
  if (first) os << "0";
  return os.str();
}

ValidationReport check_chain_map_jb(std::span<const Gen> gens, const LadderCoeffs& coeffs,
                                    Exec exec) {
  ValidationReport rep;
  std::vector<ValidationReport> found(gens.size());
  par_for(exec, static_cast<long>(gens.size()), [&](long i) {
    std::map<Gen, TreeSum> cache;
    auto image = [&](const Gen& g) -> const TreeSum& {
      auto it = cache.find(g);
      if (it == cache.end()) it = cache.emplace(g, jb_image(g, coeffs)).first;
      return it->second;
    };
    TreeSum img = apply_morphism(gen_delta(gens[i], OperadId::hs_inf), image);
    ExprContext ctx;
    Reduced r = reduce_mod_relations(img, ctx, /*phi_strict=*/true);
    if (!r.zero())
      found[i].add("jb_chain(" + gens[i].str() + ")", "residual " + r.str(ctx));
  });
  for (auto& f : found) rep.merge(f);
  rep.normalize();
  return rep;
}

ValidationReport check_chain_map_jb_half(std::span<const Gen> gens, const LadderCoeffs& coeffs,
                                         Exec exec) {
  ValidationReport rep;
  std::vector<ValidationReport> found(gens.size());
  par_for(exec, static_cast<long>(gens.size()), [&](long i) {
    std::map<Gen, TreeSum> cache;
    auto image = [&](const Gen& g) -> const TreeSum& {
      auto it = cache.find(g);
      if (it == cache.end()) it = cache.emplace(g, jb_half_image(g, coeffs)).first;
      return it->second;
    };
    TreeSum lhs = apply_morphism(gen_delta(gens[i], OperadId::hs_inf), image);
    TreeSum rhs = delta_tree_sum(jb_half_image(gens[i], coeffs), OperadId::lp_half);
    ExprContext ctx;
    Reduced rl = reduce_mod_relations(lhs, ctx);
    Reduced rr = reduce_mod_relations(rhs, ctx);
    if (!(rl == rr)) {
      found[i].add("jb_half_chain(" + gens[i].str() + ")",
                   "lhs " + rl.str(ctx) + " vs rhs " + rr.str(ctx));
    }
  });
  for (auto& f : found) rep.merge(f);
  rep.normalize();
  return rep;
}

}  // namespace jbkit::operad
