#include "jbkit/cone.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jbkit/combinatorics.hpp"

namespace jbkit {

namespace {

// Signs fixed by D^2 = 0 together with the normalization that the ladder
// rows enter with coefficient +c_q and the (1,0) row is +phi. The pure-g
// rows and the unary g-differential then need the opposite sign, see the
// weight-2 identity phi([g1,g2]) - [phi g1, phi g2] = 0.
constexpr int kSignGBracket = -1;
constexpr int kSignGDiff = -1;
constexpr int kSignHDiff = +1;

// Decalage between /\^p g and Sym^p(g[1]): (-1)^{sum (p-i)|a_i|}.
int decalage_sign(std::span<const int> unshifted_degrees) {
  const int p = static_cast<int>(unshifted_degrees.size());
  long e = 0;
  for (int i = 0; i < p; ++i) e += static_cast<long>(p - 1 - i) * unshifted_degrees[i];
  return e % 2 != 0 ? -1 : 1;
}

}  // namespace

WordSum Codifferential::component(const Word& w) const {
  WordSum out;
  std::vector<int> gt, ht;
  for (const Letter& l : w.ls) (l.space == 0 ? gt : ht).push_back(l.idx);
  const int p = static_cast<int>(gt.size());
  const int q = static_cast<int>(ht.size());
  std::vector<int> gdeg(p);
  for (int i = 0; i < p; ++i) gdeg[i] = pair->g.deg(gt[i]);
  const int dec = decalage_sign(gdeg);

  if (p == 0 && q == 1 && unary_h) {
    SparseVec v = pair->h.d_of(ht[0]);
    for (const auto& [k, c] : v.c) out.add(Word{{Letter{1, k}}}, Rat(kSignHDiff) * c);
    return out;
  }
  if (q == 0) {
    auto it = dprime.find(p);
    if (it != dprime.end()) {
      SparseVec v = it->second.eval(gt, pair->g.degrees());
      for (const auto& [k, c] : v.c) out.add(Word{{Letter{0, k}}}, Rat(dec) * c);
    }
  }
  if (p >= 1) {
    auto it = dsecond.find({p, q});
    if (it != dsecond.end()) {
      auto entry = it->second.t.find({gt, ht});
      if (entry != it->second.t.end())
        for (const auto& [k, c] : entry->second.c) out.add(Word{{Letter{1, k}}}, Rat(dec) * c);
    }
  }
  return out;
}

Codifferential build_codifferential(const LiePair& pair, ConeMode mode, int max_weight,
                                    const LadderCoeffs& coeffs, bool validate) {
  if (validate) {
    ValidationReport rep = validate_pair(pair, mode != ConeMode::strict);
    if (mode != ConeMode::linf_morphism && !pair.phi.strict())
      rep.add("mode", "higher phi components need linf_morphism mode");
    if (!rep.ok())
      throw std::invalid_argument("build_codifferential: invalid pair: " + rep.str());
  }

  Codifferential cd;
  cd.pair = &pair;
  cd.mode = mode;
  cd.max_rows = max_weight;

  const auto& gd = pair.g.degrees();

  // pure-g rows
  SkewTable bracket_row;
  for (int i = 0; i < pair.g.dim(); ++i)
    for (int j = i; j < pair.g.dim(); ++j) {
      SparseVec v = pair.g.bracket(i, j);
      if (v.zero()) continue;
      v *= Rat(kSignGBracket);
      bracket_row.add({i, j}, v, gd);
    }
  if (!bracket_row.empty()) cd.dprime.emplace(2, std::move(bracket_row));
  if (mode != ConeMode::strict && pair.g.has_differential()) {
    SkewTable drow;
    for (int i = 0; i < pair.g.dim(); ++i) {
      SparseVec v = pair.g.d_of(i);
      if (v.zero()) continue;
      v *= Rat(kSignGDiff);
      drow.add({i}, v, gd);
    }
    if (!drow.empty()) cd.dprime.emplace(1, std::move(drow));
  }
  cd.unary_h = mode != ConeMode::strict && pair.h.has_differential();

  // h-output rows: the ladder applied to each phi component
  const int max_m = pair.phi.components.empty() ? 0 : pair.phi.components.rbegin()->first;
  for (int m = 1; m <= max_m; ++m) {
    if (!pair.phi.component(m)) continue;
    for (int q = 0; m + q <= max_weight; ++q) {
      BiTable tab = twisted_action_general(pair.g, pair.h, pair.phi, m, q, coeffs);
      if (!tab.empty()) cd.dsecond.emplace(std::make_pair(m, q), std::move(tab));
    }
  }
  return cd;
}

WordSum apply_D(const Codifferential& cd, const Word& w) {
  WordSum out;
  const int n = w.weight();
  std::vector<int> sdeg(n);
  for (int i = 0; i < n; ++i) sdeg[i] = cd.shifted_deg(w.ls[i]);

  for (const auto& sel : subsets(n)) {
    if (sel.empty()) continue;
    // Koszul sign of pulling the selected letters to the front.
    std::vector<bool> in(n, false);
    std::vector<int> perm;
    perm.reserve(n);
    for (int p : sel) {
      perm.push_back(p);
      in[p] = true;
    }
    for (int p = 0; p < n; ++p)
      if (!in[p]) perm.push_back(p);
    int eps = koszul_sign(perm, sdeg);

    Word sub, rest;
    for (int p : sel) sub.ls.push_back(w.ls[p]);
    for (int p = 0; p < n; ++p)
      if (!in[p]) rest.ls.push_back(w.ls[p]);

    WordSum image = cd.component(sub);
    for (const auto& [lw, c] : image.terms) {
      const Letter out_letter = lw.ls[0];
      const int ldeg = cd.shifted_deg(out_letter);
      // insert the output letter (currently in front) into rest
      int sign = eps;
      Word nw;
      bool dead = false;
      std::size_t pos = 0;
      while (pos < rest.ls.size() && rest.ls[pos] < out_letter) {
        if (ldeg % 2 != 0 && cd.letter_odd(rest.ls[pos])) sign = -sign;
        ++pos;
      }
      if (ldeg % 2 != 0 && pos < rest.ls.size() && rest.ls[pos] == out_letter) dead = true;
      if (dead) continue;
      nw.ls.reserve(rest.ls.size() + 1);
      nw.ls.insert(nw.ls.end(), rest.ls.begin(), rest.ls.begin() + pos);
      nw.ls.push_back(out_letter);
      nw.ls.insert(nw.ls.end(), rest.ls.begin() + pos, rest.ls.end());
      out.add(nw, Rat(sign) * c);
    }
  }
  return out;
}

std::vector<Word> enumerate_words(const Codifferential& cd, int max_weight) {
  std::vector<Letter> alphabet;
  for (int i = 0; i < cd.pair->g.dim(); ++i) alphabet.push_back({0, i});
  for (int i = 0; i < cd.pair->h.dim(); ++i) alphabet.push_back({1, i});
  auto repeat_ok = [&](int a) { return !cd.letter_odd(alphabet[a]); };
  std::vector<Word> words;
  for (int len = 1; len <= max_weight; ++len)
    for_each_sorted_tuple(static_cast<int>(alphabet.size()), len, repeat_ok,
                          [&](std::span<const int> t) {
                            Word w;
                            for (int a : t) w.ls.push_back(alphabet[a]);
                            words.push_back(std::move(w));
                          });
  return words;
}

namespace {

std::string word_str(const Codifferential& cd, const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.ls.size(); ++i) {
    if (i) os << ".";
    const Letter& l = w.ls[i];
    os << (l.space == 0 ? cd.pair->g.basis[l.idx].name + "'" : cd.pair->h.basis[l.idx].name);
  }
  return os.str();
}

}  // namespace

ValidationReport check_D_squared(const Codifferential& cd, int max_weight, Exec exec) {
  ValidationReport rep;
  std::vector<Word> words = enumerate_words(cd, max_weight);
  std::vector<ValidationReport> found(words.size());
  par_for(exec, static_cast<long>(words.size()), [&](long idx) {
    WordSum first = apply_D(cd, words[idx]);
    WordSum acc;
    for (const auto& [w, c] : first.terms) {
      WordSum second = apply_D(cd, w);
      for (const auto& [w2, c2] : second.terms) acc.add(w2, c * c2);
    }
    if (!acc.zero()) {
      const auto& [w2, c2] = *acc.terms.begin();
      found[idx].add("d_squared_word", word_str(cd, words[idx]) + " -> coefficient " +
                                           rat_str(c2) + " at " + word_str(cd, w2));
    }
  });
  for (auto& f : found) rep.merge(f);
  rep.normalize();
  return rep;
}

AlgebraSpec export_cone_brackets(const Codifferential& cd, int arity_cap) {
  const AlgebraSpec& g = cd.pair->g;
  const AlgebraSpec& h = cd.pair->h;
  AlgebraSpec cone;
  cone.name = "cone(" + g.name + "->" + h.name + ")";
  for (const auto& b : g.basis) cone.basis.push_back({b.name + "'", b.degree});
  for (const auto& b : h.basis) cone.basis.push_back({b.name, b.degree + 1});
  const int gdim = g.dim();
  const auto& cdeg = cone.degrees();

  auto odd = [&](int i) { return cdeg[i] % 2 != 0; };
  for (int n = 1; n <= arity_cap; ++n) {
    // per-arity constant fixed by mu_2|g(x)g = +[,]_g together with the
    // unshuffle-form identities of the independent checker
    const int global = n % 2 != 0 ? 1 : -1;
    for_each_sorted_tuple(cone.dim(), n, odd, [&](std::span<const int> tuple) {
      // V-level decalage sign
      long e = 0;
      for (int i = 0; i < n; ++i) e += static_cast<long>(n - 1 - i) * cdeg[tuple[i]];
      int sgn = (e % 2 != 0 ? -1 : 1) * global;

      Word w;
      for (int i : tuple)
        w.ls.push_back(i < gdim ? Letter{0, i} : Letter{1, i - gdim});
      std::sort(w.ls.begin(), w.ls.end());
      WordSum val = cd.component(w);
      if (val.zero()) return;
      SparseVec out;
      for (const auto& [lw, c] : val.terms) {
        int vi = lw.ls[0].space == 0 ? lw.ls[0].idx : gdim + lw.ls[0].idx;
        out.add_term(vi, Rat(sgn) * c);
      }
      if (out.zero()) return;
      std::vector<int> key(tuple.begin(), tuple.end());
      if (n == 1) {
        cone.differential[key[0]] = out;
      } else if (n == 2) {
        cone.set_bracket(key[0], key[1], out);
      } else {
        cone.higher[n].add(key, out, cdeg);
      }
    });
  }
  return cone;
}

ValidationReport check_structural_zeros(const AlgebraSpec& cone, int g_dim, bool allow_unary_h) {
  ValidationReport rep;
  auto classify = [&](std::span<const int> key, const SparseVec& v, int arity) {
    int p = 0, q = 0;
    for (int i : key) (i < g_dim ? p : q)++;
    bool g_out = false, h_out = false;
    for (const auto& [k, c] : v.c) (k < g_dim ? g_out : h_out) = true;
    if (g_out && q != 0) rep.add("structural_zero_g", "arity " + std::to_string(arity));
    if (h_out && p == 0 && !(allow_unary_h && arity == 1))
      rep.add("structural_zero_h", "arity " + std::to_string(arity));
  };
  for (const auto& [i, v] : cone.differential) {
    int key[1] = {i};
    classify(key, v, 1);
  }
  for (const auto& [key, v] : cone.bracket2) {
    int k2[2] = {key.first, key.second};
    classify(k2, v, 2);
  }
  for (const auto& [n, table] : cone.higher)
    for (const auto& [key, v] : table.t) classify(key, v, n);
  rep.normalize();
  return rep;
}

}  // namespace jbkit
