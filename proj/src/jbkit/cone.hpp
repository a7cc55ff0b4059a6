#pragma once

#include "jbkit/lie_pair.hpp"
#include "jbkit/linfinity.hpp"

#include <compare>

namespace jbkit {

enum class ConeMode { strict, dg, linf_morphism };

// A letter of the shifted alphabet g[1] (+) h.
struct Letter {
  int space = 0;  // 0 = g[1], 1 = h
  int idx = 0;
  auto operator<=>(const Letter&) const = default;
};

// Canonical basis word of Sym^{>=1}(g[1] (+) h): letters sorted, and a letter
// of odd shifted degree never repeats.
struct Word {
  std::vector<Letter> ls;
  auto operator<=>(const Word&) const = default;
  int weight() const { return static_cast<int>(ls.size()); }
};

struct WordSum {
  std::map<Word, Rat> terms;
  void add(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool zero() const { return terms.empty(); }
  WordSum& operator+=(const WordSum& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
};

// The component tables of a degree-1 coderivation of Sym^{>=1}(g[1] (+) h):
// rows with g output only eat pure-g words, rows with h output need at least
// one g factor; the optional unary d_h row is the one exception, folded into
// the total coderivation in the dg modes.
struct Codifferential {
  const LiePair* pair = nullptr;
  ConeMode mode = ConeMode::strict;
  int max_rows = 0;                              // p+q bound the tables cover
  std::map<int, SkewTable> dprime;               // p -> table on /\^p g, g output
  std::map<std::pair<int, int>, BiTable> dsecond;  // (p,q) -> table, h output
  bool unary_h = false;                          // include +d_h

  int shifted_deg(Letter l) const {
    return l.space == 0 ? pair->g.deg(l.idx) - 1 : pair->h.deg(l.idx);
  }
  bool letter_odd(Letter l) const { return shifted_deg(l) % 2 != 0; }

  // The n-letter component D_n applied to a full canonical word; the result
  // is a vector of single letters.
  WordSum component(const Word& w) const;
};

// Assembles the codifferential of a Lie pair. strict: plain Lie algebras and
// a strict phi; dg: dg Lie algebras, strict phi, unary differentials folded
// in; linf_morphism: dg Lie algebras with phi allowed higher components.
// `coeffs` feeds the ladder rows (overridable for negative controls);
// `validate` can be disabled to probe broken input on purpose.
Codifferential build_codifferential(const LiePair& pair, ConeMode mode, int max_weight,
                                    const LadderCoeffs& coeffs = {}, bool validate = true);

// Coderivation expansion: D(w_1 ... w_k) over nonempty sub-multisets with
// Koszul extraction signs on shifted degrees.
WordSum apply_D(const Codifferential& cd, const Word& w);

// Applies D twice to every canonical word of weight <= max_weight and
// reports any nonzero image with its offending coefficient.
ValidationReport check_D_squared(const Codifferential& cd, int max_weight,
                                 Exec exec = Exec::serial);

// All canonical words of weight in [1, max_weight].
std::vector<Word> enumerate_words(const Codifferential& cd, int max_weight);

// Degree-shift to the mapping cone: brackets mu_n on V = g (+) h[-1],
// normalized so that mu_2 restricted to g (x) g is +[,]_g. The result is an
// AlgebraSpec carrying mu_1 as differential, mu_2 as bracket and the rest as
// higher tables, ready for check_linfinity.
AlgebraSpec export_cone_brackets(const Codifferential& cd, int arity_cap);

// The structural vanishing of the cone brackets: the g-projection dies on
// any tuple containing an h[-1] factor, the h-projection dies on pure-h
// tuples. In the dg modes the unary d_h row is exempt from the latter.
ValidationReport check_structural_zeros(const AlgebraSpec& cone, int g_dim, bool allow_unary_h);

}  // namespace jbkit
