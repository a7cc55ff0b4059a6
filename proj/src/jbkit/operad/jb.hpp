#pragma once

#include "jbkit/lie_pair.hpp"
#include "jbkit/operad/delta.hpp"

namespace jbkit::operad {

// Ladder trees: c_n * sum over orderings of the wavy inputs of the
// left-nested binary-bracket ladder over a single morphism corolla P(m).
TreeSum ladder_image(int m, int n, const LadderCoeffs& coeffs);

// The strict morphism into the operad of Lie pairs (phi = P1 corolla):
// G(2) -> bracket, F(1,n) -> Bernoulli ladder, everything else -> 0.
TreeSum jb_image(Gen g, const LadderCoeffs& coeffs = {});

// The quotient-level homotopy morphism: F(m,n) -> ladder over P(m) for every
// m; G(2) -> bracket, G(m>=3) -> 0.
TreeSum jb_half_image(Gen g, const LadderCoeffs& coeffs = {});

// ---------- normal form modulo the binary Jacobi relations ----------

// Straight Lie monomial: left-normed ladder of straight leaf labels with the
// least label in front.
using SMono = std::vector<int>;

// Atom of the wavy layer: a wavy leaf or a morphism block P(p) applied to
// straight monomials (skew slots, arguments sorted).
struct Atom {
  int kind = 0;  // 0: wavy leaf, 1: morphism block
  int leaf = -1;
  int p = 0;
  std::vector<SMono> args;
  auto operator<=>(const Atom&) const = default;
  int degree() const { return kind == 0 ? 0 : 1 - p; }
};

// Interning table; reductions meant to be compared must share one context.
struct ExprContext {
  std::vector<Atom> atoms;
  std::map<Atom, int> ids;
  int intern(const Atom& a);
  int degree(int id) const { return atoms[id].degree(); }
};

struct Reduced {
  std::map<SMono, Rat> straight;         // straight-output trees
  std::map<std::vector<int>, Rat> wavy;  // ladders of atom ids
  bool operator==(const Reduced&) const = default;
  bool zero() const { return straight.empty() && wavy.empty(); }
  std::string str(const ExprContext& ctx) const;
};

// Straightens a sum of trees over {G2, H2, P_p} into the left-normed ladder
// basis, rewriting with the graded Jacobi identities oriented to pull the
// least factor in front. Throws std::invalid_argument on any other vertex.
// With phi_strict the unary morphism corolla is additionally a map of Lie
// algebras, so blocks on bracket monomials expand into brackets of blocks;
// this is the extra relation of the strict Lie-pair operad. The homotopy
// quotient has no such relation, so the jb_half checks leave it off.
Reduced reduce_mod_relations(const TreeSum& s, ExprContext& ctx, bool phi_strict = false);

// jb is a chain map into a target with zero differential: the reduction of
// jb(delta C) must vanish identically for every generator.
ValidationReport check_chain_map_jb(std::span<const Gen> gens, const LadderCoeffs& coeffs = {},
                                    Exec exec = Exec::serial);

// delta . jb_half = jb_half . delta, compared in normal form.
ValidationReport check_chain_map_jb_half(std::span<const Gen> gens,
                                         const LadderCoeffs& coeffs = {},
                                         Exec exec = Exec::serial);

}  // namespace jbkit::operad
