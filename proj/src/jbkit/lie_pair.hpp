#pragma once

#include "jbkit/algebra_spec.hpp"
#include "jbkit/bernoulli.hpp"
#include "jbkit/taylor_field.hpp"

#include <map>

namespace jbkit {

// Two Lie (or dg Lie) algebras and a morphism g -> h between them.
struct LiePair {
  AlgebraSpec g, h;
  MorphismSpec phi;
};

// The coefficient in front of the q-step bracket ladder. Defaults to
// B_q / q!; single entries can be overridden to build negative controls.
struct LadderCoeffs {
  std::map<int, Rat> overrides;
  Rat operator()(int q) const {
    auto it = overrides.find(q);
    return it != overrides.end() ? it->second : bernoulli_over_factorial(q);
  }
};

// Validates both algebras and the morphism. With allow_dg = false any
// differential present is a violation (the strict constructions require
// plain Lie algebras).
ValidationReport validate_pair(const LiePair& pair, bool allow_dg);

// x@b_1@...@b_k, the left-nested bracket ladder in h.
SparseVec at_ladder(const AlgebraSpec& h, SparseVec x, std::span<const int> bs);

// coeff * sum over orderings of h_tuple of the Koszul-signed ladder on head.
SparseVec ladder_value(const AlgebraSpec& h, const SparseVec& head,
                       std::span<const int> h_tuple, const Rat& coeff);

// The twisted action a -> F(a) of a strict Lie pair:
//   F_q(a; b_1..b_q) = c_q * sum_{sigma in S_q} (koszul) phi(a)@b_{sigma(1)}@...@b_{sigma(q)}
// computed for all q <= order. Throws std::invalid_argument if phi is not
// strict.
std::map<int, TaylorField> twisted_action(const LiePair& pair, int order,
                                          const LadderCoeffs& coeffs = {});

// The (m,n) component of the generalized action: the same ladder applied to
// phi_m, as a table on (sorted g-tuple, sorted h-tuple) keys.
struct BiTable {
  std::map<std::pair<std::vector<int>, std::vector<int>>, SparseVec> t;
  bool empty() const { return t.empty(); }
};
BiTable twisted_action_general(const AlgebraSpec& g, const AlgebraSpec& h,
                               const MorphismSpec& phi, int m, int n,
                               const LadderCoeffs& coeffs = {});

// Solves the ladder-coefficient recursion inside the free nilpotent Lie
// algebra on {u1, u2, w} of weight max_n + 2: equation E_n determines
// c_{n+1} from c_0..c_n starting at c_0 = 1, and every coordinate of the
// full identity is asserted to vanish. The values must come out as B_n/n!.
struct CnSolution {
  std::vector<Rat> c;
  bool consistent = true;
  std::string detail;  // set when inconsistent
};
CnSolution solve_cn(int max_n);

// Data of a g-module action plus a linear map phi: g -> h. Depending on
// which shape of compatibility phi satisfies, this is a Lie atom (double
// equality) or an affine homogeneous space (difference equation).
struct AtomData {
  AlgebraSpec g;
  AlgebraSpec h_space;  // basis only; brackets ignored
  std::map<std::pair<int, int>, SparseVec> action;  // <a, m>
  std::map<int, SparseVec> phi;

  SparseVec act(int a, const SparseVec& m) const;
  SparseVec act(const SparseVec& a, const SparseVec& m) const;
  SparseVec phi_of(int a) const;
  SparseVec phi_of(const SparseVec& a) const;
};

// Axioms: g is Lie, <,> is a g-module action, and
//   phi([a,b]) = <a,phi(b)> - (-1)^{|a||b|} <b,phi(a)>.
// Also rebuilds the affine field F = (phi, -<,>) per element and confirms it
// is a morphism into formal vector fields at order 1.
ValidationReport validate_affine(const AtomData& data);

// Same (i),(ii) but condition (iii) is the double equality
//   phi([a,b]) = <a,phi(b)> = -(-1)^{|a||b|} <b,phi(a)>.
ValidationReport validate_atom(const AtomData& data);

}  // namespace jbkit
