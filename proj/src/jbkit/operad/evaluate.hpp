#pragma once

#include "jbkit/cone.hpp"
#include "jbkit/operad/tree.hpp"

namespace jbkit::operad {

// A representation of the free 2-coloured operads in multilinear tables over
// a pair of graded spaces. `value` must be fully multilinear and handle
// arbitrary (unsorted) index tuples, applying its own symmetry signs.
struct OperadRep {
  const AlgebraSpec* g = nullptr;
  const AlgebraSpec* h = nullptr;
  std::function<SparseVec(const Gen&, std::span<const int>, std::span<const int>)> value;
};

// Bottom-up evaluation with endomorphism-operad composition signs; leaf
// labels below straight_inputs.size() are straight.
SparseVec evaluate_tree(const Tree& t, const OperadRep& rep,
                        std::span<const int> straight_inputs,
                        std::span<const int> wavy_inputs);

// Natural tables of a Lie pair: G(2) = bracket of g, H(2) = bracket of h,
// P(p) = phi_p, F(p,q) = the ladder table; all other corollas zero.
OperadRep pair_rep(const LiePair& pair, const LadderCoeffs& coeffs = {});

// Graded lookup helpers over the table types.
SparseVec bitable_eval(const BiTable& table, std::span<const int> gt, std::span<const int> ht,
                       std::span<const int> gdeg, std::span<const int> hdeg);

}  // namespace jbkit::operad
