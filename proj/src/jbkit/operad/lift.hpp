#pragma once

#include "jbkit/operad/jb.hpp"

namespace jbkit::operad {

// Every canonical tree over the generators {G(m), H(n), P(p)} with the given
// leaf profile, output colour and total degree.
std::vector<Tree> enumerate_lp_trees(int straight_leaves, int wavy_leaves, Colour out,
                                     int degree);

// Iterative lifting of the strict morphism through the resolution of the
// Lie-pair operad: degree-0 corollas get the tree-shaped preimages of their
// strict images; each lower corolla C gets a solution e of
// delta e = image(delta C), found by exact Gaussian elimination over the
// candidate tree span. The consistency of every linear system and the chain
// property of the result are re-verified and reported.
struct LiftResult {
  std::map<Gen, TreeSum> images;
  ValidationReport report;
  bool ok() const { return report.ok(); }
};
LiftResult lift_jb_infinity(int max_arity, int max_codegree, const LadderCoeffs& coeffs = {});

}  // namespace jbkit::operad
