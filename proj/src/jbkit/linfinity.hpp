#pragma once

#include "jbkit/algebra_spec.hpp"

namespace jbkit {

// mu_n applied to an arbitrary index tuple: n=1 is the differential, n=2 the
// binary bracket, n>=3 the stored higher tables. Linear in each slot, graded
// antisymmetric overall.
SparseVec mu_eval(const AlgebraSpec& v, int n, std::span<const int> tuple);
SparseVec mu_eval(const AlgebraSpec& v, int n, std::span<const int> head_rest,
                  const SparseVec& head);

// Verifies the generalized Jacobi identities
//   sum_{i+j=n+1} (-1)^{i(j-1)} sum_{unshuffles} chi(sigma)
//       mu_j(mu_i(x_{sigma(1..i)}), x_{sigma(i+1..n)}) = 0
// for every arity n <= arity_cap on every basis tuple, where chi is the
// antisymmetric Koszul sign. For n = 2,3 with only mu_1, mu_2 present these
// are exactly d^2 = 0, the graded Leibniz rule and the graded Jacobi
// identity. Reports a witness tuple for every failure.
ValidationReport check_linfinity(const AlgebraSpec& v, int arity_cap,
                                 Exec exec = Exec::serial);

}  // namespace jbkit
