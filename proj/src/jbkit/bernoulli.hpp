#pragma once

#include "jbkit/rational.hpp"

namespace jbkit {

// n-th Bernoulli number, defined by sum_n B_n z^n/n! = z/(e^z - 1), so
// B_0 = 1, B_1 = -1/2, B_2 = 1/6, and B_{2k+1} = 0 for k >= 1.
// Computed from the recurrence sum_{j=0}^{n} C(n+1,j) B_j = 0 and memoized;
// the shared table is mutex-guarded, so concurrent callers are fine.
Rat bernoulli(unsigned n);

// B_n / n!, the coefficient in front of the n-step bracket ladder.
Rat bernoulli_over_factorial(unsigned n);

}  // namespace jbkit
