#pragma once

#include "jbkit/operad/tree.hpp"
#include "jbkit/parallel.hpp"
#include "jbkit/report.hpp"

namespace jbkit::operad {

// Sign mutations for negative controls; the default is the convention that
// squares to zero.
struct DeltaTweaks {
  bool drop_partition_global_sign = false;  // drop the +1 in the partition-sum exponent
};

// The differential on a generating corolla: the prescribed signed sum of
// two-vertex trees (for the partition sum of the morphism corollas, trees
// with one bracket vertex over several corollas). Terms whose vertices fall
// outside the generator ranges do not exist and are skipped.
TreeSum gen_delta(Gen g, OperadId op, const DeltaTweaks& tweaks = {});

// Leibniz extension over arbitrary trees, with the Koszul passage sign over
// earlier vertices in the orientation.
TreeSum delta_tree_sum(const TreeSum& s, OperadId op, const DeltaTweaks& tweaks = {});

// All generators of the operad with arity <= max_arity, deterministic order.
std::vector<Gen> generators(OperadId op, int max_arity);

// delta^2 = 0 on every generator of total arity <= max_arity.
ValidationReport check_delta_squared(OperadId op, int max_arity, Exec exec = Exec::serial,
                                     const DeltaTweaks& tweaks = {});

// Dilation weight: n-1 on F(.,n), 0 on G. The differential must be
// homogeneous of weight 0 for this grading.
int dilation_weight(Gen g);
int dilation_weight(const Tree& t);
ValidationReport check_dilation_grading(int max_arity, Exec exec = Exec::serial);
// Homogeneity of an arbitrary sum (used to detect injected weight breakers).
ValidationReport check_sum_weight(const TreeSum& s, int expected_weight);

}  // namespace jbkit::operad
