#pragma once

#include <functional>
#include <span>
#include <vector>

namespace jbkit {

// Sign of the permutation given as the sequence perm[0..n-1] of distinct
// values (counts inversions).
int perm_sign(std::span<const int> perm);

// Koszul sign: the sign eps such that reordering homogeneous elements
// x_0,...,x_{n-1} of the given degrees into x_{perm[0]},...,x_{perm[n-1]}
// satisfies  x_{perm[0]} (.) ... (.) x_{perm[n-1]} = eps * x_0 (.) ... (.)
// x_{n-1}  in a graded-commutative product: every inversion (i<j with
// perm[i]>perm[j]) contributes (-1)^{deg[perm[i]]*deg[perm[j]]}.
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

// Both signs of the same permutation: {perm_sign, koszul_sign}.
struct PermSigns {
  int perm = 1;
  int koszul = 1;
};
PermSigns perm_and_koszul(std::span<const int> perm, std::span<const int> degrees);

// An ordered decomposition of {0,...,n-1} into disjoint parts covering all of
// it, each part kept in increasing order, together with the sign of the
// permutation (part_0, part_1, ...) of (0,...,n-1).
struct SignedSplitting {
  std::vector<std::vector<int>> parts;
  int sign = 1;
};

// Enumerates every ordered splitting of {0..n-1} into parts.size() disjoint
// parts with |part_j| >= min_sizes[j], in lexicographic order of the
// concatenated membership sequence.
std::vector<SignedSplitting> splittings(int n, std::span<const int> min_sizes);

// Unordered partitions of {0..n-1} into k >= min_parts nonempty blocks; the
// representative lists blocks sorted by their minimal element, each block
// increasing. sign is for the concatenated sequence, as above.
std::vector<SignedSplitting> set_partitions(int n, int min_parts);

// All subsets of {0..n-1} in increasing binary-counter order (the empty set
// first); each subset is an increasing index list.
std::vector<std::vector<int>> subsets(int n);

// Weakly increasing tuples t of the given length with entries in [0, dim);
// repetition of value v is allowed only when allow_repeat(v) holds.
void for_each_sorted_tuple(int dim, int length,
                           const std::function<bool(int)>& allow_repeat,
                           const std::function<void(std::span<const int>)>& fn);

}  // namespace jbkit
