#pragma once

#include "jbkit/algebra_spec.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace jbkit {

// Free Lie algebra on n degree-0 generators, truncated to bracket weight
// <= max_weight (heavier brackets are zero). Basis: Lyndon words ordered by
// (weight, lex), with the standard (right-factor) bracketing. Elements are
// straightened through their expansion in the free associative algebra; a
// Lie polynomial's lexicographically least word is the leading Lyndon word
// of its basis expansion, which makes decomposition triangular.
class FreeLie {
 public:
  FreeLie(int num_gens, int max_weight, std::vector<std::string> gen_names = {});

  int dim() const { return static_cast<int>(words_.size()); }
  int generators() const { return num_gens_; }
  int max_weight() const { return max_weight_; }
  int weight(int b) const { return static_cast<int>(words_[b].size()); }
  int generator_index(int g) const { return gen_index_[g]; }
  const std::string& name(int b) const { return names_[b]; }
  // standard factorization of a non-generator basis element, as basis ids
  std::pair<int, int> factorization(int b) const { return factor_[b]; }

  // Bracket of two basis elements, straightened into the Lyndon basis;
  // exactly zero above the weight cap. Memoized, mutex-guarded.
  SparseVec bracket(int a, int b) const;
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

  // x@b^k = [..[[x,b],b]..,b] with k bracketings, left-nested.
  SparseVec ladder(const SparseVec& x, const SparseVec& b, int k) const;

  std::string show(const SparseVec& v) const;

 private:
  using Word = std::vector<int>;
  using Poly = std::map<Word, Rat>;

  const Poly& expansion(int b) const;
  SparseVec decompose(Poly p) const;

  int num_gens_;
  int max_weight_;
  std::vector<Word> words_;                  // Lyndon words by (length, lex)
  std::map<Word, int> index_;
  std::vector<std::pair<int, int>> factor_;  // standard factorization (as basis ids)
  std::vector<std::string> names_;
  std::vector<int> gen_index_;

  mutable std::mutex mu_;
  mutable std::map<int, Poly> expansion_memo_;
  mutable std::map<std::pair<int, int>, SparseVec> bracket_memo_;
};

// Materializes the truncated free Lie algebra as an AlgebraSpec with explicit
// structure constants (all degrees zero).
AlgebraSpec free_nilpotent(const std::vector<std::string>& generator_names, int max_weight);

}  // namespace jbkit
