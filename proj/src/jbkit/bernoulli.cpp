#include "jbkit/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace jbkit {

namespace {
std::mutex table_mutex;
std::vector<Rat> table;  // table[n] = B_n
}  // namespace

Rat bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(table_mutex);
  if (table.empty()) table.push_back(Rat(1));
  while (table.size() <= n) {
    unsigned m = static_cast<unsigned>(table.size());
    // sum_{j=0}^{m} C(m+1,j) B_j = 0  solved for B_m
    Rat acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * table[j];
    table.push_back(-acc / Rat(binomial(m + 1, m)));
  }
  return table[n];
}

Rat bernoulli_over_factorial(unsigned n) {
  return bernoulli(n) / Rat(factorial(n));
}

}  // namespace jbkit
