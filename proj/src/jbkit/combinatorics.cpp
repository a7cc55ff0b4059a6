#include "jbkit/combinatorics.hpp"

#include <algorithm>
#include <cassert>

namespace jbkit {

int perm_sign(std::span<const int> perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

int koszul_sign(std::span<const int> perm, std::span<const int> degrees) {
  assert(perm.size() == degrees.size());
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && (degrees[perm[i]] & 1) && (degrees[perm[j]] & 1))
        s = -s;
  return s;
}

PermSigns perm_and_koszul(std::span<const int> perm, std::span<const int> degrees) {
  PermSigns out;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) {
        out.perm = -out.perm;
        if ((degrees[perm[i]] & 1) && (degrees[perm[j]] & 1)) out.koszul = -out.koszul;
      }
  return out;
}

namespace {

void splittings_rec(int n, std::span<const int> min_sizes, std::size_t part,
                    std::vector<int>& remaining, SignedSplitting& cur,
                    std::vector<SignedSplitting>& out) {
  if (part + 1 == min_sizes.size()) {
    if (static_cast<int>(remaining.size()) < min_sizes[part]) return;
    cur.parts.push_back(remaining);
    std::vector<int> concat;
    for (const auto& p : cur.parts) concat.insert(concat.end(), p.begin(), p.end());
    cur.sign = perm_sign(concat);
    out.push_back(cur);
    cur.parts.pop_back();
    return;
  }
  int later_min = 0;
  for (std::size_t j = part + 1; j < min_sizes.size(); ++j) later_min += min_sizes[j];
  int max_take = static_cast<int>(remaining.size()) - later_min;
  for (int take = min_sizes[part]; take <= max_take; ++take) {
    // choose `take` elements of `remaining`, lexicographically
    std::vector<int> pick(take);
    std::function<void(int, int)> choose = [&](int start, int depth) {
      if (depth == take) {
        std::vector<int> rest;
        std::size_t k = 0;
        for (int v : remaining) {
          if (k < pick.size() && pick[k] == v)
            ++k;
          else
            rest.push_back(v);
        }
        cur.parts.push_back(pick);
        std::swap(remaining, rest);
        splittings_rec(n, min_sizes, part + 1, remaining, cur, out);
        std::swap(remaining, rest);
        cur.parts.pop_back();
        return;
      }
      for (int i = start; i <= static_cast<int>(remaining.size()) - (take - depth); ++i) {
        pick[depth] = remaining[i];
        choose(i + 1, depth + 1);
      }
    };
    if (take == 0) {
      cur.parts.emplace_back();
      splittings_rec(n, min_sizes, part + 1, remaining, cur, out);
      cur.parts.pop_back();
    } else {
      choose(0, 0);
    }
  }
}

}  // namespace

std::vector<SignedSplitting> splittings(int n, std::span<const int> min_sizes) {
  std::vector<SignedSplitting> out;
  if (min_sizes.empty()) {
    if (n == 0) out.push_back({{}, 1});
    return out;
  }
  std::vector<int> everything(n);
  for (int i = 0; i < n; ++i) everything[i] = i;
  SignedSplitting cur;
  splittings_rec(n, min_sizes, 0, everything, cur, out);
  return out;
}

std::vector<SignedSplitting> set_partitions(int n, int min_parts) {
  // Grow partitions element by element: element i joins an existing block or
  // opens a new one. Blocks are automatically ordered by minimal element.
  std::vector<SignedSplitting> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (static_cast<int>(blocks.size()) >= min_parts) {
        SignedSplitting s;
        s.parts = blocks;
        std::vector<int> concat;
        for (const auto& p : blocks) concat.insert(concat.end(), p.begin(), p.end());
        s.sign = perm_sign(concat);
        out.push_back(std::move(s));
      }
      return;
    }
    const std::size_t existing = blocks.size();
    for (std::size_t j = 0; j < existing; ++j) {
      blocks[j].push_back(i);
      rec(i + 1);
      blocks[j].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  out.reserve(std::size_t(1) << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

void for_each_sorted_tuple(int dim, int length,
                           const std::function<bool(int)>& allow_repeat,
                           const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> t(length);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == length) {
      fn(t);
      return;
    }
    for (int v = lo; v < dim; ++v) {
      if (pos > 0 && t[pos - 1] == v && !allow_repeat(v)) continue;
      t[pos] = v;
      rec(pos + 1, v);
    }
  };
  if (length == 0)
    fn(t);
  else
    rec(0, 0);
}

}  // namespace jbkit
