#pragma once

#include "jbkit/rational.hpp"

#include <map>

namespace jbkit {

// Sparse vector over an integer-indexed basis; zero entries are pruned as
// soon as they appear.
struct SparseVec {
  std::map<int, Rat> c;

  SparseVec() = default;
  static SparseVec unit(int i, Rat v = Rat(1)) {
    SparseVec s;
    if (v != 0) s.c.emplace(i, std::move(v));
    return s;
  }

  bool zero() const { return c.empty(); }

  void add_term(int i, const Rat& v) {
    if (v == 0) return;
    auto it = c.find(i);
    if (it == c.end()) {
      c.emplace(i, v);
    } else {
      it->second += v;
      if (it->second == 0) c.erase(it);
    }
  }

  SparseVec& operator+=(const SparseVec& o) {
    for (const auto& [i, v] : o.c) add_term(i, v);
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    for (const auto& [i, v] : o.c) add_term(i, -v);
    return *this;
  }
  SparseVec& operator*=(const Rat& s) {
    if (s == 0) {
      c.clear();
      return *this;
    }
    for (auto& [i, v] : c) v *= s;
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const Rat& s, SparseVec a) { return a *= s; }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.c == b.c; }
};

}  // namespace jbkit
