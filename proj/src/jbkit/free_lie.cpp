#include "jbkit/free_lie.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace jbkit {

namespace {

// Duval's algorithm: all Lyndon words over {0..k-1} of length <= n.
std::vector<std::vector<int>> lyndon_words(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> w{0};
  while (true) {
    out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return out;
}

}  // namespace

FreeLie::FreeLie(int num_gens, int max_weight, std::vector<std::string> gen_names)
    : num_gens_(num_gens), max_weight_(max_weight) {
  assert(num_gens >= 1 && max_weight >= 1);
  if (gen_names.empty())
    for (int i = 0; i < num_gens; ++i) gen_names.push_back("x" + std::to_string(i + 1));
  assert(static_cast<int>(gen_names.size()) == num_gens);

  words_ = lyndon_words(num_gens, max_weight);
  std::sort(words_.begin(), words_.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (int i = 0; i < dim(); ++i) index_[words_[i]] = i;

  gen_index_.assign(num_gens, -1);
  factor_.assign(dim(), {-1, -1});
  names_.resize(dim());
  for (int i = 0; i < dim(); ++i) {
    const Word& w = words_[i];
    if (w.size() == 1) {
      gen_index_[w[0]] = i;
      names_[i] = gen_names[w[0]];
      continue;
    }
    // standard factorization: v = lexicographically least proper suffix
    std::size_t best = 1;
    for (std::size_t s = 2; s < w.size(); ++s)
      if (std::lexicographical_compare(w.begin() + s, w.end(), w.begin() + best, w.end()))
        best = s;
    Word u(w.begin(), w.begin() + best), v(w.begin() + best, w.end());
    auto iu = index_.find(u), iv = index_.find(v);
    assert(iu != index_.end() && iv != index_.end());
    factor_[i] = {iu->second, iv->second};
  }
  for (int i = 0; i < dim(); ++i)
    if (words_[i].size() >= 2)
      names_[i] = "[" + names_[factor_[i].first] + "," + names_[factor_[i].second] + "]";
}

const FreeLie::Poly& FreeLie::expansion(int b) const {
  auto it = expansion_memo_.find(b);
  if (it != expansion_memo_.end()) return it->second;
  Poly p;
  if (words_[b].size() == 1) {
    p[words_[b]] = 1;
  } else {
    const Poly& pu = expansion(factor_[b].first);
    const Poly& pv = expansion(factor_[b].second);
    auto mul = [](const Poly& x, const Poly& y, int sign, Poly& acc) {
      for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) {
          Word w = wx;
          w.insert(w.end(), wy.begin(), wy.end());
          Rat& slot = acc[w];
          slot += Rat(sign) * cx * cy;
          if (slot == 0) acc.erase(w);
        }
    };
    mul(pu, pv, 1, p);
    mul(pv, pu, -1, p);
  }
  return expansion_memo_.emplace(b, std::move(p)).first->second;
}

SparseVec FreeLie::decompose(Poly p) const {
  SparseVec out;
  while (!p.empty()) {
    // leading (lexicographically least) word must be Lyndon
    const Word w = p.begin()->first;
    const Rat c = p.begin()->second;
    auto it = index_.find(w);
    if (it == index_.end())
      throw std::logic_error("free_lie: polynomial is not a Lie element");
    const Poly& e = expansion(it->second);
    for (const auto& [we, ce] : e) {
      Rat& slot = p[we];
      slot -= c * ce;
      if (slot == 0) p.erase(we);
    }
    out.add_term(it->second, c);
  }
  return out;
}

SparseVec FreeLie::bracket(int a, int b) const {
  if (a == b) return {};
  const bool flip = a > b;
  if (flip) std::swap(a, b);
  SparseVec r;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bracket_memo_.find({a, b});
    if (it != bracket_memo_.end()) {
      r = it->second;
    } else {
      if (weight(a) + weight(b) <= max_weight_) {
        Poly p;
        const Poly& pa = expansion(a);
        const Poly& pb = expansion(b);
        auto mul = [](const Poly& x, const Poly& y, int sign, Poly& acc) {
          for (const auto& [wx, cx] : x)
            for (const auto& [wy, cy] : y) {
              Word w = wx;
              w.insert(w.end(), wy.begin(), wy.end());
              Rat& slot = acc[w];
              slot += Rat(sign) * cx * cy;
              if (slot == 0) acc.erase(w);
            }
        };
        mul(pa, pb, 1, p);
        mul(pb, pa, -1, p);
        r = decompose(std::move(p));
      }
      bracket_memo_.emplace(std::make_pair(a, b), r);
    }
  }
  if (flip) r *= Rat(-1);
  return r;
}

SparseVec FreeLie::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [a, ca] : x.c)
    for (const auto& [b, cb] : y.c) {
      SparseVec t = bracket(a, b);
      t *= ca * cb;
      out += t;
    }
  return out;
}

SparseVec FreeLie::ladder(const SparseVec& x, const SparseVec& b, int k) const {
  SparseVec cur = x;
  for (int i = 0; i < k; ++i) cur = bracket(cur, b);
  return cur;
}

std::string FreeLie::show(const SparseVec& v) const {
  if (v.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.c) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rat_str(c) << "*";
    os << names_[i];
  }
  return os.str();
}

AlgebraSpec free_nilpotent(const std::vector<std::string>& generator_names, int max_weight) {
  FreeLie fl(static_cast<int>(generator_names.size()), max_weight,
             generator_names);
  AlgebraSpec a;
  a.name = "free_nilpotent";
  for (int i = 0; i < fl.dim(); ++i) a.basis.push_back({fl.name(i), 0});
  for (int i = 0; i < fl.dim(); ++i)
    for (int j = i + 1; j < fl.dim(); ++j) {
      SparseVec v = fl.bracket(i, j);
      if (!v.zero()) a.set_bracket(i, j, v);
    }
  return a;
}

}  // namespace jbkit
