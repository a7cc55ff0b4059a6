#include "jbkit/operad/tree.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "jbkit/combinatorics.hpp"

namespace jbkit::operad {

std::string Gen::str() const {
  switch (kind) {
    case Kind::G: return "G" + std::to_string(m);
    case Kind::F: return "F" + std::to_string(m) + "," + std::to_string(n);
    case Kind::H: return "H" + std::to_string(n);
    default: return "P" + std::to_string(m);
  }
}

namespace {

void node_str(const Tree& t, int idx, std::ostringstream& os) {
  const Node& nd = t.nodes[idx];
  os << nd.gen.str() << "(";
  bool first = true;
  auto emit = [&](int c, char tag) {
    if (!first) os << ",";
    first = false;
    if (c < 0)
      os << tag << ~c;
    else
      node_str(t, c, os);
  };
  for (int c : nd.str) emit(c, 's');
  if (!nd.wav.empty()) {
    os << (nd.str.empty() ? "" : "|");
    first = true;
    for (int c : nd.wav) emit(c, 'w');
  }
  os << ")";
}

}  // namespace

std::string Tree::str() const {
  if (nodes.empty()) return "()";
  std::ostringstream os;
  node_str(*this, 0, os);
  return os.str();
}

std::string TreeSum::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rat_str(c) << "*";
    os << t.str();
  }
  return os.str();
}

namespace {

struct CanonCtx {
  const RawTree* raw;
  std::vector<int> min_leaf;  // per raw node
  int sign = 1;
  std::vector<std::vector<int>> sorted_str, sorted_wav;

  int child_min_leaf(int c) const { return c < 0 ? ~c : min_leaf[c]; }

  void sort_children(int u) {
    auto& rn = raw->nodes[u];
    auto sort_class = [&](const std::vector<int>& cs, bool skew) {
      std::vector<int> order(cs.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return child_min_leaf(cs[a]) < child_min_leaf(cs[b]);
      });
      if (skew) sign *= perm_sign(order);
      std::vector<int> out;
      out.reserve(cs.size());
      for (int o : order) out.push_back(cs[o]);
      return out;
    };
    // straight legs are skew on every schema; wavy legs are skew on the
    // Lie-type corolla H and symmetric on the morphism corolla F.
    sorted_str[u] = sort_class(rn.str, true);
    sorted_wav[u] = sort_class(rn.wav, rn.gen.kind == Gen::Kind::H);
  }

  void compute(int u) {
    const auto& rn = raw->nodes[u];
    int ml = INT32_MAX;
    for (int c : rn.str) {
      if (c >= 0) compute(c);
      ml = std::min(ml, child_min_leaf(c));
    }
    for (int c : rn.wav) {
      if (c >= 0) compute(c);
      ml = std::min(ml, child_min_leaf(c));
    }
    min_leaf[u] = ml;
    sort_children(u);
  }
};

}  // namespace

Canonical canonicalize(const RawTree& raw) {
  CanonCtx ctx;
  ctx.raw = &raw;
  ctx.min_leaf.assign(raw.nodes.size(), INT32_MAX);
  ctx.sorted_str.resize(raw.nodes.size());
  ctx.sorted_wav.resize(raw.nodes.size());
  ctx.compute(raw.root);

  // DFS with sorted children; collect visit order.
  std::vector<int> seq;
  seq.reserve(raw.nodes.size());
  std::function<void(int)> dfs = [&](int u) {
    seq.push_back(u);
    for (int c : ctx.sorted_str[u])
      if (c >= 0) dfs(c);
    for (int c : ctx.sorted_wav[u])
      if (c >= 0) dfs(c);
  };
  dfs(raw.root);

  // Koszul sign of rearranging the intended tensor order into DFS order.
  std::vector<int> by_orient(seq.size());
  std::iota(by_orient.begin(), by_orient.end(), 0);
  std::vector<int> seq_ids(seq.begin(), seq.end());
  std::stable_sort(seq_ids.begin(), seq_ids.end(), [&](int a, int b) {
    return raw.nodes[a].orient < raw.nodes[b].orient;
  });
  std::vector<int> rank(raw.nodes.size());
  for (std::size_t i = 0; i < seq_ids.size(); ++i) rank[seq_ids[i]] = static_cast<int>(i);
  std::vector<int> perm(seq.size()), degs(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) perm[i] = rank[seq[i]];
  for (std::size_t i = 0; i < seq.size(); ++i)
    degs[i] = raw.nodes[seq_ids[i]].gen.degree();
  int sign = ctx.sign * koszul_sign(perm, degs);

  Canonical out;
  out.sign = sign;
  std::vector<int> new_id(raw.nodes.size(), -1);
  for (std::size_t i = 0; i < seq.size(); ++i) new_id[seq[i]] = static_cast<int>(i);
  out.tree.nodes.resize(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const int u = seq[i];
    Node nd;
    nd.gen = raw.nodes[u].gen;
    for (int c : ctx.sorted_str[u]) nd.str.push_back(c < 0 ? c : new_id[c]);
    for (int c : ctx.sorted_wav[u]) nd.wav.push_back(c < 0 ? c : new_id[c]);
    out.tree.nodes[i] = std::move(nd);
  }
  return out;
}

Tree gen_tree(Gen g) {
  RawTree raw;
  int r = raw.add(g, 0);
  for (int i = 0; i < g.straight_in(); ++i) raw.nodes[r].str.push_back(RawTree::leaf(i));
  for (int i = 0; i < g.wavy_in(); ++i)
    raw.nodes[r].wav.push_back(RawTree::leaf(g.straight_in() + i));
  Canonical cn = canonicalize(raw);
  assert(cn.sign == 1);
  return cn.tree;
}

TreeSum replace_vertex(const Tree& host, int v, const TreeSum& replacement) {
  TreeSum out;
  const Node& vict = host.nodes[v];
  const int ns = static_cast<int>(vict.str.size());
  for (const auto& [rep, coeff] : replacement.terms) {
    const int r = static_cast<int>(rep.nodes.size());
    RawTree raw;
    raw.nodes.reserve(host.nodes.size() + r - 1);
    // host nodes keep their positions; the replacement block sits where v was
    std::vector<int> host_id(host.nodes.size(), -1);
    for (int u = 0; u < static_cast<int>(host.nodes.size()); ++u) {
      if (u == v) continue;
      int orient = u < v ? u : u + r - 1;
      host_id[u] = raw.add(host.nodes[u].gen, orient);
    }
    std::vector<int> rep_id(rep.nodes.size(), -1);
    for (int u = 0; u < r; ++u) rep_id[u] = raw.add(rep.nodes[u].gen, v + u);

    auto host_child = [&](int c) { return c < 0 ? c : (c == v ? rep_id[0] : host_id[c]); };
    for (int u = 0; u < static_cast<int>(host.nodes.size()); ++u) {
      if (u == v) continue;
      for (int c : host.nodes[u].str) raw.nodes[host_id[u]].str.push_back(host_child(c));
      for (int c : host.nodes[u].wav) raw.nodes[host_id[u]].wav.push_back(host_child(c));
    }
    // replacement leaves 0..m-1 are v's straight slots, m.. the wavy ones
    auto rep_child = [&](int c) {
      if (c >= 0) return rep_id[c];
      int slot = ~c;
      return slot < ns ? vict.str[slot] : vict.wav[slot - ns];
    };
    // careful: v's slot children referencing other host nodes were remapped
    auto rep_child_full = [&](int c) {
      int rc = rep_child(c);
      if (c >= 0) return rc;                      // internal node of the block
      if (rc < 0) return rc;                      // leaf of the host
      return host_id[rc];                         // host subtree re-attached
    };
    for (int u = 0; u < r; ++u) {
      for (int c : rep.nodes[u].str) raw.nodes[rep_id[u]].str.push_back(rep_child_full(c));
      for (int c : rep.nodes[u].wav) raw.nodes[rep_id[u]].wav.push_back(rep_child_full(c));
    }
    raw.root = v == 0 ? rep_id[0] : host_id[0];
    out.add_raw(raw, coeff);
  }
  return out;
}

TreeSum compose_vertex(const TreeSum& images, const std::vector<ChildVal>& children) {
  TreeSum out;
  for (const auto& [img, c_img] : images.terms) {
    // product over tree choices for every evaluated child
    std::vector<int> slots;  // slots carrying a TreeSum
    for (std::size_t s = 0; s < children.size(); ++s)
      if (std::holds_alternative<TreeSum>(children[s])) slots.push_back(static_cast<int>(s));

    std::vector<std::map<Tree, Rat>::const_iterator> pick;
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t k, Rat coeff) {
      if (k == slots.size()) {
        RawTree raw;
        std::vector<int> img_id(img.nodes.size());
        for (std::size_t u = 0; u < img.nodes.size(); ++u)
          img_id[u] = raw.add(img.nodes[u].gen, static_cast<int>(u));
        int next_orient = static_cast<int>(img.nodes.size());
        // per slot: root id of the grafted block (or leaf relabel)
        std::vector<int> graft_root(children.size(), INT32_MIN);
        for (std::size_t i = 0; i < slots.size(); ++i) {
          const Tree& sub = pick[i]->first;
          std::vector<int> sub_id(sub.nodes.size());
          for (std::size_t u = 0; u < sub.nodes.size(); ++u)
            sub_id[u] = raw.add(sub.nodes[u].gen, next_orient++);
          for (std::size_t u = 0; u < sub.nodes.size(); ++u) {
            for (int c : sub.nodes[u].str)
              raw.nodes[sub_id[u]].str.push_back(c < 0 ? c : sub_id[c]);
            for (int c : sub.nodes[u].wav)
              raw.nodes[sub_id[u]].wav.push_back(c < 0 ? c : sub_id[c]);
          }
          graft_root[slots[i]] = sub_id[0];
        }
        auto map_child = [&](int c) {
          if (c >= 0) return img_id[c];
          int slot = ~c;
          if (std::holds_alternative<int>(children[slot]))
            return RawTree::leaf(std::get<int>(children[slot]));
          return graft_root[slot];
        };
        for (std::size_t u = 0; u < img.nodes.size(); ++u) {
          for (int c : img.nodes[u].str) raw.nodes[img_id[u]].str.push_back(map_child(c));
          for (int c : img.nodes[u].wav) raw.nodes[img_id[u]].wav.push_back(map_child(c));
        }
        raw.root = img_id[0];
        out.add_raw(raw, coeff);
        return;
      }
      const TreeSum& ts = std::get<TreeSum>(children[slots[k]]);
      for (auto it = ts.terms.begin(); it != ts.terms.end(); ++it) {
        pick.push_back(it);
        rec(k + 1, coeff * it->second);
        pick.pop_back();
      }
    };
    rec(0, c_img);
  }
  return out;
}

namespace {

TreeSum eval_subtree(const Tree& host, int u,
                     const std::function<const TreeSum&(const Gen&)>& image) {
  const Node& nd = host.nodes[u];
  const TreeSum& img = image(nd.gen);
  if (img.zero()) return {};
  std::vector<ChildVal> childs;
  childs.reserve(nd.str.size() + nd.wav.size());
  bool dead = false;
  auto handle = [&](int c) {
    if (dead) return;
    if (c < 0) {
      childs.emplace_back(~c);
    } else {
      TreeSum sub = eval_subtree(host, c, image);
      if (sub.zero()) dead = true;
      childs.emplace_back(std::move(sub));
    }
  };
  for (int c : nd.str) handle(c);
  for (int c : nd.wav) handle(c);
  if (dead) return {};
  return compose_vertex(img, childs);
}

}  // namespace

TreeSum apply_morphism(const TreeSum& s,
                       const std::function<const TreeSum&(const Gen&)>& image) {
  TreeSum out;
  for (const auto& [t, c] : s.terms) {
    TreeSum img = eval_subtree(t, 0, image);
    img *= c;
    out += img;
  }
  return out;
}

}  // namespace jbkit::operad
