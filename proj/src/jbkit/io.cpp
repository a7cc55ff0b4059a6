#include "jbkit/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jbkit {

namespace {

using nlohmann::json;

Rat coeff_of(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) {
    auto r = parse_rat(j.get<std::string>());
    if (!r) throw IoError("bad coefficient '" + j.get<std::string>() + "'");
    return *r;
  }
  throw IoError("coefficient must be a quoted rational");
}

int basis_index(const AlgebraSpec& a, const json& j, const char* what) {
  if (!j.is_string()) throw IoError(std::string(what) + ": basis reference must be a name");
  auto idx = a.index_of(j.get<std::string>());
  if (!idx) throw IoError(std::string(what) + ": unknown basis name '" + j.get<std::string>() + "'");
  return *idx;
}

AlgebraSpec algebra_from_json(const json& j) {
  if (!j.is_object()) throw IoError("algebra: expected an object");
  AlgebraSpec a;
  a.name = j.value("name", "");
  if (!j.contains("basis") || !j.at("basis").is_array())
    throw IoError("algebra: missing basis array");
  for (const auto& b : j.at("basis")) {
    if (!b.contains("name")) throw IoError("algebra: basis element without name");
    a.basis.push_back({b.at("name").get<std::string>(), b.value("degree", 0)});
  }
  for (int i = 0; i < a.dim(); ++i)
    for (int k = i + 1; k < a.dim(); ++k)
      if (a.basis[i].name == a.basis[k].name) throw IoError("algebra: duplicate basis name");

  if (j.contains("brackets")) {
    // accumulate per ordered pair, then install with consistency checks
    std::map<std::pair<int, int>, SparseVec> acc;
    for (const auto& e : j.at("brackets")) {
      if (!e.is_array() || e.size() != 4) throw IoError("algebra: bracket entry must be [x,y,z,c]");
      int x = basis_index(a, e[0], "bracket");
      int y = basis_index(a, e[1], "bracket");
      int z = basis_index(a, e[2], "bracket");
      acc[{x, y}].add_term(z, coeff_of(e[3]));
    }
    for (const auto& [key, v] : acc)
      if (!a.set_bracket(key.first, key.second, v))
        throw IoError("algebra '" + a.name + "': inconsistent bracket entries for (" +
                      a.basis[key.first].name + "," + a.basis[key.second].name + ")");
  }
  if (j.contains("differential")) {
    for (const auto& e : j.at("differential")) {
      if (!e.is_array() || e.size() != 3)
        throw IoError("algebra: differential entry must be [x,y,c]");
      int x = basis_index(a, e[0], "differential");
      int y = basis_index(a, e[1], "differential");
      a.differential[x].add_term(y, coeff_of(e[2]));
      if (a.differential[x].zero()) a.differential.erase(x);
    }
  }
  if (j.contains("higher_brackets")) {
    for (const auto& [key, entries] : j.at("higher_brackets").items()) {
      int arity = std::stoi(key);
      if (arity < 3) throw IoError("algebra: higher bracket arity must be >= 3");
      for (const auto& e : entries) {
        if (!e.is_array() || e.size() != static_cast<std::size_t>(arity) + 2)
          throw IoError("algebra: malformed higher bracket entry");
        std::vector<int> tuple;
        for (int i = 0; i < arity; ++i) tuple.push_back(basis_index(a, e[i], "higher"));
        int z = basis_index(a, e[arity], "higher");
        a.higher[arity].add(tuple, SparseVec::unit(z, coeff_of(e[arity + 1])), a.degrees());
      }
    }
  }
  return a;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("malformed JSON");
  return j;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraSpec parse_algebra(const std::string& text) { return algebra_from_json(parse_text(text)); }

AlgebraSpec load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

LiePair parse_pair(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("g") || !j.contains("h"))
    throw IoError("pair: expected an object with g and h");
  LiePair p;
  p.g = algebra_from_json(j.at("g"));
  p.h = algebra_from_json(j.at("h"));
  if (j.contains("phi")) {
    SkewTable c1;
    for (const auto& e : j.at("phi")) {
      if (!e.is_array() || e.size() != 3) throw IoError("pair: phi entry must be [a,b,c]");
      int a = basis_index(p.g, e[0], "phi");
      int b = basis_index(p.h, e[1], "phi");
      c1.add({a}, SparseVec::unit(b, coeff_of(e[2])), p.g.degrees());
    }
    if (!c1.empty()) p.phi.components.emplace(1, std::move(c1));
  }
  if (j.contains("phi_higher")) {
    for (const auto& [key, entries] : j.at("phi_higher").items()) {
      int m = std::stoi(key);
      if (m < 2) throw IoError("pair: phi_higher arity must be >= 2");
      SkewTable cm;
      for (const auto& e : entries) {
        if (!e.is_array() || e.size() != static_cast<std::size_t>(m) + 2)
          throw IoError("pair: malformed phi_higher entry");
        std::vector<int> tuple;
        for (int i = 0; i < m; ++i) tuple.push_back(basis_index(p.g, e[i], "phi_higher"));
        int b = basis_index(p.h, e[m], "phi_higher");
        cm.add(tuple, SparseVec::unit(b, coeff_of(e[m + 1])), p.g.degrees());
      }
      if (!cm.empty()) p.phi.components.emplace(m, std::move(cm));
    }
  }
  return p;
}

LiePair load_pair(const std::string& path) { return parse_pair(read_file(path)); }

AtomData parse_atom(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("g") || !j.contains("h"))
    throw IoError("atom: expected an object with g and h");
  AtomData d;
  d.g = algebra_from_json(j.at("g"));
  d.h_space = algebra_from_json(j.at("h"));
  if (j.contains("action")) {
    for (const auto& e : j.at("action")) {
      if (!e.is_array() || e.size() != 4) throw IoError("atom: action entry must be [a,m,m2,c]");
      int a = basis_index(d.g, e[0], "action");
      int m = basis_index(d.h_space, e[1], "action");
      int m2 = basis_index(d.h_space, e[2], "action");
      d.action[{a, m}].add_term(m2, coeff_of(e[3]));
    }
  }
  if (j.contains("phi")) {
    for (const auto& e : j.at("phi")) {
      if (!e.is_array() || e.size() != 3) throw IoError("atom: phi entry must be [a,m,c]");
      int a = basis_index(d.g, e[0], "phi");
      int m = basis_index(d.h_space, e[1], "phi");
      d.phi[a].add_term(m, coeff_of(e[2]));
    }
  }
  return d;
}

AtomData load_atom(const std::string& path) { return parse_atom(read_file(path)); }

std::string emit_algebra(const AlgebraSpec& a) {
  json out;
  out["name"] = a.name;
  json basis = json::array();
  for (const auto& b : a.basis) basis.push_back({{"name", b.name}, {"degree", b.degree}});
  out["basis"] = basis;
  if (!a.bracket2.empty()) {
    json rows = json::array();
    for (const auto& [key, v] : a.bracket2)
      for (const auto& [z, c] : v.c)
        rows.push_back({a.basis[key.first].name, a.basis[key.second].name, a.basis[z].name,
                        rat_str(c)});
    out["brackets"] = rows;
  }
  if (!a.differential.empty()) {
    json rows = json::array();
    for (const auto& [x, v] : a.differential)
      for (const auto& [y, c] : v.c) rows.push_back({a.basis[x].name, a.basis[y].name, rat_str(c)});
    out["differential"] = rows;
  }
  if (!a.higher.empty()) {
    json rows;
    for (const auto& [arity, table] : a.higher) {
      json entries = json::array();
      for (const auto& [key, v] : table.t)
        for (const auto& [z, c] : v.c) {
          json row = json::array();
          for (int i : key) row.push_back(a.basis[i].name);
          row.push_back(a.basis[z].name);
          row.push_back(rat_str(c));
          entries.push_back(row);
        }
      rows[std::to_string(arity)] = entries;
    }
    out["higher_brackets"] = rows;
  }
  return out.dump(2);
}

std::string emit_taylor_tables(const LiePair& pair, const std::map<int, TaylorField>& fields,
                               int order) {
  json out;
  out["order"] = order;
  json action = json::array();
  for (const auto& [a, f] : fields) {
    json fe;
    fe["a"] = pair.g.basis[a].name;
    json comps = json::array();
    for (int n = 0; n <= order && n <= f.truncation_order; ++n) {
      for (const auto& [key, v] : f.comp[n].t) {
        json entry;
        entry["n"] = n;
        json inputs = json::array();
        for (int i : key) inputs.push_back(pair.h.basis[i].name);
        entry["inputs"] = inputs;
        json value = json::array();
        for (const auto& [k, c] : v.c) value.push_back({pair.h.basis[k].name, rat_str(c)});
        entry["value"] = value;
        comps.push_back(entry);
      }
    }
    fe["components"] = comps;
    action.push_back(fe);
  }
  out["action"] = action;
  return out.dump(2);
}

}  // namespace jbkit
