#pragma once

#include "jbkit/algebra_spec.hpp"

#include <map>

namespace jbkit {

// A formal vector field on the space underlying `h`, given by its Taylor
// components F_n : Sym^n(h) -> h, n <= truncation_order. Components are
// graded-symmetric tables on sorted basis tuples; entries above the
// truncation order are unknown, not zero. `field_degree` is the common
// degree of all components as linear maps.
struct TaylorField {
  int truncation_order = 0;
  int field_degree = 0;
  std::vector<SymTable> comp;  // comp[n], 0 <= n <= truncation_order

  static TaylorField zero(int order, int degree = 0) {
    TaylorField f;
    f.truncation_order = order;
    f.field_degree = degree;
    f.comp.resize(order + 1);
    return f;
  }

  SparseVec eval(int n, std::span<const int> tuple, std::span<const int> h_degrees) const {
    return comp[n].eval(tuple, h_degrees);
  }
  void add_entry(int n, std::vector<int> tuple, const SparseVec& v,
                 std::span<const int> h_degrees) {
    comp[n].add(std::move(tuple), v, h_degrees);
  }

  TaylorField& operator+=(const TaylorField& o);
  TaylorField& operator*=(const Rat& s);
  bool same_components(const TaylorField& o, int up_to_order) const;
};

// Lie bracket of formal vector fields, computed to the requested order:
//   [X,Y]_n(b_1..b_n) = sum_{S subset [n]} eps_S * Y(X(b_S), b_{S^c})
//                       - (-1)^{|X||Y|} (X <-> Y),
// with eps_S the Koszul sign of unshuffling the inputs. On a degree-0 h with
// linear fields x -> Ax, x -> Bx this yields the classical X dY - Y dX, i.e.
// F_1 = BA - AB.
TaylorField vf_bracket(const TaylorField& x, const TaylorField& y, int order,
                       const AlgebraSpec& h);

// Checks that a -> fields[a] is a morphism of Lie algebras from g into the
// formal vector fields on h, comparing Taylor components up to `order`.
ValidationReport verify_field_morphism(const std::map<int, TaylorField>& fields,
                                       const AlgebraSpec& g, const AlgebraSpec& h,
                                       int order, Exec exec = Exec::serial);

}  // namespace jbkit
