#pragma once

#include <set>
#include <vector>

#include "cbr/constraint.hpp"
#include "cbr/interval.hpp"

namespace cbr {

/// Finite set of integer tuples over an ordered variable list: an element
/// of the concrete lattice. Tuples are kept sorted and deduplicated so
/// lattice operations and dumps are deterministic.
struct TupleSet {
  std::vector<Var> vars;
  std::set<std::vector<Int>> tuples;

  bool arity_ok() const;
  Valuation valuation(const std::vector<Int>& tuple) const;
  std::string str() const;
};

/// Per-variable finite sets of integers: the arc-domain element.
struct ArcElement {
  std::map<Var, std::set<Int>> sets;

  bool any_empty() const;
  /// All components emptied (the image of the empty concrete element).
  ArcElement emptied() const;
  std::string str() const;
};

inline constexpr long long kDefaultTupleCap = 1'000'000;

/// Componentwise projection of a tuple set.
ArcElement alpha_arc(const TupleSet& s);

/// Cartesian product of the components. Throws std::length_error when the
/// product exceeds the cap (never truncates silently).
TupleSet gamma_arc(const ArcElement& a, const Int& cap = Int(kDefaultTupleCap));

/// Componentwise interval hull [min(S), max(S)].
BoundElement alpha_inter(const ArcElement& a);

/// Componentwise integer-set expansion of finite intervals. Throws
/// std::length_error on an infinite interval or when a component exceeds
/// the cap.
ArcElement gamma_inter(const BoundElement& b, const Int& cap = Int(kDefaultTupleCap));

/// Full integer grid of a finite box (the top concrete element for the
/// box); capped like gamma_arc.
TupleSet tuple_set_from_box(const BoundElement& b, const Int& cap = Int(kDefaultTupleCap));

// Lattice operations. Operands must range over identical variable lists;
// mismatches throw std::invalid_argument.
bool concrete_leq(const TupleSet& a, const TupleSet& b);
TupleSet concrete_join(const TupleSet& a, const TupleSet& b);
TupleSet concrete_meet(const TupleSet& a, const TupleSet& b);

bool arc_leq(const ArcElement& a, const ArcElement& b);
ArcElement arc_join(const ArcElement& a, const ArcElement& b);
ArcElement arc_meet(const ArcElement& a, const ArcElement& b);

bool bound_leq(const BoundElement& a, const BoundElement& b);
BoundElement bound_join(const BoundElement& a, const BoundElement& b);
BoundElement bound_meet(const BoundElement& a, const BoundElement& b);

}  // namespace cbr
