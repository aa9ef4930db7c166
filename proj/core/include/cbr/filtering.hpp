#pragma once

#include <vector>

#include "cbr/concrete.hpp"
#include "cbr/constraint.hpp"

namespace cbr {

/// Keeps exactly the tuples satisfying c. The tuple set must range over
/// (at least) vars(c).
TupleSet exact_filter(const Constraint& c, const TupleSet& s);

/// Greatest fixpoint of the composed exact filters: the exact solution set
/// of the system restricted to d.
TupleSet solve_exact(const std::vector<Constraint>& cs, const TupleSet& d);

/// Domain-consistency filter. Contractually equal to
/// alpha_arc . exact_filter . gamma_arc, implemented by per-value support
/// checking against the original components.
ArcElement domain_filter(const Constraint& c, const ArcElement& a,
                         const Int& cap = Int(kDefaultTupleCap));

struct BoundFilterOptions {
  /// Below this enumeration volume the filter computes the exact
  /// one-shot projection by witness search; above it, shape-specific
  /// interval rules apply.
  Int exact_cap = 4096;
};

/// Bound-consistency filter over interval boxes. On small finite boxes this
/// is exactly alpha_inter . domain_filter . gamma_inter; on wide or
/// infinite boxes the interval transfer functions for comparisons, affine
/// constraints and binary products are used (sound, possibly wider).
BoundElement bound_filter(const Constraint& c, const BoundElement& b,
                          const BoundFilterOptions& opts = {});

/// Chaotic iteration of domain_filter over all constraints until stable.
ArcElement domain_fixpoint(const std::vector<Constraint>& cs, ArcElement a,
                           const Int& cap = Int(kDefaultTupleCap));

/// Chaotic iteration of bound_filter over all constraints until stable.
BoundElement bound_fixpoint(const std::vector<Constraint>& cs, BoundElement b,
                            const BoundFilterOptions& opts = {});

}  // namespace cbr
