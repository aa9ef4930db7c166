#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cbr/interval.hpp"
#include "cbr/linear.hpp"
#include "cbr/simplex.hpp"

namespace cbr {

/// Convex polyhedron over named rational dimensions, kept purely in
/// constraint form (no generator representation). The single constraint
/// "-1 >= 0" canonically represents the empty polyhedron.
class Polyhedron {
 public:
  Polyhedron() = default;
  explicit Polyhedron(std::vector<Var> dims);
  Polyhedron(std::vector<Var> dims, std::vector<LinearConstraint> cs);

  static Polyhedron universe(std::vector<Var> dims) { return Polyhedron(std::move(dims)); }
  static Polyhedron bottom(std::vector<Var> dims);

  const std::vector<Var>& dims() const { return dims_; }
  const std::vector<LinearConstraint>& constraints() const { return cs_; }
  bool has_dim(const Var& v) const;

  /// Adds a constraint (deduplicated); variables of the constraint must be
  /// dimensions of the polyhedron.
  void add(const LinearConstraint& c);

  /// Syntactically the canonical empty polyhedron.
  bool is_bottom() const;

  /// Same dims with extra (unconstrained) dimensions added.
  Polyhedron extended(const std::vector<Var>& extra) const;
  /// Renames dimensions; target names must be fresh.
  Polyhedron renamed(const std::map<Var, Var>& renaming) const;

  bool contains_point(const std::map<Var, Int>& point) const;

  /// Sorted, canonical textual dump (one constraint per line).
  std::string dump() const;

 private:
  std::vector<Var> dims_;
  std::vector<LinearConstraint> cs_;
};

/// Constraint union; callers extend dims first. Emptiness detection is
/// deferred to poly_is_empty.
Polyhedron poly_intersect(const Polyhedron& p, const Polyhedron& q);

/// Decided by a phase-1 simplex over the rationals.
bool poly_is_empty(const Polyhedron& p);

/// True iff every rational point of q satisfies every constraint of p,
/// each constraint checked by optimizing its expression over q.
bool poly_includes(const Polyhedron& p, const Polyhedron& q);

bool poly_equal(const Polyhedron& p, const Polyhedron& q);

LpResult simplex_optimize(const Polyhedron& p, const LinearExpression& objective,
                          Sense sense);

/// Drops constraints entailed by the rest (one simplex call each); rewrites
/// detected-empty polyhedra to the canonical bottom form.
Polyhedron poly_minimize(const Polyhedron& p);

/// Existentially projects out the given dimensions (Gaussian elimination on
/// equalities, Fourier-Motzkin otherwise, with redundancy control).
/// When several equalities could eliminate a variable, ones whose remaining
/// variables avoid `subst_avoid` are preferred; this pins down the
/// constraint basis of projected images, which the direction-template join
/// is sensitive to.
Polyhedron poly_project_out(const Polyhedron& p, const std::vector<Var>& vars,
                            const std::set<Var>& subst_avoid = {});

struct JoinOptions {
  /// Above this dimension the join falls back to a bounding template
  /// (box + pairwise octagon facets) instead of the exact hull.
  std::size_t exact_dim_limit = 6;
};

/// Convex-hull join: exact (closed hull, computed by a lifted
/// Fourier-Motzkin projection) up to exact_dim_limit dimensions, a sound
/// template over-approximation above it. join(bottom, q) == q.
Polyhedron poly_join(const Polyhedron& p, const Polyhedron& q, JoinOptions opts = {});

/// Template join over the union of the arguments' constraint directions:
/// for each coefficient row of either argument, the facet row <= sup over
/// both. Coarser than poly_join but representation-faithful to how
/// abstract loop iterates are printed and compared; also much cheaper
/// (two LPs per direction, no projection).
Polyhedron poly_join_directions(const Polyhedron& p, const Polyhedron& q);

/// Standard constraint widening: keeps exactly the constraints of p that
/// are entailed by q. Result includes both arguments when p is included
/// in q.
Polyhedron poly_widen(const Polyhedron& p, const Polyhedron& q);

/// Box abstraction: two inequalities per finitely bounded side, none for
/// infinite sides; the empty box maps to the bottom polyhedron.
Polyhedron alpha_box(const IntervalBox& box);

/// Per-dimension [ceil(min), floor(max)] via simplex; unbounded directions
/// map to +-inf; empty when the polyhedron is empty or some rounded pair
/// crosses.
IntervalBox gamma_box(const Polyhedron& p);

/// Exactly the integer tuples inside p, found by enumerating gamma_box and
/// testing membership. Test oracle only; throws std::length_error when the
/// box is unbounded or exceeds the budget.
std::vector<std::map<Var, Int>> poly_integer_points(const Polyhedron& p,
                                                    const Int& budget);

}  // namespace cbr
