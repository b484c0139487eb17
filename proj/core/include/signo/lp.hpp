// Exact rational linear programming: feasibility of strict homogeneous systems
// and convex-position tests. Simplex with Bland's rule throughout.
#pragma once

#include <optional>
#include <vector>

#include "signo/rational.hpp"

namespace signo {

enum class ConstraintKind { StrictPos, Eq };

struct LinConstraint {
  QVec coeffs;
  ConstraintKind kind;
};

// Feasibility of { <c,x> > 0 for StrictPos rows, <c,x> = 0 for Eq rows }.
// By homogeneity the strict system is satisfiable iff <c,x> >= 1 is, and the
// returned witness meets that stronger form exactly. nullopt = infeasible.
std::optional<QVec> lp_feasible_strict(const std::vector<LinConstraint>& cons);

// True iff p lies outside conv(cloud \ {p}). Exact. PointNotInCloud if p is not
// a member of cloud; duplicates in cloud are ignored.
bool is_vertex(const QVec& p, const std::vector<QVec>& cloud);

namespace detail {

struct Phase1 {
  bool feasible = false;       // does A x = b, x >= 0 have a solution?
  std::vector<Rat> x;          // a solution when feasible
  std::vector<Rat> price;      // dual multipliers of the phase-1 optimum
  Rat objective = 0;           // optimal artificial mass (0 iff feasible)
};

// Phase-1 simplex for A x = b, x >= 0 with artificial variables and Bland's rule.
Phase1 phase1_simplex(std::vector<QVec> rows, QVec rhs);

}  // namespace detail

}  // namespace signo
