// Exact linear algebra over Q: elimination, nullspaces, ranks.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "signo/rational.hpp"

namespace signo {

// Solves rows[i].first . x = rows[i].second for the square or overdetermined case.
// Returns nullopt when the system is inconsistent. If the system is consistent but
// underdetermined, free coordinates are set to zero.
std::optional<QVec> solve_linear(const std::vector<std::pair<QVec, Rat>>& system);

int rank(std::vector<QVec> rows);

// Basis of {x in Q^dim : R x = 0}, deterministic (one vector per free column).
std::vector<QVec> nullspace(const std::vector<QVec>& rows, int dim);

// Dimension of the affine hull of the given points; -1 for an empty set.
int affine_rank(const std::vector<QVec>& points);

}  // namespace signo
