// Monotone paths and cellular strings on the oriented cross-polytope.
//
// A monotone path is stored by its interior vertices only; the endpoints
// -e_n, e_n are implicit. Interior entries are signed indices with |k| <= n-1,
// strictly ascending (== ascending a-value), never two consecutive antipodes,
// and never empty ({-e_n, e_n} is not an edge).
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "signo/crosspoly.hpp"
#include "signo/rational.hpp"

namespace signo {

struct SignVector {
  std::vector<int> entries;  // each -1, 0, +1; length n-1
  auto operator<=>(const SignVector&) const = default;
  int size() const { return static_cast<int>(entries.size()); }
  std::string str() const;  // "+0-"
};

SignVector parse_sign_vector(std::string_view s);
int taxicab(const SignVector& a, const SignVector& b);  // LengthMismatch
bool is_zero(const SignVector& s);

struct MonotonePath {
  std::vector<int> interior;
  auto operator<=>(const MonotonePath&) const = default;
  // full vertex sequence -e_n, interior..., e_n
  std::vector<int> chain(int n) const;
};

bool is_valid_interior(const std::vector<int>& interior, int n);
MonotonePath make_path(std::vector<int> interior, int n);  // InvalidPath on violations

// All monotone paths, in lexicographic order of the per-coordinate occupancy
// word (symbol order: '-' < absent < '+' < both). DimOutOfRange for n < 2.
std::vector<MonotonePath> enumerate_paths(int n);

Int count_paths_closed(int n);     // (2^(2n-1) - 2) / 3
Int count_coherent_closed(int n);  // 3^(n-1) - 1

// Sign-vector codec for coherent paths: entry k is +1 / -1 / 0 as e_k / -e_k /
// neither lies on the path. NotCoherentEncoding when both appear.
SignVector path_to_signvector(const MonotonePath& p, int n);
MonotonePath signvector_to_path(const SignVector& s);

// A cellular string: faces F_1 < ... < F_m, each with >= 2 vertices, chained by
// max(F_j) = min(F_{j+1}), from -e_n to e_n.
struct CellularString {
  std::vector<Face> cells;
  auto operator<=>(const CellularString&) const = default;
  std::vector<int> vertex_set() const;  // ascending union of all cells
};

bool is_valid_string(const CellularString& s, int n);
CellularString path_to_string(const MonotonePath& p, int n);  // edge cells

// All cellular strings by depth-first chaining of faces, memoized per start
// vertex. Counts grow quickly; intended for n <= 5.
std::vector<CellularString> enumerate_strings(int n);

}  // namespace signo
