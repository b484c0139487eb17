// The combinatorial model: faces of the MPP are order intervals of nonzero
// sign vectors, graded by the support gap. Also the signohedron realization
// (dual of cube + cross-polytope) that shares this combinatorics.
#pragma once

#include <utility>
#include <vector>

#include "signo/graph.hpp"
#include "signo/mppcore.hpp"
#include "signo/pathspace.hpp"

namespace signo {

// s <= t iff t agrees with s on the support of s. LengthMismatch on length clash.
bool poset_leq(const SignVector& s, const SignVector& t);

struct Interval {
  SignVector lo, hi;  // lo <= hi, lo nonzero
  auto operator<=>(const Interval&) const = default;
  int dim() const;  // |supp(hi)| - |supp(lo)|
};

// All nonzero sign vectors of length n-1, lexicographic with -1 < 0 < +1.
std::vector<SignVector> all_sign_vectors(int n);

// The m-faces: intervals with support gap m. DimOutOfRange unless 0 <= m <= n-2.
std::vector<Interval> faces(int n, int m);

// f_m = sum_k multinomial(n-1; k, m, n-1-k-m) 2^(k+m), k = |supp(lo)| >= 1.
Int fvector_closed(int n, int m);
std::vector<Int> fvector(int n);  // m = 0 .. n-2

// Vertex adjacency: taxicab distance one.
bool mpp_adjacent(const SignVector& s, const SignVector& t);
Graph mpp_graph(int n);  // vertices in all_sign_vectors order

// Graph diameter of the MPP skeleton. For n >= 3 this is BFS over taxicab-one
// edges; the n = 2 polytope is a segment, whose two vertices are joined by the
// polytope itself, so the taxicab metric value 2 is reported there.
int mpp_diameter(int n);

// Dual realization of cube + cross-polytope in dimension n-1: one vertex per
// sign vector S at S / (|supp S| + 1); one facet per vector w with a single
// +-2 entry and +-1 elsewhere, <w, x> <= 1, stored in >=-form like every
// FacetIneq and labeled by (position of the 2, signs).
struct Signohedron {
  std::vector<std::pair<SignVector, QVec>> vertices;
  std::vector<FacetIneq> facets;
};
Signohedron signohedron(int n);

}  // namespace signo
