// The monotone path polytope of the oriented cross-polytope: vertices from the
// section-average formula, an explicit irredundant facet description, and the
// induced construction for arbitrary centrally symmetric polytopes.
#pragma once

#include <utility>
#include <vector>

#include "signo/coherence.hpp"
#include "signo/pathspace.hpp"

namespace signo {

struct MppPoint {
  QVec coords;
  MonotonePath source;
};

// Section average of a monotone vertex chain (endpoints included):
//   sum_j  [ (a(v_j) - a(v_{j-1})) / (2 * 2 a_n) ] * (v_{j-1} + v_j).
// The chain must ascend strictly in a-value; it need not follow edges, so
// degenerate chains can be averaged too. Every result satisfies <a, x> = 0.
QVec bs_point_chain(const std::vector<int>& chain, const Orientation& o);
MppPoint bs_point(const MonotonePath& p, const Orientation& o);

// One vertex per coherent path, keyed by sign vector, in sign-vector order.
std::vector<std::pair<SignVector, MppPoint>> mpp_vertices(const Orientation& o);

struct FacetLabel {
  int i;           // splitting coordinate, 1..n-1
  SignVector eps;  // full support sign vector of length n-1
  auto operator<=>(const FacetLabel&) const = default;
};

// <normal, x> >= rhs, valid on every MPP vertex and tight exactly on the
// interval of sign vectors [singleton_{i, eps(i)}, eps].
struct FacetIneq {
  QVec normal;
  Rat rhs;
  FacetLabel label;
};

// The supporting functional that splits the path family at the vertex
// eps(i) * e_i: with s = eps(i) a_i, a vertex at signed value t gets
//   -t - a_n              if t <= s   (slope -1 from the image of -e_n),
//   (s+a_n)/(a_n-s) (t - a_n)  otherwise (through the image of e_n),
// read back onto coordinates; rhs = (-s - a_n)/2. IndexOutOfRange for a bad i,
// LengthMismatch unless eps has full support and length n-1.
FacetIneq facet_functional(int i, const SignVector& eps, const Orientation& o);

// All (n-1) * 2^(n-1) facets, i ascending then eps in sign-vector order.
std::vector<FacetIneq> mpp_facets(const Orientation& o);

// MPP of conv(+-v_1 .. +-v_n) with functional values ell_values (ell(v_i)):
// normalize the values, push the model vertices through e_i -> sign * v_perm(i),
// deduplicate, keep convex-position survivors, sorted lexicographically.
std::vector<QVec> project_cs(const std::vector<QVec>& reps, const QVec& ell_values);

}  // namespace signo
