// The cross-polytope conv{±e_1..±e_n} with a generic linear functional.
//
// Vertices are signed indices: k stands for e_k, -k for -e_k. Under a canonical
// orientation (0 < a_1 < ... < a_n) the a-value order of signed indices equals
// plain integer order, so faces are kept as ascending int vectors.
#pragma once

#include <utility>
#include <vector>

#include "signo/rational.hpp"

namespace signo {

class Orientation {
 public:
  // values must satisfy 0 < a_1 < ... < a_n; NotGeneric otherwise.
  explicit Orientation(QVec values);
  static Orientation canonical(int n);  // a = (1, 2, ..., n)

  int n() const { return static_cast<int>(a_.size()); }
  const QVec& values() const { return a_; }
  // a-value of a signed index: value(-k) = -a_k. IndexOutOfRange unless 0 < |k| <= n.
  Rat value(int signed_index) const;

 private:
  QVec a_;
};

// Relabeling that carries the canonical model onto a raw functional:
// canonical coordinate i came from raw coordinate source[i] (0-based), reflected
// when sign[i] < 0. So the map T(e_i) = sign[i] * e_source[i] matches a-values.
struct SignedPerm {
  std::vector<int> source;
  std::vector<int> sign;
  bool is_identity() const;
};

// Any functional with nonzero entries of distinct absolute value is equivalent
// to a canonical one by reflections and a coordinate permutation.
// NotGeneric reports a zero entry or a tied pair (1-based positions).
std::pair<Orientation, SignedPerm> normalize(const QVec& raw);

using Face = std::vector<int>;  // signed indices, strictly ascending

// Antipode-free subsets of vertices are exactly the faces.
// IndexOutOfRange for entries outside ±[n]; InvalidPath-style misuse is the
// caller's problem — entries must be ascending.
bool is_face(const Face& s, int n);

// (argmin, argmax) of the a-value over a nonempty face. NotAFace otherwise.
std::pair<int, int> face_extremes(const Face& s, const Orientation& o);

}  // namespace signo
