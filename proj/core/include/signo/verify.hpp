// Independent verification: brute-force vertex identification over all paths,
// facet confirmation against vertex coordinates, incidence matrices, and a
// from-scratch MPP for arbitrary vertex clouds (edges found by exact LP).
#pragma once

#include <vector>

#include "signo/mppcore.hpp"
#include "signo/signlattice.hpp"

namespace signo {

// Section averages of ALL monotone paths, deduplicated, filtered down to the
// points in convex position. Sorted lexicographically by coordinates.
std::vector<MppPoint> brute_mpp(const Orientation& o);

enum class FacetStatus { Ok, ValidityViolation, RankDeficient };
const char* facet_status_name(FacetStatus s);

struct FacetCheck {
  FacetLabel label;
  FacetStatus status = FacetStatus::Ok;
  std::vector<SignVector> tight;  // labels of vertices meeting the bound
  bool tight_is_predicted_interval = false;
  int tight_affine_rank = -1;
};

struct FacetReport {
  std::vector<FacetCheck> checks;
  bool count_ok = false;      // matches (n-1) 2^(n-1) and the top f-vector entry
  bool adjacency_ok = false;  // every adjacent vertex pair shares >= n-2 facets
  bool ok() const;
};

// Validity, tight sets, predicted tight intervals and their affine rank
// (n-2 expected) for a facet list against labeled vertex coordinates.
FacetReport confirm_facets(const std::vector<std::pair<SignVector, QVec>>& verts,
                           const std::vector<FacetIneq>& ineqs, int n);

struct IncidenceMatrix {
  std::vector<SignVector> rows;   // vertex labels, sorted
  std::vector<FacetLabel> cols;   // facet labels, sorted
  std::vector<std::vector<char>> bits;
};

IncidenceMatrix incidence(const std::vector<std::pair<SignVector, QVec>>& verts,
                          const std::vector<FacetIneq>& ineqs);

// Equality of incidence matrices under the shared canonical labels.
// LabelMismatch when the label sets differ.
bool equivalent(const IncidenceMatrix& a, const IncidenceMatrix& b);

// helper: drop the source paths
std::vector<std::pair<SignVector, QVec>> as_labeled_points(
    const std::vector<std::pair<SignVector, MppPoint>>& verts);

// MPP of an arbitrary full cloud of vertices under functional `ell`, computed
// from first principles: edges by segment-versus-hull LPs, monotone paths by
// DFS over increasing edges, section averages, convex-position filter.
// NotGeneric when two cloud points share a functional value.
std::vector<QVec> mpp_of_cloud(const std::vector<QVec>& cloud, const QVec& ell);

}  // namespace signo
