// Coherence of monotone paths and cellular strings, decided three independent
// ways: the antipode criterion, an explicit lifting-functional construction,
// and exact LP feasibility. A path or string on the oriented cross-polytope is
// coherent iff its vertex set contains no antipodal pair besides {-e_n, e_n}.
#pragma once

#include <optional>
#include <vector>

#include "signo/lp.hpp"
#include "signo/pathspace.hpp"

namespace signo {

bool is_coherent_fast(const MonotonePath& p);
bool is_coherent_fast(const CellularString& s, int n);

// The LP rows of a chain of cells: for every cell take the line through the
// projections of its extreme vertices; each vertex of the cross-polytope must
// lie on that line (Eq, own cell) or strictly above it (StrictPos, the rest).
// Accepts raw cells — they need not be faces — so degenerate chains can be
// posed as plain LPs. Identically-zero rows and duplicates are dropped.
std::vector<LinConstraint> coherence_system(const std::vector<Face>& cells, const Orientation& o);

// LP decider: a witness functional phi (with margin >= 1 on strict rows),
// or nullopt. The overloads validate their input first.
std::optional<QVec> is_coherent_lp(const MonotonePath& p, const Orientation& o);
std::optional<QVec> is_coherent_lp(const CellularString& s, const Orientation& o);

// Constructive witness for a coherent input: phi(e_n) = 0, the first chain
// segment gets slope -1, the j-th gets -1/j, interior cell vertices are
// interpolated onto their segment, untouched coordinates stay 0. The result is
// re-checked against the full system exactly; if any strict row ends up weak
// the LP witness is returned instead. IncoherentInput when the antipode
// criterion fails.
QVec build_witness(const MonotonePath& p, const Orientation& o);
QVec build_witness(const CellularString& s, const Orientation& o);

}  // namespace signo
