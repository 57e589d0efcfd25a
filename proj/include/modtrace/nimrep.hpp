#pragma once

#include "modtrace/fusion_ring.hpp"
#include "modtrace/numeric.hpp"

#include <string>
#include <vector>

namespace modtrace {

/// Multiplicity data of a module category: for each ring simple u a
/// module_rank x module_rank matrix with (M[u])(j, i) = dim Hom(c_u ⊲ m_i, m_j).
/// Row is the target simple, column the source simple, so composition reads
/// M_u M_v = Σ_w N[u][v][w] M_w without transposes.
///
/// Module associativity data is not represented; only multiplicities are.
struct NimRep {
  std::string ring_id;
  int module_rank = 0;
  std::vector<IntMatrix> M;
};

/// Checks unit, composition, duality and non-negativity/coverage exactly.
/// Throws StructuralError when shapes do not match the ring.
ValidationReport validate_nimrep(const FusionRing& ring, const NimRep& rep);

/// The ring acting on itself: M_u = N_u.
NimRep regular_module(const FusionRing& ring);

/// Block-diagonal sum. Throws StructuralError on ring mismatch or empty summand.
NimRep direct_sum(const NimRep& first, const NimRep& second);

/// Σ_u M_u, the adjacency matrix of the module's fusion graph.
IntMatrix adjacency(const NimRep& rep);

/// Connected components of the adjacency graph (union-find), each sorted,
/// ordered by smallest member.
std::vector<std::vector<int>> connected_components(const NimRep& rep);

bool is_indecomposable(const NimRep& rep);

/// Restriction to a union of components given as sorted module indices.
NimRep restrict_to(const NimRep& rep, const std::vector<int>& indices);

}  // namespace modtrace
