#include "modtrace/nimrep.hpp"

#include "modtrace/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace modtrace {
namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

void check_shapes(const FusionRing& ring, const NimRep& rep) {
  if (rep.module_rank < 1) throw StructuralError("module_rank must be positive");
  if (static_cast<int>(rep.M.size()) != ring.rank())
    throw StructuralError("module has " + std::to_string(rep.M.size()) +
                          " action matrices, ring rank is " + std::to_string(ring.rank()));
  for (const auto& m : rep.M)
    if (m.rows() != rep.module_rank || m.cols() != rep.module_rank)
      throw StructuralError("action matrix is not module_rank x module_rank");
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ValidationReport validate_nimrep(const FusionRing& ring, const NimRep& rep) {
  check_shapes(ring, rep);
  if (rep.ring_id != ring.fingerprint())
    throw StructuralError("module belongs to ring " + rep.ring_id + ", not " + ring.fingerprint());

  ValidationReport report;
  const int n = ring.rank();
  const int k = rep.module_rank;

  for (int u = 0; u < n; ++u)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < k; ++i)
        if (rep.M[u](j, i) < 0) report.add("non-negativity", {u, j, i}, str(rep.M[u](j, i)), ">= 0");

  const IntMatrix& unit = rep.M[ring.unit()];
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) {
      const std::int64_t expected = i == j ? 1 : 0;
      if (unit(j, i) != expected) report.add("unit", {ring.unit(), j, i}, str(unit(j, i)), str(expected));
    }

  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const IntMatrix lhs = rep.M[u] * rep.M[v];
      IntMatrix rhs = IntMatrix::Zero(k, k);
      for (int w = 0; w < n; ++w) rhs += ring.N(u, v, w) * rep.M[w];
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
          if (lhs(j, i) != rhs(j, i)) report.add("composition", {u, v, j, i}, str(lhs(j, i)), str(rhs(j, i)));
    }

  for (int u = 0; u < n; ++u) {
    const IntMatrix& dual = rep.M[ring.dual(u)];
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < k; ++i)
        if (dual(j, i) != rep.M[u](i, j))
          report.add("duality", {u, j, i}, str(dual(j, i)), str(rep.M[u](i, j)));
  }

  const IntMatrix total = adjacency(rep);
  for (int i = 0; i < k; ++i)
    if (total.col(i).isZero()) report.add("coverage", {i}, "0", "> 0");
  return report;
}

NimRep regular_module(const FusionRing& ring) {
  return NimRep{ring.fingerprint(), ring.rank(), fusion_matrices(ring)};
}

NimRep direct_sum(const NimRep& first, const NimRep& second) {
  if (first.ring_id != second.ring_id)
    throw StructuralError("direct sum of modules over different rings");
  if (first.module_rank < 1 || second.module_rank < 1)
    throw StructuralError("direct sum needs two non-empty modules");
  if (first.M.size() != second.M.size())
    throw StructuralError("direct sum of modules with different action counts");
  const int k1 = first.module_rank;
  const int k = k1 + second.module_rank;
  NimRep out{first.ring_id, k, {}};
  for (std::size_t u = 0; u < first.M.size(); ++u) {
    IntMatrix m = IntMatrix::Zero(k, k);
    m.topLeftCorner(k1, k1) = first.M[u];
    m.bottomRightCorner(second.module_rank, second.module_rank) = second.M[u];
    out.M.push_back(std::move(m));
  }
  return out;
}

IntMatrix adjacency(const NimRep& rep) {
  IntMatrix total = IntMatrix::Zero(rep.module_rank, rep.module_rank);
  for (const auto& m : rep.M) total += m;
  return total;
}

std::vector<std::vector<int>> connected_components(const NimRep& rep) {
  const int k = rep.module_rank;
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  const IntMatrix total = adjacency(rep);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      if (total(j, i) != 0) {
        const int a = find_root(parent, i);
        const int b = find_root(parent, j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < k; ++i) groups[find_root(parent, i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_indecomposable(const NimRep& rep) { return connected_components(rep).size() == 1; }

NimRep restrict_to(const NimRep& rep, const std::vector<int>& indices) {
  const int k = static_cast<int>(indices.size());
  if (k < 1) throw StructuralError("restriction to an empty set of module simples");
  for (int i : indices)
    if (i < 0 || i >= rep.module_rank) throw StructuralError("module index out of range");
  NimRep out{rep.ring_id, k, {}};
  for (const auto& m : rep.M) {
    IntMatrix sub(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub(r, c) = m(indices[r], indices[c]);
    out.M.push_back(std::move(sub));
  }
  return out;
}

}  // namespace modtrace
