#pragma once

#include "modtrace/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace modtrace {

/// Grothendieck ring of a fusion category: simple labels, a unit, a duality
/// map and non-negative integer structure constants N[a][b][c], the
/// multiplicity of simple c in a ⊗ b.
///
/// Construction only checks shapes and signs; the ring axioms are checked by
/// validate_fusion_ring so that broken rings can still be loaded and reported.
class FusionRing {
 public:
  using Tensor = std::vector<std::vector<std::vector<std::int64_t>>>;

  /// Throws StructuralError on inconsistent shapes, out-of-range indices or
  /// negative multiplicities.
  FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual, const Tensor& N);

  int rank() const noexcept { return static_cast<int>(labels_.size()); }
  int unit() const noexcept { return unit_; }
  int dual(int a) const { return dual_.at(static_cast<std::size_t>(a)); }
  const std::vector<int>& duals() const noexcept { return dual_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int a) const { return labels_.at(static_cast<std::size_t>(a)); }

  std::int64_t N(int a, int b, int c) const {
    const auto n = static_cast<std::size_t>(rank());
    return structure_[(static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n +
                      static_cast<std::size_t>(c)];
  }

  Tensor tensor() const;

  /// N[a][b][c] == N[b][a][c] for all a, b, c.
  bool is_commutative() const;

  /// Stable content hash ("fnv1a:" + 16 hex digits) used as the ring
  /// reference in character and module files.
  const std::string& fingerprint() const noexcept { return fingerprint_; }

  bool operator==(const FusionRing& other) const {
    return labels_ == other.labels_ && unit_ == other.unit_ && dual_ == other.dual_ &&
           structure_ == other.structure_;
  }

 private:
  std::vector<std::string> labels_;
  int unit_;
  std::vector<int> dual_;
  std::vector<std::int64_t> structure_;
  std::string fingerprint_;
};

/// Exhaustive check of unit law, duality, Frobenius reciprocity and
/// associativity. Every violation is listed.
ValidationReport validate_fusion_ring(const FusionRing& ring);

/// Fusion matrices with (N_a)[c][b] = N[a][b][c]: row = output, column = input.
std::vector<IntMatrix> fusion_matrices(const FusionRing& ring);

/// Frobenius–Perron dimensions by power iteration on Σ_a N_a.
/// Throws NumericError if the iteration budget runs out.
std::vector<double> fp_dimensions(const FusionRing& ring, long max_iterations = 1'000'000);

}  // namespace modtrace
