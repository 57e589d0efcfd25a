#pragma once

#include "modtrace/fusion_ring.hpp"
#include "modtrace/nimrep.hpp"
#include "modtrace/numeric.hpp"
#include "modtrace/pivotal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modtrace {

/// Q(i, j) = Σ_u d[u] (M_u)(i, j), the dimension of the inner hom ⟨m_j, m_i⟩.
/// Throws StructuralError when the character and module refer to different rings.
ComplexMatrix dimension_matrix(const FusionRing& ring, const DimChar& chr, const NimRep& rep);

/// Structural identities every dimension matrix satisfies, with residuals.
struct QPropertyReport {
  double square_residual = 0.0;     // ‖Q² − dim_C·Q‖∞
  double hermitian_residual = 0.0;  // ‖Q − Q†‖∞
  double spectrum_residual = 0.0;   // max over eigenvalues of distance to {0, dim_C}
  std::vector<double> eigenvalues;  // ascending
  bool square_ok = false;
  bool hermitian_ok = false;
  bool spectrum_ok = false;

  bool ok() const noexcept { return square_ok && hermitian_ok && spectrum_ok; }
};

QPropertyReport q_property_report(const ComplexMatrix& Q, double dim_C, double tol = kDefaultTolerance);

/// Dimension vector of a module trace, d[i] = dim(m_i).
///
/// Normalised so that Σ|d|² = dim_C and Q = d d†; the entry at `anchor`
/// (largest diagonal entry of Q) is real and positive.
struct ModuleTrace {
  std::vector<Complex> d;
  int anchor = 0;

  int size() const noexcept { return static_cast<int>(d.size()); }
};

struct TraceCertificate {
  bool matched = false;
  ComplexMatrix Q;
  std::optional<ModuleTrace> trace;
  double dim_C = 0.0;
  Complex C = 0.0;
  bool spherical_by_C = false;
  QPropertyReport q_report;
  // Residuals below are only meaningful when matched.
  double right_eigen_residual = 0.0;  // ‖Q d − dim_C d‖∞
  double left_eigen_residual = 0.0;   // ‖dᵀQ − C dᵀ‖∞
  double reconstruction_residual = 0.0;  // max |Q(i,j) − d_i conj(d_j)|
  double normalization_residual = 0.0;   // |Σ|d|² − dim_C|
  std::vector<std::string> diagnostics;
};

/// Decides whether a module trace exists: Q must be of rank one (every 2x2
/// minor vanishes) with no zero entry. When it does, the dimension vector is
/// read off a column of Q.
///
/// The criterion is the one for indecomposable modules. A decomposable module
/// has a block-diagonal Q and is reported unmatched with a diagnostic; run the
/// solver on its components (see component_certificates).
TraceCertificate solve_module_trace(const FusionRing& ring, const DimChar& chr, const NimRep& rep,
                                    double tol = kDefaultTolerance);

/// One certificate per connected component of the module.
std::vector<TraceCertificate> component_certificates(const FusionRing& ring, const DimChar& chr,
                                                     const NimRep& rep, double tol = kDefaultTolerance);

/// Σ_i n_i d[i] for an object with multiplicity vector n.
Complex object_dimension(const ModuleTrace& trace, const std::vector<std::int64_t>& multiplicities);

/// Rescales so the entry at `index` is 1 (e.g. the coset of the identity for
/// group modules).
ModuleTrace normalized_at(const ModuleTrace& trace, int index);

/// Perron vector w of Σ_u M_u, which satisfies M_uᵀ w = FPdim(u) w, scaled to
/// Σ w² = Σ_a FPdim(a)². Throws UnsupportedError on decomposable modules.
std::vector<double> fp_module_trace(const FusionRing& ring, const NimRep& rep,
                                    long max_iterations = 1'000'000);

/// Certificates for a list of modules; `flexible` is the conjunction of the
/// matched flags and only speaks about the supplied modules.
struct FlexibilityReport {
  std::vector<TraceCertificate> certificates;
  bool flexible = false;
  std::string scope = "flexibility is evaluated over the supplied module list only";
};

/// Throws StructuralError on an empty list. Certificates are computed
/// concurrently and returned in input order.
FlexibilityReport matched_report(const FusionRing& ring, const DimChar& chr,
                                 const std::vector<NimRep>& reps, double tol = kDefaultTolerance);

enum class SphericalVerdict { spherical, non_spherical, inconclusive };

std::string to_string(SphericalVerdict v);

struct SphericalReport {
  Complex C = 0.0;
  double dim_C = 0.0;
  SphericalVerdict verdict = SphericalVerdict::inconclusive;
  // Index into the supplied modules of a matched module whose dimension
  // vector is real, if one exists.
  std::optional<int> witness_module;
  std::vector<Complex> witness;
};

SphericalReport spherical_certificate(const FusionRing& ring, const DimChar& chr,
                                      const std::vector<NimRep>& reps, double tol = kDefaultTolerance);

}  // namespace modtrace
