#pragma once

#include "modtrace/fusion_ring.hpp"
#include "modtrace/nimrep.hpp"
#include "modtrace/pivotal.hpp"
#include "modtrace/trace_solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace modtrace {

/// Multiplicity of each ring simple c_u in the inner hom ⟨m_j, m_i⟩, which is
/// (M_u)(i, j). Throws StructuralError on out-of-range indices.
std::vector<std::int64_t> inner_hom_multiplicities(const NimRep& rep, int i, int j);

/// Numeric shadow of the Frobenius algebra ⟨m, m⟩.
///
/// beta_unit and beta_algebra are the specialness constants with
/// beta_unit * beta_algebra = dim_A, reported in the normalisation
/// beta_unit = dim_A, beta_algebra = 1.
struct FrobeniusReport {
  int object = 0;
  std::vector<std::int64_t> multiplicities;
  double dim_A = 0.0;
  bool haploid = false;
  double beta_unit = 0.0;
  double beta_algebra = 1.0;
  bool positivity_ok = false;
  bool trace_matched = false;
  std::vector<std::string> obstructions;
};

/// Throws UnsupportedError on decomposable modules and StructuralError on a
/// bad object index.
FrobeniusReport frobenius_report(const FusionRing& ring, const DimChar& chr, const NimRep& rep, int m,
                                 const TraceCertificate& certificate, double tol = kDefaultTolerance);

/// Change of dimension through ⟨m, m⟩: dim⟨m, m_n⟩ = scale · d[n] with
/// scale = dim⟨m, m⟩ / d[m], checked for every simple n.
struct MoritaRescaleReport {
  int object = 0;
  Complex scale = 0.0;
  std::vector<Complex> inner_hom_dims;  // Q(n, m)
  std::vector<Complex> predicted;       // scale * d[n]
  double max_residual = 0.0;
  bool ok = false;
};

/// Throws PreconditionError when the certificate is unmatched.
MoritaRescaleReport morita_rescale_check(const FusionRing& ring, const DimChar& chr, const NimRep& rep,
                                         int m, const TraceCertificate& certificate,
                                         double tol = kDefaultTolerance);

}  // namespace modtrace
