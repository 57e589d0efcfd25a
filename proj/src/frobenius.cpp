#include "modtrace/frobenius.hpp"

#include "modtrace/errors.hpp"

#include <algorithm>
#include <cmath>

namespace modtrace {
namespace {

void check_object(const NimRep& rep, int m) {
  if (m < 0 || m >= rep.module_rank)
    throw StructuralError("module object index " + std::to_string(m) + " out of range");
}

}  // namespace

std::vector<std::int64_t> inner_hom_multiplicities(const NimRep& rep, int i, int j) {
  check_object(rep, i);
  check_object(rep, j);
  std::vector<std::int64_t> out;
  out.reserve(rep.M.size());
  for (const auto& m : rep.M) out.push_back(m(i, j));
  return out;
}

FrobeniusReport frobenius_report(const FusionRing& ring, const DimChar& chr, const NimRep& rep, int m,
                                 const TraceCertificate& certificate, double tol) {
  check_object(rep, m);
  if (!is_indecomposable(rep))
    throw UnsupportedError("Frobenius report needs an indecomposable module");
  if (certificate.Q.rows() != rep.module_rank)
    throw StructuralError("certificate does not belong to this module");
  (void)chr;

  FrobeniusReport r;
  r.object = m;
  r.multiplicities = inner_hom_multiplicities(rep, m, m);
  r.dim_A = certificate.Q(m, m).real();
  r.haploid = r.multiplicities[static_cast<std::size_t>(ring.unit())] == 1;
  r.beta_unit = r.dim_A;
  r.beta_algebra = 1.0;
  r.positivity_ok = r.dim_A > tol * std::max(1.0, max_abs(certificate.Q));
  r.trace_matched = certificate.matched;

  if (!r.haploid) r.obstructions.push_back("unit multiplicity in <m,m> is not 1");
  if (!r.positivity_ok) r.obstructions.push_back("dim <m,m> is not positive");
  for (const auto& diag : certificate.diagnostics)
    if (diag.rfind("Q has rank > 1", 0) == 0) r.obstructions.push_back(diag);
  if (r.positivity_ok && !certificate.matched)
    r.obstructions.push_back("dim <m,m> is positive but no module trace exists");
  return r;
}

MoritaRescaleReport morita_rescale_check(const FusionRing& ring, const DimChar& chr, const NimRep& rep,
                                         int m, const TraceCertificate& certificate, double tol) {
  (void)ring;
  (void)chr;
  check_object(rep, m);
  if (!certificate.matched || !certificate.trace)
    throw PreconditionError("Morita rescaling needs a matched trace certificate");
  const auto& d = certificate.trace->d;
  const ComplexMatrix& Q = certificate.Q;

  MoritaRescaleReport r;
  r.object = m;
  r.scale = Q(m, m) / d[m];
  const double scale = std::max(1.0, max_abs(Q));
  for (int n = 0; n < rep.module_rank; ++n) {
    r.inner_hom_dims.push_back(Q(n, m));
    r.predicted.push_back(r.scale * d[n]);
    r.max_residual = std::max(r.max_residual, std::abs(Q(n, m) - r.scale * d[n]));
  }
  r.ok = r.max_residual < tol * scale;
  return r;
}

}  // namespace modtrace
