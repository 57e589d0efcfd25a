#include "modtrace/trace_solver.hpp"

#include "modtrace/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <future>

namespace modtrace {
namespace {

std::string pair_text(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

ComplexMatrix dimension_matrix(const FusionRing& ring, const DimChar& chr, const NimRep& rep) {
  if (chr.ring_id != ring.fingerprint() || rep.ring_id != ring.fingerprint())
    throw StructuralError("character, module and ring refer to different fusion rings");
  if (chr.size() != ring.rank() || static_cast<int>(rep.M.size()) != ring.rank())
    throw StructuralError("character or module does not match the ring rank");
  const int k = rep.module_rank;
  ComplexMatrix Q = ComplexMatrix::Zero(k, k);
  for (int u = 0; u < ring.rank(); ++u) Q += chr[u] * rep.M[u].cast<double>().cast<Complex>();
  return Q;
}

QPropertyReport q_property_report(const ComplexMatrix& Q, double dim_C, double tol) {
  QPropertyReport r;
  const double entry_scale = std::max(1.0, max_abs(Q));
  const ComplexMatrix square = Q * Q - dim_C * Q;
  r.square_residual = max_abs(square);
  r.hermitian_residual = max_abs(Q - Q.adjoint());
  r.square_ok = r.square_residual < tol * std::max(1.0, dim_C) * entry_scale;
  r.hermitian_ok = r.hermitian_residual < tol * entry_scale;

  const ComplexMatrix symmetric = (Q + Q.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetric, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd values = solver.eigenvalues();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    r.eigenvalues.push_back(values(i));
    const double dist = std::min(std::abs(values(i)), std::abs(values(i) - dim_C));
    r.spectrum_residual = std::max(r.spectrum_residual, dist);
  }
  r.spectrum_ok = r.spectrum_residual < tol * std::max(1.0, dim_C) * static_cast<double>(Q.rows());
  return r;
}

TraceCertificate solve_module_trace(const FusionRing& ring, const DimChar& chr, const NimRep& rep,
                                    double tol) {
  TraceCertificate cert;
  cert.Q = dimension_matrix(ring, chr, rep);
  cert.dim_C = global_dimension(chr);
  cert.C = c_invariant(chr);
  cert.spherical_by_C = std::abs(cert.C - cert.dim_C) < tol * std::max(1.0, cert.dim_C);
  cert.q_report = q_property_report(cert.Q, cert.dim_C, tol);

  const ComplexMatrix& Q = cert.Q;
  const int k = static_cast<int>(Q.rows());
  const double scale = std::max(1.0, max_abs(Q));
  const double threshold = tol * scale;

  int zero_entries = 0;
  std::string first_zero;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (std::abs(Q(i, j)) <= threshold) {
        if (zero_entries++ == 0) first_zero = pair_text(i, j);
      }
  if (zero_entries > 0)
    cert.diagnostics.push_back("zero entry in Q at " + first_zero + "; " +
                               std::to_string(zero_entries) + " zero entries in total");

  int nonzero_minors = 0;
  double worst_minor = 0.0;
  std::string worst_where;
  for (int i = 0; i < k; ++i)
    for (int l = i + 1; l < k; ++l)
      for (int j = 0; j < k; ++j)
        for (int m = j + 1; m < k; ++m) {
          const double minor = std::abs(Q(i, j) * Q(l, m) - Q(i, m) * Q(l, j));
          if (minor >= threshold) {
            ++nonzero_minors;
            if (minor > worst_minor) {
              worst_minor = minor;
              worst_where = "rows " + pair_text(i, l) + " columns " + pair_text(j, m);
            }
          }
        }
  if (nonzero_minors > 0)
    cert.diagnostics.push_back("Q has rank > 1: " + std::to_string(nonzero_minors) +
                               " nonzero 2x2 minors, largest " + format_real(worst_minor) + " at " +
                               worst_where);

  if (!is_indecomposable(rep))
    cert.diagnostics.push_back("module is decomposable: the rank-one criterion applies to each "
                               "indecomposable summand separately");

  int anchor = 0;
  for (int i = 1; i < k; ++i)
    if (Q(i, i).real() > Q(anchor, anchor).real()) anchor = i;
  const double pivot = Q(anchor, anchor).real();
  if (pivot <= threshold) cert.diagnostics.push_back("zero diagonal");

  cert.matched = zero_entries == 0 && nonzero_minors == 0 && pivot > threshold;
  if (!cert.matched) return cert;

  ModuleTrace trace;
  trace.anchor = anchor;
  trace.d.resize(static_cast<std::size_t>(k));
  const double root = std::sqrt(pivot);
  for (int i = 0; i < k; ++i) trace.d[i] = Q(i, anchor) / root;
  trace.d[anchor] = root;

  ComplexVector d(k);
  for (int i = 0; i < k; ++i) d(i) = trace.d[i];
  cert.right_eigen_residual = (Q * d - cert.dim_C * d).cwiseAbs().maxCoeff();
  cert.left_eigen_residual = (d.transpose() * Q - cert.C * d.transpose()).cwiseAbs().maxCoeff();
  cert.reconstruction_residual = max_abs(Q - d * d.adjoint());
  cert.normalization_residual = std::abs(d.squaredNorm() - cert.dim_C);
  cert.trace = std::move(trace);
  return cert;
}

std::vector<TraceCertificate> component_certificates(const FusionRing& ring, const DimChar& chr,
                                                     const NimRep& rep, double tol) {
  std::vector<TraceCertificate> out;
  for (const auto& component : connected_components(rep))
    out.push_back(solve_module_trace(ring, chr, restrict_to(rep, component), tol));
  return out;
}

Complex object_dimension(const ModuleTrace& trace, const std::vector<std::int64_t>& multiplicities) {
  if (static_cast<int>(multiplicities.size()) != trace.size())
    throw StructuralError("multiplicity vector has " + std::to_string(multiplicities.size()) +
                          " entries, module rank is " + std::to_string(trace.size()));
  Complex sum = 0.0;
  for (int i = 0; i < trace.size(); ++i) sum += static_cast<double>(multiplicities[i]) * trace.d[i];
  return sum;
}

ModuleTrace normalized_at(const ModuleTrace& trace, int index) {
  if (index < 0 || index >= trace.size()) throw StructuralError("normalisation index out of range");
  ModuleTrace out = trace;
  const Complex pivot = trace.d[index];
  for (auto& z : out.d) z /= pivot;
  out.anchor = index;
  return out;
}

std::vector<double> fp_module_trace(const FusionRing& ring, const NimRep& rep, long max_iterations) {
  if (!is_indecomposable(rep))
    throw UnsupportedError("Frobenius-Perron module vector is not unique on a decomposable module");
  const int k = rep.module_rank;
  const Eigen::MatrixXd total = adjacency(rep).cast<double>();

  Eigen::VectorXd w = Eigen::VectorXd::Ones(k);
  bool converged = false;
  for (long it = 0; it < max_iterations; ++it) {
    Eigen::VectorXd next = total * w;
    const double lambda = next.maxCoeff() / w.maxCoeff();
    if ((next - lambda * w).cwiseAbs().maxCoeff() < 1e-12 * lambda) {
      converged = true;
      break;
    }
    w = next / next.maxCoeff();
  }
  if (!converged) throw NumericError("module Perron iteration did not converge");

  double target = 0.0;
  for (double x : fp_dimensions(ring)) target += x * x;
  w *= std::sqrt(target / w.squaredNorm());
  return {w.data(), w.data() + k};
}

FlexibilityReport matched_report(const FusionRing& ring, const DimChar& chr,
                                 const std::vector<NimRep>& reps, double tol) {
  if (reps.empty()) throw StructuralError("flexibility needs at least one module");
  std::vector<std::future<TraceCertificate>> pending;
  pending.reserve(reps.size());
  for (const auto& rep : reps)
    pending.push_back(std::async(std::launch::async, [&ring, &chr, &rep, tol] {
      return solve_module_trace(ring, chr, rep, tol);
    }));
  FlexibilityReport report;
  report.flexible = true;
  for (auto& f : pending) {
    report.certificates.push_back(f.get());
    report.flexible = report.flexible && report.certificates.back().matched;
  }
  return report;
}

std::string to_string(SphericalVerdict v) {
  switch (v) {
    case SphericalVerdict::spherical:
      return "spherical";
    case SphericalVerdict::non_spherical:
      return "non-spherical";
    case SphericalVerdict::inconclusive:
      break;
  }
  return "inconclusive-numeric";
}

SphericalReport spherical_certificate(const FusionRing& ring, const DimChar& chr,
                                      const std::vector<NimRep>& reps, double tol) {
  SphericalReport report;
  report.C = c_invariant(chr);
  report.dim_C = global_dimension(chr);
  const double threshold = tol * std::max(1.0, report.dim_C);
  if (std::abs(report.C - report.dim_C) < threshold)
    report.verdict = SphericalVerdict::spherical;
  else if (std::abs(report.C) < threshold)
    report.verdict = SphericalVerdict::non_spherical;

  for (std::size_t r = 0; r < reps.size(); ++r) {
    const auto cert = solve_module_trace(ring, chr, reps[r], tol);
    if (!cert.matched) continue;
    const auto& d = cert.trace->d;
    const bool real = std::all_of(d.begin(), d.end(), [tol](Complex z) {
      return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z));
    });
    if (real) {
      report.witness_module = static_cast<int>(r);
      report.witness = d;
      break;
    }
  }
  return report;
}

}  // namespace modtrace
