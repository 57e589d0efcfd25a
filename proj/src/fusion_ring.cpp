#include "modtrace/fusion_ring.hpp"

#include "modtrace/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace modtrace {
namespace {

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

std::string canonical_text(const std::vector<std::string>& labels, int unit,
                           const std::vector<int>& dual, const std::vector<std::int64_t>& N) {
  std::string s = "rank=" + std::to_string(labels.size()) + ";labels=";
  for (const auto& l : labels) s += l + "\x1f";
  s += ";unit=" + std::to_string(unit) + ";dual=";
  for (int d : dual) s += std::to_string(d) + ",";
  s += ";N=";
  for (auto v : N) s += std::to_string(v) + ",";
  return s;
}

}  // namespace

FusionRing::FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
                       const Tensor& N)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)) {
  const int n = rank();
  if (n < 1) throw StructuralError("fusion ring must have at least one simple object");
  if (unit_ < 0 || unit_ >= n) throw StructuralError("unit index out of range");
  if (static_cast<int>(dual_.size()) != n)
    throw StructuralError("dual has " + std::to_string(dual_.size()) + " entries, expected " +
                          std::to_string(n));
  for (int d : dual_)
    if (d < 0 || d >= n) throw StructuralError("dual index out of range: " + std::to_string(d));
  if (static_cast<int>(N.size()) != n) throw StructuralError("N must be rank x rank x rank");
  structure_.reserve(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(N[a].size()) != n) throw StructuralError("N must be rank x rank x rank");
    for (int b = 0; b < n; ++b) {
      if (static_cast<int>(N[a][b].size()) != n)
        throw StructuralError("N must be rank x rank x rank");
      for (int c = 0; c < n; ++c) {
        if (N[a][b][c] < 0)
          throw StructuralError("negative multiplicity N[" + std::to_string(a) + "][" +
                                std::to_string(b) + "][" + std::to_string(c) + "]");
        structure_.push_back(N[a][b][c]);
      }
    }
  }
  fingerprint_ = fnv1a(canonical_text(labels_, unit_, dual_, structure_));
}

FusionRing::Tensor FusionRing::tensor() const {
  const int n = rank();
  Tensor t(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t[a][b][c] = N(a, b, c);
  return t;
}

bool FusionRing::is_commutative() const {
  const int n = rank();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (N(a, b, c) != N(b, a, c)) return false;
  return true;
}

ValidationReport validate_fusion_ring(const FusionRing& ring) {
  ValidationReport report;
  const int n = ring.rank();
  const int u = ring.unit();
  auto str = [](std::int64_t v) { return std::to_string(v); };

  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      const std::int64_t delta = b == c ? 1 : 0;
      if (ring.N(u, b, c) != delta)
        report.add("unit-left", {u, b, c}, str(ring.N(u, b, c)), str(delta));
      if (ring.N(b, u, c) != delta)
        report.add("unit-right", {b, u, c}, str(ring.N(b, u, c)), str(delta));
    }

  if (ring.dual(u) != u) report.add("dual-unit", {u}, str(ring.dual(u)), str(u));
  for (int a = 0; a < n; ++a) {
    if (ring.dual(ring.dual(a)) != a)
      report.add("dual-involution", {a}, str(ring.dual(ring.dual(a))), str(a));
    for (int b = 0; b < n; ++b) {
      const std::int64_t delta = b == ring.dual(a) ? 1 : 0;
      if (ring.N(a, b, u) != delta) report.add("dual-pairing", {a, b}, str(ring.N(a, b, u)), str(delta));
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto v = ring.N(a, b, c);
        const auto r1 = ring.N(ring.dual(a), c, b);
        const auto r2 = ring.N(c, ring.dual(b), a);
        if (v != r1) report.add("reciprocity-left", {a, b, c}, str(v), str(r1));
        if (v != r2) report.add("reciprocity-right", {a, b, c}, str(v), str(r2));
      }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          std::int64_t lhs = 0;
          std::int64_t rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += ring.N(a, b, e) * ring.N(e, c, d);
            rhs += ring.N(b, c, e) * ring.N(a, e, d);
          }
          if (lhs != rhs) report.add("associativity", {a, b, c, d}, str(lhs), str(rhs));
        }
  return report;
}

std::vector<IntMatrix> fusion_matrices(const FusionRing& ring) {
  const int n = ring.rank();
  std::vector<IntMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    IntMatrix m(n, n);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) m(c, b) = ring.N(a, b, c);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<double> fp_dimensions(const FusionRing& ring, long max_iterations) {
  const int n = ring.rank();
  const auto mats = fusion_matrices(ring);
  Eigen::MatrixXd total = Eigen::MatrixXd::Zero(n, n);
  for (const auto& m : mats) total += m.cast<double>();

  // Σ_a N_a contains the identity, so it is primitive and the Perron root dominates.
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  bool converged = false;
  for (long it = 0; it < max_iterations; ++it) {
    Eigen::VectorXd w = total * v;
    const double lambda = w.cwiseAbs().maxCoeff() / v.cwiseAbs().maxCoeff();
    const double residual = (w - lambda * v).cwiseAbs().maxCoeff();
    if (residual < 1e-12 * lambda) {
      converged = true;
      break;
    }
    v = w / w.cwiseAbs().maxCoeff();
  }
  if (!converged)
    throw NumericError("Frobenius-Perron power iteration did not converge within " +
                       std::to_string(max_iterations) + " iterations");

  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  std::vector<double> dims(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const Eigen::VectorXd image = mats[a].cast<double>() * v;
    dims[a] = image(k) / v(k);
  }
  return dims;
}

}  // namespace modtrace
