#include "modtrace/pivotal.hpp"

#include "modtrace/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

namespace modtrace {
namespace {

constexpr int kCharacterRetries = 8;
constexpr double kSnap = 1e-10;

Complex snap(Complex z) {
  double re = z.real();
  double im = z.imag();
  if (std::abs(re) < kSnap) re = 0.0;
  if (std::abs(im) < kSnap) im = 0.0;
  return {re, im};
}

std::vector<std::pair<long long, long long>> sort_key(const DimChar& c) {
  std::vector<std::pair<long long, long long>> key;
  key.reserve(c.d.size());
  for (auto z : c.d) key.emplace_back(std::llround(z.real() * 1e9), std::llround(z.imag() * 1e9));
  return key;
}

bool is_multiplicative(const FusionRing& ring, const DimChar& chr, double tol) {
  const int n = ring.rank();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Complex rhs = 0.0;
      for (int c = 0; c < n; ++c) rhs += static_cast<double>(ring.N(a, b, c)) * chr[c];
      if (!approx_equal(chr[a] * chr[b], rhs, tol)) return false;
    }
  return true;
}

}  // namespace

DimChar make_char(const FusionRing& ring, std::vector<Complex> d) {
  if (static_cast<int>(d.size()) != ring.rank())
    throw StructuralError("character has " + std::to_string(d.size()) + " entries, ring rank is " +
                          std::to_string(ring.rank()));
  return DimChar{ring.fingerprint(), std::move(d)};
}

ValidationReport validate_dim_char(const FusionRing& ring, const DimChar& chr, double tol) {
  const int n = ring.rank();
  if (chr.size() != n)
    throw StructuralError("character has " + std::to_string(chr.size()) + " entries, ring rank is " +
                          std::to_string(n));
  if (chr.ring_id != ring.fingerprint())
    throw StructuralError("character belongs to ring " + chr.ring_id + ", not " + ring.fingerprint());

  ValidationReport report;
  const int u = ring.unit();
  if (!approx_equal(chr[u], 1.0, tol)) report.add("unit", {u}, format_complex(chr[u]), "1");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Complex rhs = 0.0;
      for (int c = 0; c < n; ++c) rhs += static_cast<double>(ring.N(a, b, c)) * chr[c];
      const Complex lhs = chr[a] * chr[b];
      if (!approx_equal(lhs, rhs, tol))
        report.add("multiplicativity", {a, b}, format_complex(lhs), format_complex(rhs));
    }

  for (int a = 0; a < n; ++a) {
    if (std::abs(chr[a]) <= tol) report.add("no-zeros", {a}, format_complex(chr[a]), "nonzero");
    const Complex dual_value = chr[ring.dual(a)];
    if (!approx_equal(dual_value, std::conj(chr[a]), tol))
      report.add("duality", {a}, format_complex(dual_value), format_complex(std::conj(chr[a])));
  }
  return report;
}

void sort_characters(std::vector<DimChar>& chars) {
  std::stable_sort(chars.begin(), chars.end(),
                   [](const DimChar& x, const DimChar& y) { return sort_key(x) > sort_key(y); });
}

std::vector<DimChar> ring_characters(const FusionRing& ring) {
  if (!ring.is_commutative())
    throw UnsupportedError("character enumeration needs a commutative fusion ring");

  const int n = ring.rank();
  const auto mats = fusion_matrices(ring);
  std::vector<Eigen::MatrixXd> real_mats;
  real_mats.reserve(mats.size());
  for (const auto& m : mats) real_mats.push_back(m.cast<double>());

  for (int attempt = 0; attempt < kCharacterRetries; ++attempt) {
    std::mt19937_64 rng(0x6d6f64747261ULL + static_cast<unsigned long long>(attempt));
    std::uniform_real_distribution<double> weight(1.0, 2.0);
    Eigen::MatrixXd combined = Eigen::MatrixXd::Zero(n, n);
    for (const auto& m : real_mats) combined += weight(rng) * m;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(combined);
    if (solver.info() != Eigen::Success) continue;
    const ComplexVector lambdas = solver.eigenvalues();
    const double scale = std::max(1.0, lambdas.cwiseAbs().maxCoeff());
    bool collision = false;
    for (int i = 0; i < n && !collision; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(lambdas(i) - lambdas(j)) < 1e-6 * scale) {
          collision = true;
          break;
        }
    if (collision) continue;

    const ComplexMatrix vectors = solver.eigenvectors();
    std::vector<DimChar> out;
    bool ok = true;
    for (int col = 0; col < n && ok; ++col) {
      const ComplexVector v = vectors.col(col);
      Eigen::Index k = 0;
      v.cwiseAbs().maxCoeff(&k);
      std::vector<Complex> values(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a) {
        const ComplexVector image = real_mats[a].cast<Complex>() * v;
        values[a] = snap(image(k) / v(k));
      }
      DimChar chr{ring.fingerprint(), std::move(values)};
      ok = is_multiplicative(ring, chr, kDefaultTolerance);
      out.push_back(std::move(chr));
    }
    if (!ok) continue;
    sort_characters(out);
    return out;
  }
  throw NumericError("simultaneous eigenproblem degenerate after " +
                     std::to_string(kCharacterRetries) + " weightings");
}

std::vector<DimChar> enumerate_characters(const FusionRing& ring, double tol) {
  auto all = ring_characters(ring);
  std::vector<DimChar> out;
  for (auto& chr : all) {
    bool keep = true;
    for (int a = 0; a < ring.rank() && keep; ++a) {
      if (std::abs(chr[a]) <= tol) keep = false;
      if (!approx_equal(chr[ring.dual(a)], std::conj(chr[a]), tol)) keep = false;
    }
    if (keep) out.push_back(std::move(chr));
  }
  return out;
}

DimChar fp_character(const FusionRing& ring) {
  const auto dims = fp_dimensions(ring);
  return make_char(ring, std::vector<Complex>(dims.begin(), dims.end()));
}

DimChar conjugate_char(const DimChar& chr) {
  DimChar out = chr;
  for (auto& z : out.d) z = std::conj(z);
  return out;
}

bool is_spherical(const FusionRing& ring, const DimChar& chr, double tol) {
  for (int a = 0; a < ring.rank(); ++a)
    if (!approx_equal(chr[a], chr[ring.dual(a)], tol)) return false;
  return true;
}

double global_dimension(const DimChar& chr) {
  double sum = 0.0;
  for (auto z : chr.d) sum += std::norm(z);
  return sum;
}

Complex c_invariant(const DimChar& chr) {
  Complex sum = 0.0;
  for (auto z : chr.d) sum += z * z;
  return sum;
}

bool chars_equal(const DimChar& a, const DimChar& b, double tol) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (!approx_equal(a[i], b[i], tol)) return false;
  return true;
}

}  // namespace modtrace
