#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace modtrace {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kDefaultTolerance = 1e-9;

/// Relative-to-unit comparison: |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(Complex a, Complex b, double tol = kDefaultTolerance);

/// Rounds to `digits` significant digits and folds -0 into 0.
double round_significant(double x, int digits = 12);

/// Formats with 12 significant digits ("%.12g"), never printing "-0".
std::string format_real(double x);

/// "re+im·i" with 12 significant digits per part; parts below 1e-12 print as 0.
std::string format_complex(Complex z);

/// Max-norm of a complex matrix (largest entry magnitude).
double max_abs(const ComplexMatrix& m);

/// One entry of a rule violation found by a validator.
struct Violation {
  std::string rule;
  std::vector<int> where;
  std::string lhs;
  std::string rhs;
};

/// Result of checking a family of axioms; lists every violation found.
struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  void add(std::string rule, std::vector<int> where, std::string lhs, std::string rhs) {
    violations.push_back({std::move(rule), std::move(where), std::move(lhs), std::move(rhs)});
  }
};

}  // namespace modtrace
