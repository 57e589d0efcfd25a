#include "modtrace/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace modtrace {

bool approx_equal(Complex a, Complex b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

double round_significant(double x, int digits) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round_significant(x));
  return buf;
}

std::string format_complex(Complex z) {
  auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  const double im = round_significant(clean(z.imag()));
  std::string s = format_real(clean(z.real()));
  s += im < 0 ? "-" : "+";
  s += format_real(std::abs(im));
  s += "·i";
  return s;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace modtrace
