#ifndef ARW_TEST_SUPPORT_HPP
#define ARW_TEST_SUPPORT_HPP

// Generators and independent oracles shared by the test suites.  Nothing here
// calls the eigensolver under test.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "arw/matrix.hpp"

namespace arw::testing {

inline Matrix random_matrix(std::size_t dim, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline HermitianMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng, double scale = 1.0) {
  const Matrix m = random_matrix(dim, rng, scale);
  return HermitianMatrix(0.5 * (m + m.adjoint()));
}

inline std::vector<Complex> random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(dim);
  double n = 0.0;
  for (auto& z : v) {
    z = Complex(g(rng), g(rng));
    n += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(n);
  return v;
}

/// Eigenvalues of [[a, h],[conj h, b]] from the characteristic polynomial.
inline std::vector<double> eig2_closed_form(double a, double b, Complex h) {
  const double mean = 0.5 * (a + b);
  const double rad = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(h));
  return {mean - rad, mean + rad};
}

/// Eigenvalues of a 3x3 Hermitian matrix by the trigonometric cubic solution.
inline std::vector<double> eig3_closed_form(const Matrix& m) {
  const double a = m(0, 0).real(), b = m(1, 1).real(), c = m(2, 2).real();
  const Complex d = m(0, 1), e = m(1, 2), f = m(0, 2);
  const double p1 = std::norm(d) + std::norm(e) + std::norm(f);
  const double q = (a + b + c) / 3.0;
  const double p2 = (a - q) * (a - q) + (b - q) * (b - q) + (c - q) * (c - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  if (p == 0.0) return {q, q, q};
  // det((M - qI)/p)
  const double ap = (a - q) / p, bp = (b - q) / p, cp = (c - q) / p;
  const Complex dp = d / p, ep = e / p, fp = f / p;
  const double det = ap * bp * cp + 2.0 * (dp * ep * std::conj(fp)).real() - ap * std::norm(ep) -
                     bp * std::norm(fp) - cp * std::norm(dp);
  const double r = std::clamp(det / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double l3 = q + 2.0 * p * std::cos(phi);
  const double l1 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double l2 = 3.0 * q - l1 - l3;
  std::vector<double> out{l1, l2, l3};
  std::sort(out.begin(), out.end());
  return out;
}

inline double max_abs_diff(const Matrix& x, const Matrix& y) { return (x - y).max_abs(); }

}  // namespace arw::testing

#endif  // ARW_TEST_SUPPORT_HPP
