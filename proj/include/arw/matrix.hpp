#ifndef ARW_MATRIX_HPP
#define ARW_MATRIX_HPP

// Dense complex linear algebra for small Hermitian operators.
//
// Matrix is a plain row-major dense complex matrix.  HermitianMatrix wraps a
// Matrix whose Hermiticity was checked (residual <= 1e-12) and then removed by
// symmetrization, so downstream code can rely on exact Hermiticity.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arw {

using Complex = std::complex<double>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kHermitianTol = 1e-12;

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  Matrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim_ * dim_)
      throw DimensionError("Matrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                           std::to_string(data_.size()));
  }
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DimensionError("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::vector<double>& diag) {
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }

  const std::vector<Complex>& data() const noexcept { return data_; }

  Matrix adjoint() const {
    Matrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  /// Largest |M_ij - conj(M_ji)|.
  double hermiticity_residual() const {
    double r = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_dim(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_dim(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_same_dim(const Matrix& o, const char* op) const {
    if (o.dim_ != dim_)
      throw DimensionError(std::string("Matrix ") + op + ": dimension mismatch " + std::to_string(dim_) +
                           " vs " + std::to_string(o.dim_));
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

class HermitianMatrix {
 public:
  /// Validates finiteness and Hermiticity (residual <= tol), then stores (M + M^dagger)/2.
  explicit HermitianMatrix(const Matrix& m, double tol = kHermitianTol) : m_(m.dim()) {
    if (m.dim() == 0) throw ValidationError("HermitianMatrix: dimension must be >= 1");
    if (!m.all_finite()) throw ValidationError("HermitianMatrix: non-finite entry");
    const double residual = m.hermiticity_residual();
    if (residual > tol) {
      std::ostringstream os;
      os.precision(3);
      os << "HermitianMatrix: Hermiticity residual " << std::scientific << residual << " exceeds " << tol;
      throw ValidationError(os.str());
    }
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
      m_(i, i) = m(i, i).real();
      for (std::size_t j = i + 1; j < n; ++j) {
        const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
        m_(i, j) = v;
        m_(j, i) = std::conj(v);
      }
    }
  }

  HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : HermitianMatrix(Matrix(rows)) {}

  static HermitianMatrix identity(std::size_t dim) { return HermitianMatrix(Matrix::identity(dim)); }
  static HermitianMatrix diagonal(const std::vector<double>& d) { return HermitianMatrix(Matrix::diagonal(d)); }

  std::size_t dim() const noexcept { return m_.dim(); }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }
  operator const Matrix&() const noexcept { return m_; }

  double frobenius_norm() const { return m_.frobenius_norm(); }
  double trace() const { return m_.trace().real(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.m_ + b.m_);
  }
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.m_ - b.m_);
  }
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a) { return HermitianMatrix(s * a.m_); }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  Matrix m_;
};

/// Dense product.  Zero entries of the left factor are skipped, which keeps
/// products of sparse structured matrices (e.g. slot embeddings) cheap.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim())
    throw DimensionError("matmul: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  const std::size_t n = a.dim();
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

/// M * M for Hermitian M, re-validated as Hermitian.
inline HermitianMatrix square(const HermitianMatrix& m) { return HermitianMatrix(matmul(m, m)); }

/// Kronecker product; entry (i*dimN + k, j*dimN + l) = M(i,j) * N(k,l).
inline Matrix kron(const Matrix& m, const Matrix& n) {
  const std::size_t dm = m.dim(), dn = n.dim();
  Matrix r(dm * dn);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dm; ++j) {
      const Complex mij = m(i, j);
      if (mij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < dn; ++k)
        for (std::size_t l = 0; l < dn; ++l) r(i * dn + k, j * dn + l) = mij * n(k, l);
    }
  return r;
}

inline HermitianMatrix kron(const HermitianMatrix& m, const HermitianMatrix& n) {
  return HermitianMatrix(kron(m.matrix(), n.matrix()));
}

/// Eigen-decomposition of a Hermitian matrix.  Eigenvalues ascend and column k
/// of `vectors` is the eigenvector of `values[k]`.
struct Spectrum {
  std::vector<double> values;
  Matrix vectors;

  std::size_t dim() const noexcept { return values.size(); }

  std::vector<Complex> vector(std::size_t k) const {
    std::vector<Complex> v(dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i] = vectors(i, k);
    return v;
  }
};

struct EigenOptions {
  int max_sweeps = 100;
  double relative_tol = 1e-14;
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary U = diag(1, e^{-i phi}) * R(theta) acting
// on coordinates (p,q), where a(p,q) = |a(p,q)| e^{i phi}.  a <- U^dagger a U, v <- v U.
inline void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real(), aqq = a(q, q).real();

  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex upp = c, upq = s;
  const Complex uqp = -s * std::conj(phase), uqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
}

}  // namespace detail

/// Cyclic Jacobi eigensolver.  Converged once the off-diagonal Frobenius norm
/// drops to relative_tol * ||M||_F; throws ConvergenceError after max_sweeps.
inline Spectrum eig_hermitian(const HermitianMatrix& m, const EigenOptions& opt = {}) {
  const std::size_t n = m.dim();
  Matrix a = m.matrix();
  Matrix v = Matrix::identity(n);
  const double threshold = opt.relative_tol * m.frobenius_norm();

  int sweep = 0;
  for (double off = detail::off_diagonal_norm(a); off > threshold; off = detail::off_diagonal_norm(a)) {
    if (sweep++ == opt.max_sweeps) {
      std::ostringstream os;
      os << "eig_hermitian: no convergence after " << opt.max_sweeps << " sweeps (off-diagonal norm " << off
         << ")";
      throw ConvergenceError(os.str());
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  Spectrum s{std::vector<double>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    s.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) s.vectors(i, k) = v(i, order[k]);
  }
  return s;
}

inline double min_eigenvalue(const HermitianMatrix& m) { return eig_hermitian(m).values.front(); }
inline double max_eigenvalue(const HermitianMatrix& m) { return eig_hermitian(m).values.back(); }

/// True iff lambda_min(M) >= -tol.
inline bool is_psd(const HermitianMatrix& m, double tol = 1e-10) {
  if (tol < 0.0) throw std::invalid_argument("is_psd: tol must be >= 0");
  return min_eigenvalue(m) >= -tol;
}

inline bool is_diagonal(const Matrix& m, double tol = 1e-12) {
  if (tol < 0.0) throw std::invalid_argument("is_diagonal: tol must be >= 0");
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j && std::abs(m(i, j)) > tol) return false;
  return true;
}

/// Normalized state vector (norm 1 within 1e-10).
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.empty()) throw ValidationError("PureState: empty amplitude list");
    for (const auto& z : amp_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ValidationError("PureState: non-finite amplitude");
    const double norm = std::sqrt(norm_squared(amp_));
    if (std::abs(norm - 1.0) > 1e-10) {
      std::ostringstream os;
      os << "PureState: norm " << norm << " differs from 1 by more than 1e-10";
      throw ValidationError(os.str());
    }
  }

  static PureState normalized(std::vector<Complex> amplitudes) {
    const double norm = std::sqrt(norm_squared(amplitudes));
    if (!(norm > 0.0) || !std::isfinite(norm)) throw ValidationError("PureState: cannot normalize zero vector");
    for (auto& z : amplitudes) z /= norm;
    return PureState(std::move(amplitudes));
  }

  /// Computational basis vector |k>.
  static PureState basis(std::size_t dim, std::size_t k) {
    if (k >= dim) throw DimensionError("PureState::basis: index out of range");
    std::vector<Complex> v(dim);
    v[k] = 1.0;
    return PureState(std::move(v));
  }

  std::size_t dim() const noexcept { return amp_.size(); }
  const std::vector<Complex>& amplitudes() const noexcept { return amp_; }
  const Complex& operator[](std::size_t i) const noexcept { return amp_[i]; }

 private:
  static double norm_squared(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return s;
  }

  std::vector<Complex> amp_;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianMatrix rho) : rho_(std::move(rho)) {
    const double tr = rho_.trace();
    if (std::abs(tr - 1.0) > 1e-10) {
      std::ostringstream os;
      os << "DensityMatrix: trace " << tr << " differs from 1 by more than 1e-10";
      throw ValidationError(os.str());
    }
    const double lmin = min_eigenvalue(rho_);
    if (lmin < -1e-10) {
      std::ostringstream os;
      os << "DensityMatrix: negative eigenvalue " << lmin;
      throw ValidationError(os.str());
    }
  }

  static DensityMatrix from_pure(const PureState& s) {
    const std::size_t n = s.dim();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = s[i] * std::conj(s[j]);
    return DensityMatrix(HermitianMatrix(m));
  }

  static DensityMatrix maximally_mixed(std::size_t dim) {
    return DensityMatrix((1.0 / static_cast<double>(dim)) * HermitianMatrix::identity(dim));
  }

  std::size_t dim() const noexcept { return rho_.dim(); }
  const HermitianMatrix& matrix() const noexcept { return rho_; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return rho_(i, j); }

 private:
  HermitianMatrix rho_;
};

namespace detail {

inline double checked_real(Complex z, const char* where) {
  if (std::abs(z.imag()) > 1e-9) {
    std::ostringstream os;
    os << where << ": imaginary residual " << z.imag() << " (corrupted Hermiticity?)";
    throw ValidationError(os.str());
  }
  return z.real();
}

}  // namespace detail

/// <s|M|s>.
inline double expectation(const HermitianMatrix& m, const PureState& s) {
  if (m.dim() != s.dim())
    throw DimensionError("expectation: operator dim " + std::to_string(m.dim()) + " vs state dim " +
                         std::to_string(s.dim()));
  Complex acc = 0.0;
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == Complex(0.0)) continue;
    Complex row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += m(i, j) * s[j];
    acc += std::conj(s[i]) * row;
  }
  return detail::checked_real(acc, "expectation");
}

/// Tr(M rho).
inline double expectation_mixed(const HermitianMatrix& m, const DensityMatrix& rho) {
  if (m.dim() != rho.dim())
    throw DimensionError("expectation_mixed: operator dim " + std::to_string(m.dim()) + " vs state dim " +
                         std::to_string(rho.dim()));
  Complex acc = 0.0;
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * rho(j, i);
  return detail::checked_real(acc, "expectation_mixed");
}

}  // namespace arw

#endif  // ARW_MATRIX_HPP
