#ifndef ARW_THERMAL_HPP
#define ARW_THERMAL_HPP

// Thermal-ground-state protocol for a witness Hamiltonian H = B^2 - A^2:
// Pauli expansion of H, Gibbs states rho(T) = exp(-H/T)/Z (k = 1), and
// temperature sweeps tracking how close rho(T) is to the intended ground state.

#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "arw/matrix.hpp"
#include "arw/witness.hpp"

namespace arw {

/// Single-qubit basis sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
inline Matrix pauli(int k) {
  using namespace std::complex_literals;
  switch (k) {
    case 0: return Matrix{{1.0, 0.0}, {0.0, 1.0}};
    case 1: return Matrix{{0.0, 1.0}, {1.0, 0.0}};
    case 2: return Matrix{{0.0, -1.0i}, {1.0i, 0.0}};
    case 3: return Matrix{{1.0, 0.0}, {0.0, -1.0}};
  }
  throw std::invalid_argument("pauli: index must be 0..3");
}

/// sigma_{i_1} (x) ... (x) sigma_{i_n}; the first index acts on the most
/// significant bit of the row index.
inline Matrix pauli_string(const std::vector<int>& index) {
  Matrix m = Matrix::identity(1);
  for (int k : index) m = kron(m, pauli(k));
  return m;
}

/// Real coefficients of H in the n-qubit Pauli product basis.  Multi-index
/// (i_1..i_n) is stored at flat position i_1*4^{n-1} + ... + i_n.
class PauliDecomposition {
 public:
  PauliDecomposition(int n, std::vector<double> beta) : n_(n), beta_(std::move(beta)) {
    if (n_ < 1) throw std::invalid_argument("PauliDecomposition: n must be >= 1");
    if (beta_.size() != (std::size_t{1} << (2 * n_)))
      throw DimensionError("PauliDecomposition: expected 4^n coefficients");
  }

  int qubits() const noexcept { return n_; }
  const std::vector<double>& coefficients() const noexcept { return beta_; }

  double operator[](const std::vector<int>& index) const { return beta_[flat(index)]; }
  double& operator[](const std::vector<int>& index) { return beta_[flat(index)]; }

  std::vector<int> multi_index(std::size_t flat_index) const {
    std::vector<int> idx(n_);
    for (int q = n_ - 1; q >= 0; --q) {
      idx[q] = static_cast<int>(flat_index & 3u);
      flat_index >>= 2;
    }
    return idx;
  }

  std::size_t flat(const std::vector<int>& index) const {
    if (index.size() != static_cast<std::size_t>(n_)) throw DimensionError("PauliDecomposition: index length");
    std::size_t f = 0;
    for (int k : index) {
      if (k < 0 || k > 3) throw std::invalid_argument("PauliDecomposition: index entries must be 0..3");
      f = f * 4 + static_cast<std::size_t>(k);
    }
    return f;
  }

 private:
  int n_;
  std::vector<double> beta_;
};

namespace detail {

inline int qubit_count(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0)
    throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

// A Pauli string is monomial: row r has its single nonzero in column r ^ flip,
// with value phase(r).  Bits are read most-significant first.
struct PauliAction {
  std::size_t flip = 0;
  std::size_t y_count = 0;
  std::size_t z_mask = 0;  // bits carrying Y or Z (sign-sensitive)

  Complex entry(std::size_t row) const {
    // Y = [[0,-i],[i,0]]: row bit 0 -> -i, row bit 1 -> +i.  Z: row bit 1 -> -1.
    // Per Y factor: (-i) * (-1)^{bit}.
    using namespace std::complex_literals;
    const std::size_t minus = static_cast<std::size_t>(__builtin_popcountll(row & z_mask));
    Complex v = (minus % 2 == 0) ? 1.0 : -1.0;
    switch (y_count % 4) {
      case 1: v *= -1.0i; break;
      case 2: v *= -1.0; break;
      case 3: v *= 1.0i; break;
      default: break;
    }
    return v;
  }
};

inline PauliAction pauli_action(const std::vector<int>& index) {
  PauliAction a;
  const std::size_t n = index.size();
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    const int k = index[q];
    if (k == 1 || k == 2) a.flip |= bit;
    if (k == 2 || k == 3) a.z_mask |= bit;
    if (k == 2) ++a.y_count;
  }
  return a;
}

}  // namespace detail

/// beta_I = Tr(H sigma_I) / 2^n, so that H = sum_I beta_I sigma_I exactly.
inline PauliDecomposition pauli_decompose(const HermitianMatrix& h, int n) {
  const std::size_t dim = h.dim();
  if (detail::qubit_count(dim) != n)
    throw DimensionError("pauli_decompose: dim " + std::to_string(dim) + " is not 2^" + std::to_string(n));
  const std::size_t terms = std::size_t{1} << (2 * n);
  PauliDecomposition d(n, std::vector<double>(terms));
  for (std::size_t f = 0; f < terms; ++f) {
    const auto act = detail::pauli_action(d.multi_index(f));
    // Tr(H S) = sum_r sum_c H(r,c) S(c,r); S(c, c^flip) nonzero.
    Complex tr = 0.0;
    for (std::size_t c = 0; c < dim; ++c) tr += h(c ^ act.flip, c) * act.entry(c);
    if (std::abs(tr.imag()) > 1e-12 * static_cast<double>(dim) * std::max(1.0, h.frobenius_norm()))
      throw ValidationError("pauli_decompose: complex coefficient for Hermitian input");
    d[d.multi_index(f)] = tr.real() / static_cast<double>(dim);
  }
  return d;
}

inline HermitianMatrix pauli_reconstruct(const PauliDecomposition& d) {
  const std::size_t dim = std::size_t{1} << d.qubits();
  Matrix m(dim);
  const auto& beta = d.coefficients();
  for (std::size_t f = 0; f < beta.size(); ++f) {
    if (beta[f] == 0.0) continue;
    const auto act = detail::pauli_action(d.multi_index(f));
    for (std::size_t r = 0; r < dim; ++r) m(r, r ^ act.flip) += beta[f] * act.entry(r);
  }
  return HermitianMatrix(m);
}

/// rho = sum_k w_k |v_k><v_k| / sum_k w_k with w_k = exp(-(E_k - E_0)/T).
inline DensityMatrix gibbs_state(const Spectrum& sp, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw std::invalid_argument("gibbs_state: temperature must be positive and finite");
  const std::size_t n = sp.dim();
  std::vector<double> w(n);
  double z = 0.0;
  for (std::size_t k = 0; k < n; ++k) z += (w[k] = std::exp(-(sp.values[k] - sp.values[0]) / temperature));
  Matrix rho(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = w[k] / z;
    if (p == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = p * sp.vectors(i, k);
      if (vi == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) rho(i, j) += vi * std::conj(sp.vectors(j, k));
    }
  }
  return DensityMatrix(HermitianMatrix(rho, 1e-10));
}

inline DensityMatrix gibbs_state(const HermitianMatrix& h, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw std::invalid_argument("gibbs_state: temperature must be positive and finite");
  return gibbs_state(eig_hermitian(h), temperature);
}

inline double purity(const DensityMatrix& rho) {
  double s = 0.0;
  for (const auto& z : rho.matrix().matrix().data()) s += std::norm(z);  // Tr(rho^2) = ||rho||_F^2
  return s;
}

struct ThermalRecord {
  double T = 0.0;
  double ground_fidelity = 0.0;
  double mean_W = 0.0;
  double purity = 0.0;
};

inline std::vector<ThermalRecord> temperature_sweep(const WitnessPair& p, const std::vector<double>& grid,
                                                    const PureState& reference) {
  if (grid.empty()) throw std::invalid_argument("temperature_sweep: empty grid");
  const HermitianMatrix w = witness_operator(p);
  if (reference.dim() != w.dim()) throw DimensionError("temperature_sweep: reference state dimension");
  const Spectrum sp = eig_hermitian(w);
  std::vector<ThermalRecord> out;
  out.reserve(grid.size());
  for (double t : grid) {
    const DensityMatrix rho = gibbs_state(sp, t);
    out.push_back({t, expectation(rho.matrix(), reference), expectation_mixed(w, rho), purity(rho)});
  }
  return out;
}

/// n points from tmin to tmax, geometric when `log_spacing`.
inline std::vector<double> temperature_grid(double tmin, double tmax, int points, bool log_spacing) {
  if (!(tmin > 0.0)) throw std::invalid_argument("temperature_grid: tmin must be > 0");
  if (tmax < tmin) throw std::invalid_argument("temperature_grid: tmax must be >= tmin");
  if (points < 1) throw std::invalid_argument("temperature_grid: points must be >= 1");
  if (points == 1) return {tmin};
  std::vector<double> g(points);
  for (int k = 0; k < points; ++k) {
    const double f = static_cast<double>(k) / (points - 1);
    g[k] = log_spacing ? std::exp(std::log(tmin) + f * (std::log(tmax) - std::log(tmin))) : tmin + f * (tmax - tmin);
  }
  g.front() = tmin;
  g.back() = tmax;
  return g;
}

inline constexpr const char* kSweepCsvHeader = "T,ground_fidelity,mean_W,purity";

inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<ThermalRecord>& records) {
  os << kSweepCsvHeader << '\n';
  for (const auto& r : records)
    os << format_g17(r.T) << ',' << format_g17(r.ground_fidelity) << ',' << format_g17(r.mean_W) << ','
       << format_g17(r.purity) << '\n';
}

inline std::vector<ThermalRecord> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSweepCsvHeader)
    throw ValidationError("sweep CSV: missing or wrong header");
  std::vector<ThermalRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::array<double, 4> v{};
    std::size_t pos = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t end = k < 3 ? line.find(',', pos) : line.size();
      if (end == std::string::npos) throw ValidationError("sweep CSV: expected 4 columns");
      try {
        v[k] = std::stod(line.substr(pos, end - pos));
      } catch (const std::exception&) {
        throw ValidationError("sweep CSV: bad number in '" + line + "'");
      }
      pos = end + 1;
    }
    out.push_back({v[0], v[1], v[2], v[3]});
  }
  return out;
}

}  // namespace arw

#endif  // ARW_THERMAL_HPP
