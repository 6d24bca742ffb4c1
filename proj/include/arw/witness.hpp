#ifndef ARW_WITNESS_HPP
#define ARW_WITNESS_HPP

// Alicki-van Ryn witness pairs.
//
// A classical (commutative) model obeys 0 <= A <= B  =>  A^2 <= B^2, so every
// state satisfies <A> >= 0, <B> >= 0, <B-A> >= 0 and <B^2-A^2> >= 0.  A pair
// with A, B, B-A positive semidefinite and a state with <B^2-A^2> < 0
// certifies non-commutativity ("quantumness"), even for product states.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "arw/matrix.hpp"

namespace arw {

class WitnessPair {
 public:
  WitnessPair(HermitianMatrix a, HermitianMatrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.dim() != b_.dim())
      throw DimensionError("WitnessPair: dim(A) = " + std::to_string(a_.dim()) +
                           " differs from dim(B) = " + std::to_string(b_.dim()));
  }

  std::size_t dim() const noexcept { return a_.dim(); }
  const HermitianMatrix& A() const noexcept { return a_; }
  const HermitianMatrix& B() const noexcept { return b_; }

  WitnessPair scaled(double s) const { return {s * a_, s * b_}; }

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;

 private:
  HermitianMatrix a_;
  HermitianMatrix b_;
};

/// Outcome of checking the four AR conditions on one state.
struct ARReport {
  double mean_A = 0.0;
  double mean_B = 0.0;
  double mean_BmA = 0.0;
  double mean_W = 0.0;
  bool A_psd = false;
  bool B_psd = false;
  bool BmA_psd = false;
  double min_eig_W = 0.0;
  bool quantumness_witnessed = false;
};

/// A strictly negative <W> below this is needed to call the constraint violated.
inline constexpr double kReportTol = 1e-12;

/// W = B*B - A*A.
inline HermitianMatrix witness_operator(const WitnessPair& p) {
  return HermitianMatrix(matmul(p.B(), p.B()) - matmul(p.A(), p.A()));
}

inline double min_violation(const WitnessPair& p) { return min_eigenvalue(witness_operator(p)); }

using State = std::variant<PureState, DensityMatrix>;

inline double expectation(const HermitianMatrix& m, const State& s) {
  return std::visit(
      [&](const auto& st) {
        if constexpr (std::is_same_v<std::decay_t<decltype(st)>, PureState>)
          return expectation(m, st);
        else
          return expectation_mixed(m, st);
      },
      s);
}

inline std::size_t state_dim(const State& s) {
  return std::visit([](const auto& st) { return st.dim(); }, s);
}

inline ARReport verify_ar(const WitnessPair& p, const State& s, double tol = 1e-10) {
  if (tol < 0.0) throw std::invalid_argument("verify_ar: tol must be >= 0");
  if (state_dim(s) != p.dim())
    throw DimensionError("verify_ar: pair dim " + std::to_string(p.dim()) + " vs state dim " +
                         std::to_string(state_dim(s)));
  const HermitianMatrix bma = p.B() - p.A();
  const HermitianMatrix w = witness_operator(p);

  ARReport r;
  r.mean_A = expectation(p.A(), s);
  r.mean_B = expectation(p.B(), s);
  r.mean_BmA = expectation(bma, s);
  r.mean_W = expectation(w, s);
  r.A_psd = is_psd(p.A(), tol);
  r.B_psd = is_psd(p.B(), tol);
  r.BmA_psd = is_psd(bma, tol);
  r.min_eig_W = min_eigenvalue(w);
  r.quantumness_witnessed = r.A_psd && r.B_psd && r.BmA_psd && r.mean_W < -kReportTol;
  return r;
}

enum class PairId { pair759, pair295, two_qubit };

inline std::optional<PairId> parse_pair_id(std::string_view name) {
  if (name == "pair759") return PairId::pair759;
  if (name == "pair295") return PairId::pair295;
  if (name == "two_qubit") return PairId::two_qubit;
  return std::nullopt;
}

inline std::string_view to_string(PairId id) {
  switch (id) {
    case PairId::pair759: return "pair759";
    case PairId::pair295: return "pair295";
    case PairId::two_qubit: return "two_qubit";
  }
  return "?";
}

namespace closed_form {

// Every constant is an integer ratio plus at most one square root.
inline double sqrt295() { return std::sqrt(295.0); }
inline double sqrt759() { return std::sqrt(759.0); }

/// lambda_min of B2^2 - A2^2, and <00|W|00> for the two-qubit pair: (65 - 4 sqrt 295)/80.
inline double w295_low() { return (65.0 - 4.0 * sqrt295()) / 80.0; }
inline double w295_high() { return (65.0 + 4.0 * sqrt295()) / 80.0; }
/// lambda_min of B1^2 - A1^2: (501 - 20 sqrt 759)/1600.
inline double w759_low() { return (501.0 - 20.0 * sqrt759()) / 1600.0; }
inline double w759_high() { return (501.0 + 20.0 * sqrt759()) / 1600.0; }

inline double mean_A_00() { return 1.0 + sqrt295() / 40.0; }
inline double mean_B_00() { return 3.0 / 2.0; }
inline double mean_BmA_00() { return (20.0 - sqrt295()) / 40.0; }

}  // namespace closed_form

namespace detail {

// [[1+x, c],[c, 1-x]] and [[b, d],[d, b]]
inline WitnessPair two_by_two(double x, double c, double b, double d) {
  return {HermitianMatrix{{1.0 + x, c}, {c, 1.0 - x}}, HermitianMatrix{{b, d}, {d, b}}};
}

}  // namespace detail

/// Canonical pairs.  pair759 = (A1, B1), pair295 = (A2, B2); two_qubit is the
/// 4x4 pair with pair295 on the outer corners {0,3} and pair759 on {1,2}.
///
/// lambda_min(B^2-A^2) is (65-4*sqrt295)/80 for pair295 and
/// (501-20*sqrt759)/1600 for pair759 (not the other way round).
inline WitnessPair named_pair(PairId id) {
  switch (id) {
    case PairId::pair759:
      return detail::two_by_two(closed_form::sqrt759() / 160.0, -25.0 / 32.0, 5.0 / 4.0, -5.0 / 8.0);
    case PairId::pair295:
      return detail::two_by_two(closed_form::sqrt295() / 40.0, -27.0 / 40.0, 3.0 / 2.0, -9.0 / 20.0);
    case PairId::two_qubit: {
      const double x2 = closed_form::sqrt295() / 40.0, x1 = closed_form::sqrt759() / 160.0;
      const HermitianMatrix a{{1.0 + x2, 0.0, 0.0, -27.0 / 40.0},
                              {0.0, 1.0 + x1, -25.0 / 32.0, 0.0},
                              {0.0, -25.0 / 32.0, 1.0 - x1, 0.0},
                              {-27.0 / 40.0, 0.0, 0.0, 1.0 - x2}};
      const HermitianMatrix b{{3.0 / 2.0, 0.0, 0.0, -9.0 / 20.0},
                              {0.0, 5.0 / 4.0, -5.0 / 8.0, 0.0},
                              {0.0, -5.0 / 8.0, 5.0 / 4.0, 0.0},
                              {-9.0 / 20.0, 0.0, 0.0, 3.0 / 2.0}};
      return {a, b};
    }
  }
  throw std::invalid_argument("named_pair: unknown id");
}

inline WitnessPair named_pair(std::string_view name) {
  const auto id = parse_pair_id(name);
  if (!id) throw std::invalid_argument("named_pair: unknown id '" + std::string(name) + "'");
  return named_pair(*id);
}

}  // namespace arw

#endif  // ARW_WITNESS_HPP
