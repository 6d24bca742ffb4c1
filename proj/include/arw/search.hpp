#ifndef ARW_SEARCH_HPP
#define ARW_SEARCH_HPP

// Numerical search for witness pairs with the most negative lambda_min(B^2 - A^2)
// subject to 0 <= A <= B and a normalization.
//
// Each restart draws a random starting point, runs a penalty-only simplex phase
// to move toward the feasible set, then minimizes the penalized objective.  The
// final point is pulled back onto the feasible set along the segment to a
// strictly feasible reference pair (the constraints are linear matrix
// inequalities, so that segment stays in a convex set) and scored by its true
// lambda_min(W).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "arw/matrix.hpp"
#include "arw/simplex.hpp"
#include "arw/witness.hpp"

namespace arw {

enum class Normalization { spectra_in_0_2, fixed_trace_A_2, none };

inline std::optional<Normalization> parse_normalization(std::string_view s) {
  if (s == "spectra02" || s == "spectra_in_0_2") return Normalization::spectra_in_0_2;
  if (s == "traceA2" || s == "fixed_trace_A_2") return Normalization::fixed_trace_A_2;
  if (s == "none") return Normalization::none;
  return std::nullopt;
}

inline std::string_view to_string(Normalization n) {
  switch (n) {
    case Normalization::spectra_in_0_2: return "spectra02";
    case Normalization::fixed_trace_A_2: return "traceA2";
    case Normalization::none: return "none";
  }
  return "?";
}

struct SearchConfig {
  std::size_t dim = 2;
  int restarts = 200;
  std::uint64_t seed = 42;
  Normalization normalization = Normalization::spectra_in_0_2;
  bool require_diagonal_W = false;
  int max_iterations_per_restart = 2000;
  double penalty_weight = 1e3;

  void validate() const {
    if (dim < 1) throw std::invalid_argument("SearchConfig: dim must be >= 1");
    if (restarts < 1) throw std::invalid_argument("SearchConfig: restarts must be >= 1");
    if (max_iterations_per_restart < 1) throw std::invalid_argument("SearchConfig: iteration cap must be >= 1");
    if (!(penalty_weight > 0.0)) throw std::invalid_argument("SearchConfig: penalty_weight must be > 0");
  }
};

inline constexpr double kFeasibleTol = 1e-8;

struct SearchResult {
  WitnessPair best_pair;
  double objective = 0.0;             // lambda_min(W) of best_pair
  double feasibility_residual = 0.0;  // <= 0 means feasible
  int restart_index = 0;
  long evaluations = 0;
  std::vector<double> restart_objectives;  // NaN for restarts that ended infeasible
  bool unbounded = false;
  std::string diagnostic;
};

struct NoFeasiblePoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Worst constraint violation; <= 0 means feasible.
inline double feasibility(const WitnessPair& p, Normalization norm) {
  const Spectrum sa = eig_hermitian(p.A());
  const Spectrum sb = eig_hermitian(p.B());
  double r = std::max({-sa.values.front(), -min_eigenvalue(p.B() - p.A()), -sb.values.front()});
  switch (norm) {
    case Normalization::spectra_in_0_2:
      r = std::max({r, sa.values.back() - 2.0, sb.values.back() - 2.0});
      break;
    case Normalization::fixed_trace_A_2:
      r = std::max(r, std::abs(p.A().trace() - 2.0));
      break;
    case Normalization::none:
      break;
  }
  return r;
}

inline double off_diagonal_frobenius(const Matrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

inline double objective(const WitnessPair& p, const SearchConfig& cfg) {
  const HermitianMatrix w = witness_operator(p);
  const double excess = std::max(0.0, feasibility(p, cfg.normalization));
  double v = min_eigenvalue(w) + cfg.penalty_weight * excess * excess;
  if (cfg.require_diagonal_W) {
    const double off = off_diagonal_frobenius(w);
    v += cfg.penalty_weight * off * off;
  }
  return v;
}

namespace detail {

inline std::size_t parameter_count(std::size_t dim) { return dim == 2 ? 4 : 4 * dim * dim; }

// dim 2: (a, c, b, d) -> A = [[1+a, c],[c, 1-a]], B = [[b, d],[d, b]].
// Otherwise A = G^dagger G and B = A + K^dagger K with complex G, K given as
// interleaved (re, im) row-major entries; under fixed_trace_A_2, A is rescaled
// to trace 2.
inline WitnessPair pair_from_parameters(const std::vector<double>& x, std::size_t dim, Normalization norm) {
  if (dim == 2) return two_by_two(x[0], x[1], x[2], x[3]);
  const std::size_t sq = dim * dim;
  Matrix g(dim), k(dim);
  for (std::size_t e = 0; e < sq; ++e) {
    g(e / dim, e % dim) = Complex(x[2 * e], x[2 * e + 1]);
    k(e / dim, e % dim) = Complex(x[2 * sq + 2 * e], x[2 * sq + 2 * e + 1]);
  }
  HermitianMatrix a(matmul(g.adjoint(), g), 1e-9);
  if (norm == Normalization::fixed_trace_A_2 && a.trace() > 0.0) a = (2.0 / a.trace()) * a;
  const HermitianMatrix b = a + HermitianMatrix(matmul(k.adjoint(), k), 1e-9);
  return {a, b};
}

template <class Rng>
std::vector<double> starting_point(std::size_t dim, Rng& rng) {
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  if (dim == 2) {
    std::uniform_real_distribution<double> diag_b(1.0, 2.0);
    const double a = sym(rng), c = sym(rng), b = diag_b(rng), d = sym(rng);
    return {a, c, b, d};
  }
  const std::size_t sq = dim * dim;
  std::vector<double> x(4 * sq);
  for (std::size_t e = 0; e < 2 * sq; ++e) x[e] = 0.5 * sym(rng);
  for (std::size_t i = 0; i < dim; ++i) x[2 * (i * dim + i)] += 1.0;
  for (std::size_t e = 2 * sq; e < 4 * sq; ++e) x[e] = 0.7 * sym(rng);
  return x;
}

// Strictly feasible for every normalization.
inline WitnessPair reference_pair(std::size_t dim, Normalization norm) {
  const double s = norm == Normalization::fixed_trace_A_2 ? 2.0 / static_cast<double>(dim) : 1.0;
  return {s * HermitianMatrix::identity(dim), (1.5 * s) * HermitianMatrix::identity(dim)};
}

inline WitnessPair blend(const WitnessPair& p, const WitnessPair& q, double t) {
  return {(1.0 - t) * p.A() + t * q.A(), (1.0 - t) * p.B() + t * q.B()};
}

// Smallest t (to bisection precision) with blend(p, reference, t) feasible.
inline WitnessPair pull_feasible(const WitnessPair& p, Normalization norm) {
  if (feasibility(p, norm) <= 0.0) return p;
  const WitnessPair ref = reference_pair(p.dim(), norm);
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (feasibility(blend(p, ref, mid), norm) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return blend(p, ref, hi);
}

struct RestartOutcome {
  std::optional<WitnessPair> pair;
  double objective = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::infinity();
  long evaluations = 0;
};

inline RestartOutcome run_restart(const SearchConfig& cfg, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::vector<double> x = starting_point(cfg.dim, rng);
  RestartOutcome out;

  auto to_pair = [&](const std::vector<double>& v) { return pair_from_parameters(v, cfg.dim, cfg.normalization); };
  auto penalty_only = [&](const std::vector<double>& v) {
    const WitnessPair p = to_pair(v);
    const double e = std::max(0.0, feasibility(p, cfg.normalization));
    double f = e * e;
    if (cfg.require_diagonal_W) {
      const double off = off_diagonal_frobenius(witness_operator(p));
      f += off * off;
    }
    return f;
  };
  auto penalized = [&](const std::vector<double>& v) { return objective(to_pair(v), cfg); };

  int budget = cfg.max_iterations_per_restart;
  if (penalty_only(x) > 0.0) {
    SimplexOptions o;
    o.max_iterations = std::max(1, budget / 4);
    o.initial_step = 0.1;
    o.f_tol = 0.0;
    const SimplexResult r = nelder_mead(penalty_only, x, o);
    out.evaluations += r.evaluations;
    budget -= r.iterations;
    x = r.x;
  }
  if (budget > 0) {
    SimplexOptions o;
    o.max_iterations = budget;
    o.initial_step = 0.1;
    const SimplexResult r = nelder_mead(penalized, x, o);
    out.evaluations += r.evaluations;
    x = r.x;
  }

  const WitnessPair p = pull_feasible(to_pair(x), cfg.normalization);
  out.residual = feasibility(p, cfg.normalization);
  if (out.residual <= kFeasibleTol) {
    out.objective = min_violation(p);
    out.pair = p;
  }
  return out;
}

}  // namespace detail

/// Runs cfg.restarts independent restarts; restart k is seeded from (seed, k)
/// only, so the result does not depend on evaluation order.  Returns the
/// feasible restart with the lowest objective (ties: lowest restart index).
inline SearchResult search(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<detail::RestartOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(cfg.restarts));
  for (int k = 0; k < cfg.restarts; ++k) outcomes.push_back(detail::run_restart(cfg, k));

  long evaluations = 0;
  int best = -1;
  std::vector<double> per_restart;
  for (int k = 0; k < cfg.restarts; ++k) {
    const auto& o = outcomes[static_cast<std::size_t>(k)];
    evaluations += o.evaluations;
    per_restart.push_back(o.objective);
    if (!o.pair) continue;
    if (best < 0 || o.objective < outcomes[static_cast<std::size_t>(best)].objective) best = k;
  }
  if (best < 0)
    throw NoFeasiblePoint("search: no feasible point found in " + std::to_string(cfg.restarts) + " restarts");

  const auto& b = outcomes[static_cast<std::size_t>(best)];
  SearchResult r{*b.pair, b.objective, b.residual, best, evaluations, std::move(per_restart), false, {}};

  if (cfg.normalization == Normalization::none && r.objective < -kReportTol) {
    // The cone constraints are invariant under (A, B) -> s (A, B) while W scales by s^2.
    const WitnessPair doubled = r.best_pair.scaled(2.0);
    const double scaled_objective = min_violation(doubled);
    if (feasibility(doubled, cfg.normalization) <= kFeasibleTol && scaled_objective < r.objective) {
      r.unbounded = true;
      std::ostringstream os;
      os.precision(17);
      os << "unbounded: without normalization, scaling the pair by 2 keeps it feasible and moves lambda_min(W) from "
         << r.objective << " to " << scaled_objective << " (factor " << scaled_objective / r.objective
         << "); the reported objective is not a converged optimum";
      r.diagnostic = os.str();
    }
  }
  return r;
}

}  // namespace arw

#endif  // ARW_SEARCH_HPP
