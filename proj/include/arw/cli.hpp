#ifndef ARW_CLI_HPP
#define ARW_CLI_HPP

// Command implementations behind the `arw` executable.  Each command writes a
// human-readable report to `out`, diagnostics to `err`, and returns the exit
// code: 0 success, 1 usage error, 2 malformed or failed-validation input,
// 3 verification ran but the quantumness conditions were not met.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "arw/enlargement.hpp"
#include "arw/io.hpp"
#include "arw/search.hpp"
#include "arw/thermal.hpp"
#include "arw/witness.hpp"

namespace arw::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBadInput = 2, kNotWitnessed = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::string g17(double x) { return format_g17(x); }

namespace detail {

struct Known {
  const char* label;
  double value;
};

inline std::vector<Known> known_constants() {
  using namespace closed_form;
  return {{"(65-4*sqrt(295))/80", w295_low()},   {"(65+4*sqrt(295))/80", w295_high()},
          {"(501-20*sqrt(759))/1600", w759_low()}, {"(501+20*sqrt(759))/1600", w759_high()},
          {"1+sqrt(295)/40", mean_A_00()},        {"3/2", mean_B_00()},
          {"(20-sqrt(295))/40", mean_BmA_00()},   {"0", 0.0}};
}

/// "closed form = decimal" when x matches a known constant within 1e-12.
inline std::string annotate(double x) {
  for (const auto& k : known_constants())
    if (std::abs(x - k.value) <= 1e-12) return std::string(k.label) + " = " + g17(x);
  return g17(x);
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_report(std::ostream& out, const ARReport& r) {
  out << "  <A>        = " << annotate(r.mean_A) << '\n'
      << "  <B>        = " << annotate(r.mean_B) << '\n'
      << "  <B-A>      = " << annotate(r.mean_BmA) << '\n'
      << "  <B^2-A^2>  = " << annotate(r.mean_W) << '\n'
      << "  A psd: " << yes_no(r.A_psd) << "   B psd: " << yes_no(r.B_psd) << "   B-A psd: " << yes_no(r.BmA_psd)
      << '\n'
      << "  lambda_min(B^2-A^2) = " << annotate(r.min_eig_W) << '\n'
      << "  verdict: " << (r.quantumness_witnessed ? "quantumness witnessed" : "classical constraint satisfied")
      << '\n';
}

inline std::string basis_label(std::size_t dim) {
  std::string s = "|";
  for (std::size_t d = dim; d > 1; d >>= 1) s += '0';
  return s + ">";
}

template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const OrderingError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const io::FormatError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace detail

struct DemoResult {
  ARReport report;
  std::vector<double> w_spectrum;
};

inline DemoResult demo_result() {
  const WitnessPair p = named_pair(PairId::two_qubit);
  return {verify_ar(p, PureState::basis(4, 0)), eig_hermitian(witness_operator(p)).values};
}

inline int cmd_demo(std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const DemoResult d = demo_result();
    out << "Two-qubit product state |00> with the built-in pair two_qubit\n";
    detail::print_report(out, d.report);
    out << "  spectrum of B^2-A^2:\n";
    for (double v : d.w_spectrum) out << "    " << detail::annotate(v) << '\n';
    return kOk;
  });
}

struct VerifyOptions {
  std::string pair = "two_qubit";
  std::optional<std::string> state_path;
  double tol = 1e-10;
};

inline int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (o.tol < 0.0) throw UsageError("--tol must be >= 0");
    const WitnessPair p = io::load_pair(o.pair);
    const State s = o.state_path ? io::any_state_from_json(io::read_json_file(*o.state_path))
                                 : State(PureState::basis(p.dim(), 0));
    if (state_dim(s) != p.dim())
      throw io::FormatError("state dimension " + std::to_string(state_dim(s)) + " does not match pair dimension " +
                            std::to_string(p.dim()));
    const ARReport r = verify_ar(p, s, o.tol);
    out << "AR check for pair '" << o.pair << "' (dim " << p.dim() << ") on "
        << (o.state_path ? "'" + *o.state_path + "'" : detail::basis_label(p.dim())) << '\n';
    detail::print_report(out, r);
    return r.quantumness_witnessed ? kOk : kNotWitnessed;
  });
}

struct EnlargeOptions {
  int n = 2;
  std::string ground = "pair295";
  std::string filler = "pair759";
  std::optional<std::string> plan_path;
  std::optional<std::string> out_path;
};

inline int cmd_enlarge(const EnlargeOptions& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    WitnessPair p = [&] {
      if (o.plan_path) return io::realize(io::plan_from_json(io::read_json_file(*o.plan_path)));
      if (o.n < 1) throw UsageError("--n must be >= 1");
      if (o.n > 12) throw UsageError("--n above 12 is not supported with dense storage");
      return embed_two_group(o.n, io::load_pair(o.ground), io::load_pair(o.filler));
    }();
    const GroundReport g = validate_ground(p);
    const double mv = structured_min_violation(p);
    out << "Embedded pair: dim " << p.dim() << '\n'
        << "  ground energy        = " << detail::annotate(g.ground_energy) << '\n'
        << "  min_violation        = " << detail::annotate(mv) << '\n'
        << "  ground unique        : " << detail::yes_no(g.unique) << '\n'
        << "  ground state is e_1  : " << detail::yes_no(g.is_e1) << " (index " << g.ground_index << ")\n"
        << "  spectral gap         = " << g17(g.gap) << '\n'
        << "  method               : " << (g.used_blocks ? "2x2 slot blocks" : "dense eigensolver") << '\n';
    if (o.out_path) {
      io::write_json_file(*o.out_path, io::to_json(p));
      out << "  wrote " << *o.out_path << '\n';
    }
    return kOk;
  });
}

struct PauliOptions {
  std::optional<std::string> matrix_path;
  std::optional<std::string> pair;  // decompose B^2-A^2 of this pair instead
};

inline int cmd_pauli(const PauliOptions& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (o.matrix_path.has_value() == o.pair.has_value())
      throw UsageError("pauli needs exactly one of a matrix file or --pair");
    const HermitianMatrix h = o.pair ? witness_operator(io::load_pair(*o.pair))
                                     : io::hermitian_from_json(io::read_json_file(*o.matrix_path));
    int n = 0;
    try {
      n = arw::detail::qubit_count(h.dim());
    } catch (const DimensionError& e) {
      throw io::FormatError(e.what());
    }
    const PauliDecomposition d = pauli_decompose(h, n);
    out << "Pauli coefficients beta = Tr(H sigma_I)/2^" << n << " (|beta| > 1e-12):\n";
    const auto& beta = d.coefficients();
    for (std::size_t f = 0; f < beta.size(); ++f) {
      if (std::abs(beta[f]) <= 1e-12) continue;
      const auto idx = d.multi_index(f);
      std::string label = "(";
      for (std::size_t q = 0; q < idx.size(); ++q) label += (q ? "," : "") + std::to_string(idx[q]);
      out << "  " << label << ")  " << g17(beta[f]) << '\n';
    }
    return kOk;
  });
}

struct ThermalOptions {
  std::string pair = "two_qubit";
  double tmin = 0.001;
  double tmax = 1.0;
  int points = 4;
  bool log_spacing = false;
  std::optional<std::string> out_csv;
};

inline int cmd_thermal(const ThermalOptions& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (!(o.tmin > 0.0)) throw UsageError("--tmin must be > 0");
    if (o.tmax < o.tmin) throw UsageError("--tmax must be >= --tmin");
    if (o.points < 1) throw UsageError("--points must be >= 1");
    const WitnessPair p = io::load_pair(o.pair);
    const auto grid = temperature_grid(o.tmin, o.tmax, o.points, o.log_spacing);
    const auto records = temperature_sweep(p, grid, PureState::basis(p.dim(), 0));
    if (o.out_csv) {
      std::ofstream f(*o.out_csv);
      if (!f) throw io::FormatError("cannot write '" + *o.out_csv + "'");
      write_sweep_csv(f, records);
      out << "Thermal sweep of B^2-A^2 for pair '" << o.pair << "', reference " << detail::basis_label(p.dim())
          << ", " << records.size() << " points -> " << *o.out_csv << '\n';
      for (const auto& r : records)
        out << "  T = " << g17(r.T) << "  ground_fidelity = " << g17(r.ground_fidelity) << "  mean_W = "
            << g17(r.mean_W) << "  purity = " << g17(r.purity) << '\n';
    } else {
      write_sweep_csv(out, records);
    }
    return kOk;
  });
}

struct SearchOptions {
  SearchConfig config;
  std::string normalization = "spectra02";
  std::optional<std::string> out_path;
};

inline int cmd_search(SearchOptions o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto norm = parse_normalization(o.normalization);
    if (!norm) throw UsageError("--normalization must be spectra02, traceA2 or none");
    o.config.normalization = *norm;
    try {
      o.config.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult r = search(o.config);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << "Witness search: dim " << o.config.dim << ", normalization " << to_string(*norm) << ", restarts "
        << o.config.restarts << ", seed " << o.config.seed
        << (o.config.require_diagonal_W ? ", diagonal W required" : "") << '\n'
        << "  objective lambda_min(B^2-A^2) = " << g17(r.objective) << '\n'
        << "  feasibility residual          = " << g17(r.feasibility_residual) << '\n'
        << "  best restart                  = " << r.restart_index << '\n'
        << "  evaluations                   = " << r.evaluations << '\n'
        << "  elapsed seconds               = " << g17(secs) << '\n';
    if (r.unbounded) out << "  " << r.diagnostic << '\n';
    const auto j = io::to_json(r);
    if (o.out_path) {
      io::write_json_file(*o.out_path, j);
      out << "  wrote " << *o.out_path << '\n';
    } else {
      out << j.dump(2) << '\n';
    }
    return kOk;
  });
}

}  // namespace arw::cli

#endif  // ARW_CLI_HPP
