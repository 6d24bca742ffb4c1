#ifndef ARW_IO_HPP
#define ARW_IO_HPP

// JSON file formats.
//
//   matrix : {"dim": d, "entries": [[[re, im], ...d], ...d]}   (row-major)
//   state  : {"amplitudes": [[re, im], ...]}
//   pair   : {"A": <matrix>, "B": <matrix>}
//   plan   : {"n": n, "ground": <pair|id>, "filler": <pair|id>}  or  {"n": n, "slots": [<pair|id>, ...]}
//   search : {"objective": x, "feasibility_residual": r, "restart_index": k, "evaluations": m, "pair": <pair>}
//
// Wherever a pair is accepted, a string naming a built-in pair (pair295,
// pair759, two_qubit) may be given instead.  Every parse problem is reported
// as FormatError.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "arw/enlargement.hpp"
#include "arw/matrix.hpp"
#include "arw/search.hpp"
#include "arw/witness.hpp"

namespace arw::io {

using json = nlohmann::json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Complex complex_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError(std::string(what) + ": each entry must be a [re, im] pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

// Rethrows library validation errors as FormatError with context.
template <class F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const json::exception& e) {
    throw FormatError(what + ": " + e.what());
  } catch (const std::exception& e) {
    throw FormatError(what + ": " + e.what());
  }
}

}  // namespace detail

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(detail::complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

inline json to_json(const HermitianMatrix& m) { return to_json(m.matrix()); }

inline json to_json(const WitnessPair& p) { return {{"A", to_json(p.A())}, {"B", to_json(p.B())}}; }

inline json to_json(const PureState& s) {
  json amps = json::array();
  for (const auto& z : s.amplitudes()) amps.push_back(detail::complex_to_json(z));
  return {{"amplitudes", std::move(amps)}};
}

inline json to_json(const SearchResult& r) {
  json j = {{"objective", r.objective},
            {"feasibility_residual", r.feasibility_residual},
            {"restart_index", r.restart_index},
            {"evaluations", r.evaluations},
            {"pair", to_json(r.best_pair)}};
  if (r.unbounded) {
    j["unbounded"] = true;
    j["diagnostic"] = r.diagnostic;
  }
  return j;
}

inline Matrix matrix_from_json(const json& j) {
  return detail::guarded("matrix", [&] {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
      throw FormatError("matrix: expected object with \"dim\" and \"entries\"");
    const auto& d = j.at("dim");
    if (!d.is_number_integer() || d.get<long long>() < 1) throw FormatError("matrix: \"dim\" must be a positive integer");
    const auto dim = static_cast<std::size_t>(d.get<long long>());
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != dim)
      throw FormatError("matrix: \"entries\" must have " + std::to_string(dim) + " rows");
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!rows[i].is_array() || rows[i].size() != dim)
        throw FormatError("matrix: row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
      for (std::size_t k = 0; k < dim; ++k) m(i, k) = detail::complex_from_json(rows[i][k], "matrix");
    }
    return m;
  });
}

inline HermitianMatrix hermitian_from_json(const json& j) {
  const Matrix m = matrix_from_json(j);
  return detail::guarded("matrix", [&] { return HermitianMatrix(m); });
}

inline PureState state_from_json(const json& j) {
  return detail::guarded("state", [&] {
    if (!j.is_object() || !j.contains("amplitudes") || !j.at("amplitudes").is_array())
      throw FormatError("state: expected object with \"amplitudes\" array");
    std::vector<Complex> v;
    for (const auto& z : j.at("amplitudes")) v.push_back(detail::complex_from_json(z, "state"));
    return PureState(std::move(v));
  });
}

/// A pure state ({"amplitudes": ...}) or a density matrix (matrix JSON).
inline State any_state_from_json(const json& j) {
  if (j.is_object() && j.contains("amplitudes")) return state_from_json(j);
  const HermitianMatrix rho = hermitian_from_json(j);
  return detail::guarded("density matrix", [&] { return DensityMatrix(rho); });
}

inline WitnessPair pair_from_json(const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    const auto id = parse_pair_id(name);
    if (!id) throw FormatError("pair: unknown built-in id '" + name + "' (expected pair295, pair759, two_qubit)");
    return named_pair(*id);
  }
  if (!j.is_object() || !j.contains("A") || !j.contains("B"))
    throw FormatError("pair: expected object with \"A\" and \"B\"");
  HermitianMatrix a = hermitian_from_json(j.at("A"));
  HermitianMatrix b = hermitian_from_json(j.at("B"));
  if (a.dim() != b.dim())
    throw FormatError("pair: dim(A) = " + std::to_string(a.dim()) + " differs from dim(B) = " +
                      std::to_string(b.dim()));
  return {std::move(a), std::move(b)};
}

struct PlanSpec {
  int n = 1;
  std::variant<std::pair<WitnessPair, WitnessPair>, std::vector<WitnessPair>> slots;
};

inline PlanSpec plan_from_json(const json& j) {
  return detail::guarded("plan", [&]() -> PlanSpec {
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
      throw FormatError("plan: expected object with integer \"n\"");
    const int n = j.at("n").get<int>();
    if (n < 1) throw FormatError("plan: \"n\" must be >= 1");
    if (j.contains("slots")) {
      std::vector<WitnessPair> slots;
      for (const auto& s : j.at("slots")) slots.push_back(pair_from_json(s));
      return {n, std::move(slots)};
    }
    if (j.contains("ground") && j.contains("filler"))
      return {n, std::make_pair(pair_from_json(j.at("ground")), pair_from_json(j.at("filler")))};
    throw FormatError("plan: expected \"slots\" or both \"ground\" and \"filler\"");
  });
}

/// Builds the embedded pair a plan describes (two-group plans enforce ordering).
inline WitnessPair realize(const PlanSpec& plan) {
  if (const auto* two = std::get_if<std::pair<WitnessPair, WitnessPair>>(&plan.slots))
    return embed_two_group(plan.n, two->first, two->second);
  return embed(EmbeddingPlan(plan.n, std::get<std::vector<WitnessPair>>(plan.slots)));
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError("'" + path + "': invalid JSON: " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw FormatError("write to '" + path + "' failed");
}

/// A built-in pair id, or a path to a pair JSON file.
inline WitnessPair load_pair(const std::string& id_or_path) {
  if (const auto id = parse_pair_id(id_or_path)) return named_pair(*id);
  return detail::guarded("'" + id_or_path + "'", [&] { return pair_from_json(read_json_file(id_or_path)); });
}

}  // namespace arw::io

#endif  // ARW_IO_HPP
