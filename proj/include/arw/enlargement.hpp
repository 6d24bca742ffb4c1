#ifndef ARW_ENLARGEMENT_HPP
#define ARW_ENLARGEMENT_HPP

// Slot embedding of 2x2 witness pairs into 2^n dimensions.
//
// Slot i (0-based, i < N/2) owns the coordinate pair {i, N-1-i}.  Its 2x2 block
// is written onto the four entries (i,i), (i,N-1-i), (N-1-i,i), (N-1-i,N-1-i);
// every other entry is zero.  Slot 0 sits on the outer corners, slot N/2-1 in
// the centre.  Because the coordinate pairs partition {0..N-1}, the embedded
// matrix is a permuted block-diagonal matrix and products, squares and spectra
// decompose slot by slot.
//
// Nesting pairs recursively (each new 2x2 pair placed inside the previous
// one's corners) produces the same matrices as this direct assignment.

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "arw/matrix.hpp"
#include "arw/witness.hpp"

namespace arw {

struct StructureError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OrderingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kStructureTol = 1e-14;

class EmbeddingPlan {
 public:
  EmbeddingPlan(int n, std::vector<WitnessPair> slots) : n_(n), slots_(std::move(slots)) {
    if (n_ < 1 || n_ > 30) throw std::invalid_argument("EmbeddingPlan: qubit count must be in [1, 30]");
    const std::size_t expected = std::size_t{1} << (n_ - 1);
    if (slots_.size() != expected)
      throw std::invalid_argument("EmbeddingPlan: slot count mismatch, n = " + std::to_string(n_) + " needs " +
                                  std::to_string(expected) + " slots, got " + std::to_string(slots_.size()));
    for (const auto& s : slots_)
      if (s.dim() != 2) throw DimensionError("EmbeddingPlan: every slot pair must be 2x2");
  }

  int qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return std::size_t{1} << n_; }
  const std::vector<WitnessPair>& slots() const noexcept { return slots_; }

 private:
  int n_;
  std::vector<WitnessPair> slots_;
};

namespace detail {

inline std::size_t partner(std::size_t i, std::size_t n) { return n - 1 - i; }

inline HermitianMatrix embed_blocks(const std::vector<const HermitianMatrix*>& blocks) {
  const std::size_t n = 2 * blocks.size();
  Matrix m(n);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const HermitianMatrix& b = *blocks[i];
    const std::size_t j = partner(i, n);
    m(i, i) = b(0, 0);
    m(i, j) = b(0, 1);
    m(j, i) = b(1, 0);
    m(j, j) = b(1, 1);
  }
  return HermitianMatrix(m);
}

}  // namespace detail

/// Embeds a list of 2x2 Hermitian blocks; block i lands on coordinates {i, N-1-i}.
inline HermitianMatrix embed_matrix(const std::vector<HermitianMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("embed_matrix: no blocks");
  std::vector<const HermitianMatrix*> ptrs;
  for (const auto& b : blocks) {
    if (b.dim() != 2) throw DimensionError("embed_matrix: blocks must be 2x2");
    ptrs.push_back(&b);
  }
  return detail::embed_blocks(ptrs);
}

inline WitnessPair embed(const EmbeddingPlan& plan) {
  std::vector<const HermitianMatrix*> as, bs;
  for (const auto& s : plan.slots()) {
    as.push_back(&s.A());
    bs.push_back(&s.B());
  }
  return {detail::embed_blocks(as), detail::embed_blocks(bs)};
}

/// Slots = [ground, filler, filler, ...].  The ground pair must have the
/// strictly smaller lambda_min(W) so that the embedded ground state is e_1.
inline WitnessPair embed_two_group(int n, const WitnessPair& ground, const WitnessPair& filler) {
  if (ground.dim() != 2 || filler.dim() != 2) throw DimensionError("embed_two_group: pairs must be 2x2");
  const double g = min_violation(ground), f = min_violation(filler);
  if (!(g < f)) {
    std::ostringstream os;
    os.precision(17);
    os << "embed_two_group: ordering violation, ground pair lambda_min(W) = " << g
       << " is not below filler lambda_min(W) = " << f << " (ground state would not be unique at e_1)";
    throw OrderingError(os.str());
  }
  if (n < 1) throw std::invalid_argument("embed_two_group: qubit count must be >= 1");
  std::vector<WitnessPair> slots(std::size_t{1} << (n - 1), filler);
  slots.front() = ground;
  return embed(EmbeddingPlan(n, std::move(slots)));
}

/// Extracts the N/2 slot blocks.  Throws StructureError if any entry outside
/// the slot pattern exceeds kStructureTol in magnitude.
inline std::vector<HermitianMatrix> block_decompose(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  if (n < 2 || n % 2 != 0) throw StructureError("block_decompose: dimension must be even");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == detail::partner(i, n)) continue;
      if (std::abs(m(i, j)) > kStructureTol) {
        std::ostringstream os;
        os << "block_decompose: off-pattern entry (" << i << "," << j << ") has magnitude " << std::abs(m(i, j));
        throw StructureError(os.str());
      }
    }
  std::vector<HermitianMatrix> blocks;
  blocks.reserve(n / 2);
  for (std::size_t i = 0; i < n / 2; ++i) {
    const std::size_t j = detail::partner(i, n);
    blocks.push_back(HermitianMatrix{{m(i, i), m(i, j)}, {m(j, i), m(j, j)}});
  }
  return blocks;
}

inline std::optional<std::vector<HermitianMatrix>> try_block_decompose(const HermitianMatrix& m) {
  try {
    return block_decompose(m);
  } catch (const StructureError&) {
    return std::nullopt;
  }
}

/// One eigenpair of a slot-structured matrix, stored compactly: the vector is
/// `local[0]` at coordinate `slot` and `local[1]` at coordinate N-1-slot.
struct BlockEigenpair {
  double value;
  std::size_t slot;
  std::array<Complex, 2> local;
};

/// Spectrum of a slot-structured matrix from its 2x2 blocks, ascending.
inline std::vector<BlockEigenpair> block_spectrum(const std::vector<HermitianMatrix>& blocks) {
  std::vector<BlockEigenpair> out;
  out.reserve(2 * blocks.size());
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    const Spectrum sp = eig_hermitian(blocks[s]);
    for (std::size_t k = 0; k < 2; ++k) out.push_back({sp.values[k], s, {sp.vectors(0, k), sp.vectors(1, k)}});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const BlockEigenpair& x, const BlockEigenpair& y) { return x.value < y.value; });
  return out;
}

/// lambda_min(B^2 - A^2) using the slot structure when present.
inline double structured_min_violation(const WitnessPair& p) {
  const HermitianMatrix w = witness_operator(p);
  if (auto blocks = try_block_decompose(w)) return block_spectrum(*blocks).front().value;
  return min_eigenvalue(w);
}

struct GroundReport {
  bool unique = false;
  std::size_t ground_index = 0;  // coordinate carrying the largest ground-state weight
  bool is_e1 = false;
  double gap = 0.0;
  double ground_energy = 0.0;
  bool used_blocks = false;
};

/// Checks that W = B^2 - A^2 has a non-degenerate ground state located at e_1.
/// Uses the slot structure of W when present, otherwise the dense eigensolver.
inline GroundReport validate_ground(const WitnessPair& p) {
  const HermitianMatrix w = witness_operator(p);
  const std::size_t n = w.dim();
  GroundReport r;
  std::vector<double> amp2(n, 0.0);  // |<e_i|v_0>|^2
  double l0 = 0.0, l1 = 0.0;

  if (auto blocks = (n >= 2 && n % 2 == 0) ? try_block_decompose(w) : std::nullopt) {
    const auto sp = block_spectrum(*blocks);
    r.used_blocks = true;
    l0 = sp[0].value;
    l1 = sp[1].value;
    amp2[sp[0].slot] += std::norm(sp[0].local[0]);
    amp2[detail::partner(sp[0].slot, n)] += std::norm(sp[0].local[1]);
  } else {
    const Spectrum sp = eig_hermitian(w);
    l0 = sp.values[0];
    l1 = n > 1 ? sp.values[1] : sp.values[0];
    for (std::size_t i = 0; i < n; ++i) amp2[i] = std::norm(sp.vectors(i, 0));
    if (n == 1) l1 = l0 + std::numeric_limits<double>::infinity();
  }
  r.ground_energy = l0;
  r.gap = l1 - l0;
  r.unique = r.gap > 1e-10;
  r.ground_index = static_cast<std::size_t>(std::max_element(amp2.begin(), amp2.end()) - amp2.begin());
  r.is_e1 = amp2[0] > 1.0 - 1e-10;
  return r;
}

}  // namespace arw

#endif  // ARW_ENLARGEMENT_HPP
