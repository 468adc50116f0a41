// Exterior powers of direct sums of Burau-type representations, the basis
// bijections identifying them with the tensor representations, and the
// product form of the Links-Gould invariants.
//
// A reference basis vector is a wedge of generators x_k, where x is one of
// up to three summand slots and k a strand position; the reference order is
// slot-major, positions ascending within a slot.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "lgbridge/braid.hpp"
#include "lgbridge/burau.hpp"
#include "lgbridge/tensor.hpp"

namespace lgbridge {

inline constexpr int kMaxSlots = 3;
inline constexpr int kMaxExteriorStrands = 20;

struct Generator {
  int slot = 0;      // 0, 1, 2 for f, g, h
  int position = 1;  // 1..n
};

class ExteriorIndex {
 public:
  ExteriorIndex() = default;
  explicit ExteriorIndex(int strands);

  int strands() const { return strands_; }
  /// Bit k-1 set when x_k is present in the given slot.
  std::uint32_t mask(int slot) const { return masks_[static_cast<std::size_t>(slot)]; }
  bool contains(int slot, int position) const { return (mask(slot) >> (position - 1)) & 1u; }
  int degree() const;
  /// Number of slot generators with position in [lo, hi].
  int count(int slot, int lo, int hi) const;

  /// Wedges x_position of the given slot on the right and reorders;
  /// returns the sign, or nothing when the generator is already present.
  std::optional<int> wedge_right(int slot, int position);

  auto operator<=>(const ExteriorIndex&) const = default;

 private:
  int strands_ = 0;
  std::array<std::uint32_t, kMaxSlots> masks_{};
};

struct SignedIndex {
  int sign = 1;
  ExteriorIndex index;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// Rewrites a wedge of distinct generators in the reference order. Empty
/// when a generator repeats.
std::optional<SignedIndex> reord(int strands, const std::vector<Generator>& generators);

class ExteriorVector {
 public:
  using Entry = std::pair<ExteriorIndex, LaurentHalf>;

  ExteriorVector() = default;
  static ExteriorVector basis(const ExteriorIndex& idx, const LaurentHalf& coef = LaurentHalf(1));
  static ExteriorVector from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero_vector() const { return entries_.empty(); }
  LaurentHalf coefficient(const ExteriorIndex& idx) const;

  friend bool operator==(const ExteriorVector&, const ExteriorVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Image of v under the exterior power of the block-diagonal map whose
/// slot-s block is summands[s] (n x n each).
ExteriorVector exterior_apply(const std::vector<PolyMatrix>& summands, const ExteriorVector& v);

/// Exterior power of a direct sum of Burau-type representations.
using ExteriorRep = std::vector<BurauVariant>;

/// rep(b) v applied letter by letter, rightmost letter first.
ExteriorVector exterior_apply_word(const ExteriorRep& rep, const BraidWord& b, const ExteriorVector& v);

/// All 2^{mn} reference basis vectors of the m-slot exterior algebra.
std::vector<ExteriorIndex> exterior_basis(int strands, int slots);

enum class IntertwinerKind {
  kI21,  // W^{⊗n} -> ∧(W_n ⊕ W_n), slots F, G
  kI31,  // 8-dim sites -> ∧(W_n ⊕ W_n ⊕ W_n), slots F, G, H
  kJ,    // V^{⊗n} -> ∧W_n, e1 at site k -> f_k
  kK,    // V^{⊗n} -> ∧W_n, e0 at site k -> g_k
};

/// Signed bijection from the tensor basis onto the exterior reference basis.
class Intertwiner {
 public:
  /// keep_reord_signs only affects kI31: the inductive construction then
  /// keeps the reordering sign instead of mapping onto the bare reference
  /// basis vector.
  Intertwiner(IntertwinerKind kind, int strands, bool keep_reord_signs = false);

  IntertwinerKind kind() const { return kind_; }
  int strands() const { return strands_; }
  int site_dim() const;
  int slots() const;
  /// Exterior representation this map intertwines with.
  ExteriorRep exterior_rep() const;

  const SignedIndex& image(BasisCode code) const { return forward_[code]; }
  std::optional<BasisCode> preimage(const ExteriorIndex& idx) const;
  /// True when every reference basis vector is hit exactly once.
  bool is_bijection() const;

  ExteriorVector map(const SparseVector<LaurentHalf>& v) const;

 private:
  IntertwinerKind kind_;
  int strands_;
  std::vector<SignedIndex> forward_;
  std::vector<std::pair<ExteriorIndex, BasisCode>> backward_;  // sorted by index
};

/// First basis code e with rep(exterior_word) I(e) != I(rep(tensor_word) e),
/// where the tensor side uses hat(word) for kI31 and word otherwise.
std::optional<BasisCode> intertwining_violation(const Intertwiner& map, const LocalOperator<LaurentHalf>& op,
                                                const BraidWord& word);
/// The tensor representation each intertwiner is built for.
const LocalOperator<LaurentHalf>& tensor_operator_for(IntertwinerKind kind);

/// Bordered n x n matrix with J_n Psi(sigma_i) = G(sigma_i) J_n.
PolyMatrix j_n_matrix(int strands);

enum class DiagonalWeight { kMuTilde21, kMu1, kNu, kMuTilde31 };

LaurentHalf diagonal_weight(DiagonalWeight kind, const ExteriorIndex& idx);

/// trace(weight ∘ rep(b)) over the exterior reference basis.
LaurentHalf exterior_trace(const ExteriorRep& rep, const BraidWord& b, DiagonalWeight weight);

/// Sum over subsets S of sign(S) times the (S, S) coefficient of the
/// single-slot exterior power of the given representation, with the sign
/// counting positions in [lo, hi].
LaurentHalf exterior_factor(const BraidWord& b, BurauVariant variant, int lo, int hi);

enum class ProductFlavor { kLg21, kLg31 };

/// Links-Gould value assembled from one exterior factor per summand.
LaurentHalf lg_product(const BraidWord& b, ProductFlavor flavor);

enum class AlexanderPath {
  kViaPsiMu1,  // 1/2 trace(mu1 ∘ ∧Psi(b))
  kViaGNu,     // 1/2 trace(nu ∘ ∧G(b))
};

LaurentHalf alexander_exterior(const BraidWord& b, AlexanderPath path);

}  // namespace lgbridge
