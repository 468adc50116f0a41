// Burau-type representations and the Alexander-Conway polynomial, both from
// the reduced Burau determinant and as a weighted quantum trace.
#pragma once

#include <vector>

#include "lgbridge/braid.hpp"
#include "lgbridge/dense_matrix.hpp"
#include "lgbridge/scalar.hpp"
#include "lgbridge/tensor.hpp"

namespace lgbridge {

using PolyMatrix = DenseMatrix<LaurentHalf>;

enum class BurauVariant {
  kStandard,  // f_i -> (1-t) f_i + t^{1/2} f_{i+1},  f_{i+1} -> t^{1/2} f_i
  kF21,       // standard with t -> t^{-1}
  kG21,       // g_i -> -t^{1/2} g_{i+1},  g_{i+1} -> -t^{1/2} g_i + (1-t) g_{i+1}
  kFGH31,     // f_i -> t^{-1/2} f_{i+1},  f_{i+1} -> t^{-1/2} f_i + (1-t^{-1}) f_{i+1}
};

/// n x n image of sigma_i (identity outside the i, i+1 block).
PolyMatrix burau_generator(int strands, int index, BurauVariant variant);
/// Exact inverse of burau_generator.
PolyMatrix burau_generator_inverse(int strands, int index, BurauVariant variant);
/// Image of a whole word.
PolyMatrix burau_matrix(const BraidWord& b, BurauVariant variant);

/// delta_n = sum_k t^{-(n-k)/2} f_k, the vector fixed by the standard
/// representation.
std::vector<LaurentHalf> burau_fixed_vector(int strands);

/// Action on W_n / <delta_n> in the basis of the images of f_1..f_{n-1}.
PolyMatrix reduced_burau(const BraidWord& b);

/// Fraction-free (Bareiss) determinant.
LaurentHalf determinant(const PolyMatrix& m);

/// (1 - t) det(I - reduced_burau(b)) / (1 - t^n); 1 for one strand.
LaurentHalf alexander_det(const BraidWord& b);

enum class SmallR { kR1, kR2, kR3 };

/// The 4x4 R-matrices on V ⊗ V, basis (e0e0, e0e1, e1e0, e1e1).
const LocalOperator<LaurentHalf>& r_small(SmallR which);

enum class AlexanderWeight {
  kH,       // diag(t^{1/2}, -t^{1/2})
  kHTilde,  // diag(1, -1)
};

std::vector<LaurentHalf> alexander_weight(AlexanderWeight which);

/// 1/2 trace((id ⊗ w^{⊗n-1}) ∘ rep(b)), times t^{-(n-1)/2} when normalized.
LaurentHalf alexander_trace(const BraidWord& b, SmallR rep, AlexanderWeight weight, bool normalized);

}  // namespace lgbridge
