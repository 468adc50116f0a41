// R-matrix representations for the Links-Gould invariants LG^{2,1} (two
// variables and along t1 = t0^{-1}) and LG^{3,1} (along t1 = t0^{-1}).
#pragma once

#include <vector>

#include "lgbridge/braid.hpp"
#include "lgbridge/scalar.hpp"
#include "lgbridge/tensor.hpp"

namespace lgbridge {

/// 16x16 R-matrix on W ⊗ W over Z[t0^{±1/2}, t1^{±1/2}, Y].
const LocalOperator<ExtScalar>& r_lg21();
/// r_lg21 specialized entrywise at t1 = t0^{-1}.
const LocalOperator<LaurentHalf>& r_lg21_special();
/// 64x64 R-matrix on the 8-dimensional site space, already at t1 = t0^{-1}.
const LocalOperator<LaurentHalf>& s_lg31();

/// The raw matrices, for building perturbed copies.
DenseMatrix<ExtScalar> r_lg21_matrix();
DenseMatrix<LaurentHalf> r_lg21_special_matrix();
DenseMatrix<LaurentHalf> s_lg31_matrix();

/// diag(t0^{-1}, -t1, -t0^{-1}, t1).
std::vector<ExtScalar> mu21();
/// mu21 at t1 = t0^{-1}.
std::vector<LaurentHalf> mu21_special();
/// t0^{3/2} diag(1, -1, -1, -1, 1, 1, 1, -1).
std::vector<LaurentHalf> mu31();

/// 1/4 trace((id ⊗ mu21^{⊗n-1}) ∘ rep(b)) with the two-variable R-matrix.
ExtScalar lg21_two_variable(const BraidWord& b);
ExtScalar lg21_two_variable(const BraidWord& b, const LocalOperator<ExtScalar>& op);

enum class LgFlavor { kLg21Special, kLg31Special };

/// 1/d trace((id ⊗ mu^{⊗n-1}) ∘ rep(b)), d = 4 or 8.
LaurentHalf lg_invariant(const BraidWord& b, LgFlavor flavor);
/// Same trace with a caller-supplied R-matrix of the flavor's site dimension.
LaurentHalf lg_invariant(const BraidWord& b, LgFlavor flavor, const LocalOperator<LaurentHalf>& op);

const LocalOperator<LaurentHalf>& lg_operator(LgFlavor flavor);
std::vector<LaurentHalf> lg_weight(LgFlavor flavor);

}  // namespace lgbridge
