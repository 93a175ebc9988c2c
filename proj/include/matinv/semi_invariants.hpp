#pragma once

// Invariants of the left-right action (h1, h2) . A = (h1 A_i h2^{-1}) of
// SL2 x SL2: determinants, brackets and the xi family.

#include <array>
#include <cstddef>

#include "matinv/invariants.hpp"

namespace matinv {

/// Slot quadruple i<j<k<l, 0-based.
using XiIndex = std::array<std::size_t, 4>;

/// Tr(A_i)Tr(A_j) - Tr(A_iA_j).
GaussianRational bracket(const MatTuple& a, std::size_t i, std::size_t j);

/// Coefficient of x_i x_j x_k x_l in det [[x_i A_i, x_j A_j], [x_k A_k, x_l A_l]],
/// extracted by inclusion-exclusion over the 16 corner evaluations.
GaussianRational xi(const MatTuple& a, const XiIndex& q);

/// The 4x4 block matrix [[s0 A_i, s1 A_j], [s2 A_k, s3 A_l]].
Matrix4T<GaussianRational> xi_block(const MatTuple& a, const XiIndex& q,
                                    const std::array<GaussianRational, 4>& scales);

/// det(i), br(i,j) for i<j, xi(i,j,k,l) for i<j<k<l.
InvariantProfile eval_H_generators(const MatTuple& a);

Decision decide_equiv_H(const MatTuple& a, const MatTuple& b);

/// Conjugation equivalence decided through the left-right family on the
/// tuples extended by the identity matrix.
Decision conj_equiv_via_sigma(const MatTuple& a, const MatTuple& b);

}  // namespace matinv
