#pragma once

// Orbit geometry of trace-zero tuples: simultaneous triangularization,
// closed orbits, the upper-triangular pair families C / C' / C0 and the
// classification of inseparable pairs by separating-variety component.

#include <optional>
#include <string_view>
#include <vector>

#include "matinv/invariants.hpp"

namespace matinv {

/// det(A_i A_j - A_j A_i).
GaussianRational commutator_det(const Mat2& ai, const Mat2& aj);

/// Tr(A_iA_jA_k) = Tr(A_kA_jA_i) for all i<j<k and det[A_i, A_j] = 0 for all
/// i<j.
bool is_triangularizable(const MatTuple& a);

/// g in SL2(Q(i)) with g A_i g^{-1} upper-triangular for every slot.
/// Upper-triangular input gives the identity, lower-triangular input the
/// Weyl element [[0,1],[-1,0]]. Throws NotTriangularizable or
/// FieldExtensionRequired.
SL2Element triangularize(const MatTuple& a);

/// Pairwise commuting and every slot zero or invertible.
bool is_simultaneously_diagonalizable(const TraceZeroTuple& a);

/// Closed orbits are the non-triangularizable tuples and the simultaneously
/// diagonalizable ones (the zero tuple included).
bool has_closed_orbit(const TraceZeroTuple& a);

enum class PairClass { InC, InCPrime, InC0, NotInC };

std::string_view pair_class_name(PairClass cls);

/// A pair of upper-triangular trace-zero tuples tagged by how their
/// diagonals b, b' match.
struct PairForm {
    TraceZeroTuple first;
    TraceZeroTuple second;
    PairClass cls;
};

/// InC0 when b = b' = 0, InC when b = b', InCPrime when b = -b'. Throws
/// NotUpperTriangular.
PairForm pair_form(const TraceZeroTuple& a, const TraceZeroTuple& a_prime);

struct MMatrixRank {
    MatrixX m;                              ///< rows (b; c; c')
    Eigen::Index rank = 0;
    std::vector<SlotTriple> nonzero_minors;  ///< 0-based triples with Delta_ijk != 0
};

/// Throws NotInCFamily for NotInC forms.
MMatrixRank m_matrix_and_rank(const PairForm& form);

/// c_i c'_j = c_j c'_i for all i < j. Throws NotInCFamily unless the form is
/// InC or InC0.
bool torus_graph_condition(const PairForm& form);

enum class PairClassification { NotEquivalent, GraphClosure, ExtraComponentOnly, Both };

std::string_view classification_name(PairClassification c);

struct ClassificationReport {
    PairClassification verdict = PairClassification::NotEquivalent;
    std::optional<PairClass> form;   ///< set once both tuples were triangularized
    std::optional<MMatrixRank> m;    ///< set for C-family pairs
};

/// Component of the separating variety containing (A, A'). Throws
/// FieldExtensionRequired when a triangularization needs eigenvalues
/// outside Q(i).
ClassificationReport classify_pair(const TraceZeroTuple& a, const TraceZeroTuple& a_prime);

}  // namespace matinv
