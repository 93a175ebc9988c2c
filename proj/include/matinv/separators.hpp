#pragma once

// Smaller separating sets for conjugation invariants: the pairwise traces
// t_ij together with 3n-8 linear combinations f_l of the triple traces, one
// per level l = i+j+k of the poset of 3x3 minors.

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "matinv/invariants.hpp"

namespace matinv {

enum class CoefficientScheme {
    UnitLevelSums,        ///< every coefficient 1
    VandermondeLevelSums  ///< 2^(lex position inside the level)
};

std::string_view scheme_name(CoefficientScheme scheme);

struct MinorTerm {
    SlotTriple slots;  ///< 0-based, strictly increasing
    GaussianRational coeff;
};

/// f_l = sum of coeff * t_ijk over the triples with i + j + k = level
/// (1-based slot numbers).
struct MinorCombination {
    int level = 0;
    std::vector<MinorTerm> terms;
};

struct ReducedSet {
    std::size_t n = 0;
    CoefficientScheme scheme = CoefficientScheme::UnitLevelSums;
    std::vector<MinorCombination> combinations;
};

/// One combination per level 6 .. 3n-3. Throws NTooSmall for n <= 2.
ReducedSet build_reduced_combinations(std::size_t n,
                                      CoefficientScheme scheme = CoefficientScheme::UnitLevelSums);

/// Triple traces t_ijk for i<j<k in lexicographic order.
std::vector<GaussianRational> triple_traces(const MatTuple& a);

/// t(i,j) for i<=j followed by f(l) for every level. Throws SizeMismatch when
/// the set was built for another n.
InvariantProfile eval_reduced_profile(const TraceZeroTuple& a, const ReducedSet& set);

/// Traces tr(i) followed by the reduced profile of the trace-free part. For
/// n <= 2 this is the full generating set.
InvariantProfile eval_reduced_generators(const MatTuple& a,
                                         CoefficientScheme scheme = CoefficientScheme::UnitLevelSums);

/// Profile comparison over the full generating set S_n.
Decision decide_equiv_full(const MatTuple& a, const MatTuple& b);

/// Profile comparison over the reduced set S'_n.
Decision decide_equiv_reduced(const MatTuple& a, const MatTuple& b,
                              CoefficientScheme scheme = CoefficientScheme::UnitLevelSums);

/// The two sign-consistent triple-trace vectors compatible with given
/// pairwise traces of a trace-zero tuple.
struct TripleTraceCandidates {
    std::vector<SlotTriple> triples;  ///< lexicographic i<j<k
    std::vector<GaussianRational> plus;
    std::vector<GaussianRational> minus;
};

/// `pair_traces` is the symmetric n x n matrix [t_ij]. Throws NotASquare when
/// the magnitudes leave Q(i) and InconsistentData when the data is not the
/// pairwise-trace matrix of any trace-zero tuple's triple structure.
TripleTraceCandidates triple_traces_up_to_sign(const MatrixX& pair_traces);

/// [Tr(A_iA_j)] for a trace-zero tuple.
MatrixX pair_trace_matrix(const TraceZeroTuple& a);

}  // namespace matinv
