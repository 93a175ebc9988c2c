#pragma once

// Polynomial invariants of simultaneous conjugation on 2x2 matrix tuples.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matinv/matrix.hpp"

namespace matinv {

enum class Family { FullSn, TraceZeroEn, ReducedSPrime, SemiInvariantH };

std::string_view family_name(Family family);

struct ProfileEntry {
    std::string label;
    GaussianRational value;

    friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// Values of an invariant family in canonical label order. Two tuples are
/// inseparable by the family exactly when their profiles are equal.
class InvariantProfile {
public:
    InvariantProfile(Family family, std::vector<ProfileEntry> entries)
        : family_(family), entries_(std::move(entries)) {}

    Family family() const noexcept { return family_; }
    const std::vector<ProfileEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const ProfileEntry& operator[](std::size_t i) const { return entries_[i]; }

    /// Value for a label; throws IndexOutOfRange when absent.
    const GaussianRational& at(std::string_view label) const;

    /// First label whose value differs. Throws SizeMismatch when the label
    /// sequences are not the same.
    std::optional<std::string> first_difference(const InvariantProfile& other) const;

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;

private:
    Family family_;
    std::vector<ProfileEntry> entries_;
};

/// Outcome of a separation test. witness names the first separating label.
struct Decision {
    bool inseparable = true;
    std::optional<std::string> witness;
};

Decision compare_profiles(const InvariantProfile& a, const InvariantProfile& b);

using SlotTriple = std::array<std::size_t, 3>;

/// Label such as "t(1,2,3)" from a name and 0-based slots.
std::string slot_label(std::string_view name, std::initializer_list<std::size_t> slots);

/// Tr(A_{w1} A_{w2} ... A_{wk}); slots are 0-based.
GaussianRational word_trace(const MatTuple& a, std::span<const std::size_t> word);
GaussianRational word_trace(const MatTuple& a, std::initializer_list<std::size_t> word);

/// Tr(A_i), det(A_i), Tr(A_iA_j) for i<j, Tr(A_iA_jA_k) for i<j<k.
InvariantProfile eval_full_generators(const MatTuple& a);

/// t(i,j) = Tr(A_iA_j) for i<=j and t(i,j,k) for i<j<k.
InvariantProfile eval_tracezero_generators(const TraceZeroTuple& a);

/// Sign s with Tr(A_iA_jA_k) = s * det[c; b; a] on columns i, j, k.
inline constexpr int kTripleTraceMinorSign = -1;

/// Constant c with t_ijk t_pqr = c * det(Gram block of pairwise traces).
GaussianRational gram_relation_constant();

/// Re-derives the minor sign from word_trace on a reference tuple.
int calibrate_minor_sign();
/// Re-derives the Gram relation constant from word_trace on a reference tuple.
GaussianRational calibrate_gram_constant();

/// The 3x3 determinant of the coordinate rows (c; b; a) on columns i, j, k,
/// multiplied by kTripleTraceMinorSign. Any index order is accepted.
GaussianRational triple_trace_minor(const TraceZeroTuple& a, std::size_t i, std::size_t j, std::size_t k);

/// det of [Tr(A_x A_y)] for x in `rows`, y in `cols`.
GaussianRational gram_block_determinant(const TraceZeroTuple& a, const SlotTriple& rows, const SlotTriple& cols);

struct GramRelation {
    GaussianRational lhs;       ///< t_ijk * t_pqr
    GaussianRational gram_det;  ///< determinant of the pairwise-trace block
    GaussianRational constant;  ///< gram_relation_constant()

    bool holds() const { return lhs == constant * gram_det; }
};

GramRelation gram_relation_check(const TraceZeroTuple& a, const SlotTriple& ijk, const SlotTriple& pqr);

/// Sizes of the invariant families and Krull dimensions of the invariant rings.
struct InvariantCounts {
    long full_set;               ///< |S_n| = (n^3 + 11n) / 6
    long reduced_set;            ///< |S'_n|, falling back to |S_n| for n <= 2
    long dim_conj;               ///< dim of invariants of M_2^n under conjugation
    long tracezero_set;          ///< |E_n|
    long reduced_tracezero_set;  ///< trace-zero part of S'_n
    long dim_tracezero;
    long h_set;                  ///< det, bracket and xi family size
    long dim_h;
};

InvariantCounts cardinality_and_dimension(std::size_t n);

long binomial(long n, long k);

}  // namespace matinv
