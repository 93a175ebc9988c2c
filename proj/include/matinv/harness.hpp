#pragma once

// Structured samplers and the cross-check suites. Every report is a pure
// function of its spec, seed and trial count: trial t always draws from the
// sub-stream t of the seed.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "matinv/io.hpp"

namespace matinv {

enum class SamplerKind { RandomTuple, SameOrbitPair, CPair, CPrimePair, C0Pair, PerturbedPair, GridTuple };

std::string_view sampler_name(SamplerKind kind);
/// Throws ParseError for unknown names.
SamplerKind sampler_from_name(std::string_view name);

struct SamplerSpec {
    SamplerKind kind = SamplerKind::RandomTuple;
    std::size_t n = 3;
    long bound = 10;
    std::uint64_t seed = 1;
    std::vector<long> grid_values{-1, 0, 1};  ///< GridTuple coordinate values
};

struct TuplePair {
    MatTuple first;
    MatTuple second;
};

/// The index-th pair of the spec's sequence. GridTuple enumerates the
/// trace-zero tuples with coordinates in grid_values in mixed-radix order and
/// pairs each tuple A with -A (same pairwise traces, negated triple traces).
TuplePair sample_one(const SamplerSpec& spec, std::size_t index);
std::vector<TuplePair> sample(const SamplerSpec& spec, std::size_t count);

/// Number of tuples a GridTuple spec enumerates.
std::size_t grid_size(const SamplerSpec& spec);

struct Report {
    std::string suite;
    io::Json spec;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<io::Json> counterexamples;  ///< capped at kMaxCounterexamples

    static constexpr std::size_t kMaxCounterexamples = 10;

    bool ok() const noexcept { return failures == 0; }
    void record_failure(io::Json counterexample);
    /// Sums trials and failures and concatenates counterexamples.
    void merge(const Report& other);
};

io::Json to_json(const Report& report);
io::Json to_json(const SamplerSpec& spec);

/// decide_equiv_full against decide_equiv_reduced on `count` sampled pairs.
Report crosscheck_reduced_vs_full(const SamplerSpec& spec, std::size_t count);

/// Largest grid scan grid_minor_certification accepts.
inline constexpr std::size_t kGridBudget = 10'000'000;

/// Scans every 3 x n matrix with entries in `values` and counts matrices on
/// which all level sums f_l vanish while some 3x3 minor does not. Throws
/// BudgetExceeded when |values|^(3n) > budget.
Report grid_minor_certification(std::size_t n, const std::vector<long>& values, std::size_t budget = kGridBudget);

/// Orbit invariance of the conjugation and left-right families plus the
/// matrix identities, on random tuples of length n (trial 0 uses the zero
/// tuple).
Report invariance_suite(std::uint64_t seed, std::size_t trials, std::size_t n);

/// conj_equiv_via_sigma against decide_equiv_full on pairs drawn from every
/// sampler kind in turn.
Report sigma_suite(std::uint64_t seed, std::size_t trials, std::size_t n);

/// Triangularization certificates on random conjugates of upper-triangular
/// tuples, inseparability of C' pairs, Both <=> all Delta vanish on C pairs,
/// and stability of the m-rank under random re-conjugation.
Report geometry_suite(std::uint64_t seed, std::size_t trials, std::size_t n);

}  // namespace matinv
