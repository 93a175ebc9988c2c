#include "matinv/invariants.hpp"

#include <algorithm>

namespace matinv {

std::string_view family_name(Family family) {
    switch (family) {
        case Family::FullSn: return "FullSn";
        case Family::TraceZeroEn: return "TraceZeroEn";
        case Family::ReducedSPrime: return "ReducedSPrime";
        case Family::SemiInvariantH: return "SemiInvariantH";
    }
    return "?";
}

const GaussianRational& InvariantProfile::at(std::string_view label) const {
    for (const auto& e : entries_) {
        if (e.label == label) return e.value;
    }
    throw IndexOutOfRange("no invariant labelled " + std::string(label));
}

std::optional<std::string> InvariantProfile::first_difference(const InvariantProfile& other) const {
    if (family_ != other.family_ || entries_.size() != other.entries_.size()) {
        throw SizeMismatch("profiles of different shape");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].label != other.entries_[i].label) throw SizeMismatch("profiles of different shape");
        if (entries_[i].value != other.entries_[i].value) return entries_[i].label;
    }
    return std::nullopt;
}

Decision compare_profiles(const InvariantProfile& a, const InvariantProfile& b) {
    auto witness = a.first_difference(b);
    return {!witness.has_value(), std::move(witness)};
}

std::string slot_label(std::string_view name, std::initializer_list<std::size_t> slots) {
    std::string out(name);
    out += '(';
    bool first = true;
    for (auto s : slots) {
        if (!first) out += ',';
        out += std::to_string(s + 1);
        first = false;
    }
    out += ')';
    return out;
}

GaussianRational word_trace(const MatTuple& a, std::span<const std::size_t> word) {
    if (word.empty()) throw EmptyWord("word_trace needs a non-empty word");
    for (auto s : word) {
        if (s >= a.size()) throw IndexOutOfRange("slot " + std::to_string(s + 1) + " out of range");
    }
    if (word.size() == 1) return a[word[0]].trace();
    Mat2 prefix = a[word[0]];
    for (std::size_t k = 1; k + 1 < word.size(); ++k) prefix = product(prefix, a[word[k]]);
    return trace_of_product(prefix, a[word.back()]);
}

GaussianRational word_trace(const MatTuple& a, std::initializer_list<std::size_t> word) {
    return word_trace(a, std::span<const std::size_t>(word.begin(), word.size()));
}

namespace {

// Pairwise products A_i A_j for i < j, laid out row by row.
class PairProducts {
public:
    explicit PairProducts(const MatTuple& a) : n_(a.size()) {
        products_.reserve(n_ * (n_ - 1) / 2);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) products_.push_back(product(a[i], a[j]));
        }
    }
    const Mat2& operator()(std::size_t i, std::size_t j) const {
        return products_[i * n_ - i * (i + 1) / 2 + (j - i - 1)];
    }

private:
    std::size_t n_;
    std::vector<Mat2> products_;
};

void append_triple_traces(const MatTuple& a, std::vector<ProfileEntry>& out) {
    const std::size_t n = a.size();
    if (n < 3) return;
    const PairProducts products(a);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                out.push_back({slot_label("t", {i, j, k}), trace_of_product(products(i, j), a[k])});
            }
        }
    }
}

}  // namespace

InvariantProfile eval_full_generators(const MatTuple& a) {
    const std::size_t n = a.size();
    std::vector<ProfileEntry> out;
    out.reserve(static_cast<std::size_t>(cardinality_and_dimension(n).full_set));
    for (std::size_t i = 0; i < n; ++i) out.push_back({slot_label("tr", {i}), a[i].trace()});
    for (std::size_t i = 0; i < n; ++i) out.push_back({slot_label("det", {i}), det2(a[i])});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out.push_back({slot_label("t", {i, j}), trace_of_product(a[i], a[j])});
        }
    }
    append_triple_traces(a, out);
    return InvariantProfile(Family::FullSn, std::move(out));
}

InvariantProfile eval_tracezero_generators(const TraceZeroTuple& a) {
    const std::size_t n = a.size();
    std::vector<ProfileEntry> out;
    out.reserve(static_cast<std::size_t>(cardinality_and_dimension(n).tracezero_set));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            out.push_back({slot_label("t", {i, j}), trace_of_product(a[i], a[j])});
        }
    }
    append_triple_traces(a.tuple(), out);
    return InvariantProfile(Family::TraceZeroEn, std::move(out));
}

GaussianRational gram_relation_constant() { return GaussianRational(Rational(-1, 2)); }

namespace {

// (diag(1,-1), E12, E21): the smallest tuple with a nonzero triple trace.
TraceZeroTuple reference_tuple() {
    return TraceZeroTuple::from(MatTuple{mat2::diag(1, -1), mat2::unit(1, 2), mat2::unit(2, 1)});
}

GaussianRational raw_minor(const TraceZeroTuple& a, std::size_t i, std::size_t j, std::size_t k) {
    return det3(a.c(i), a.c(j), a.c(k), a.b(i), a.b(j), a.b(k), a.a(i), a.a(j), a.a(k));
}

}  // namespace

int calibrate_minor_sign() {
    const auto ref = reference_tuple();
    const auto oracle = word_trace(ref.tuple(), {0, 1, 2});
    const auto minor = raw_minor(ref, 0, 1, 2);
    return oracle == minor ? 1 : -1;
}

GaussianRational calibrate_gram_constant() {
    const auto ref = reference_tuple();
    const auto t = word_trace(ref.tuple(), {0, 1, 2});
    return t * t / gram_block_determinant(ref, {0, 1, 2}, {0, 1, 2});
}

GaussianRational triple_trace_minor(const TraceZeroTuple& a, std::size_t i, std::size_t j, std::size_t k) {
    if (std::max({i, j, k}) >= a.size()) throw IndexOutOfRange("minor column out of range");
    auto minor = raw_minor(a, i, j, k);
    return kTripleTraceMinorSign < 0 ? -minor : minor;
}

GaussianRational gram_block_determinant(const TraceZeroTuple& a, const SlotTriple& rows, const SlotTriple& cols) {
    for (auto s : rows) {
        if (s >= a.size()) throw IndexOutOfRange("Gram row index out of range");
    }
    for (auto s : cols) {
        if (s >= a.size()) throw IndexOutOfRange("Gram column index out of range");
    }
    Matrix3T<GaussianRational> g;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) g(r, c) = trace_of_product(a[rows[r]], a[cols[c]]);
    }
    return g.determinant();
}

GramRelation gram_relation_check(const TraceZeroTuple& a, const SlotTriple& ijk, const SlotTriple& pqr) {
    const auto gram = gram_block_determinant(a, ijk, pqr);
    auto lhs = word_trace(a.tuple(), {ijk[0], ijk[1], ijk[2]}) * word_trace(a.tuple(), {pqr[0], pqr[1], pqr[2]});
    return {std::move(lhs), gram, gram_relation_constant()};
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long result = 1;
    for (long i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

InvariantCounts cardinality_and_dimension(std::size_t size) {
    if (size == 0) throw NTooSmall("tuples have at least one slot");
    const long n = static_cast<long>(size);
    InvariantCounts counts{};
    counts.full_set = (n * n * n + 11 * n) / 6;
    counts.tracezero_set = n * (n + 1) / 2 + binomial(n, 3);
    counts.reduced_set = n >= 3 ? (n * n + 9 * n - 16) / 2 : counts.full_set;
    counts.reduced_tracezero_set = n >= 3 ? n * (n + 1) / 2 + 3 * n - 8 : counts.tracezero_set;
    // A single matrix has the two independent invariants trace and det.
    counts.dim_conj = n >= 2 ? 4 * n - 3 : 2;
    counts.dim_tracezero = n >= 2 ? 3 * n - 3 : 1;
    counts.h_set = n + binomial(n, 2) + binomial(n, 4);
    counts.dim_h = n >= 3 ? 4 * n - 6 : (n == 2 ? 3 : 1);
    return counts;
}

}  // namespace matinv
