#include "matinv/separators.hpp"

namespace matinv {

std::string_view scheme_name(CoefficientScheme scheme) {
    return scheme == CoefficientScheme::UnitLevelSums ? "unit" : "vandermonde";
}

ReducedSet build_reduced_combinations(std::size_t n, CoefficientScheme scheme) {
    if (n <= 2) throw NTooSmall("reduced separating set needs n >= 3");
    ReducedSet set{n, scheme, {}};
    const int max_level = 3 * static_cast<int>(n) - 3;
    for (int level = 6; level <= max_level; ++level) {
        MinorCombination combo{level, {}};
        Integer weight = 1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    if (static_cast<int>(i + j + k + 3) != level) continue;
                    if (scheme == CoefficientScheme::UnitLevelSums) {
                        combo.terms.push_back({{i, j, k}, GaussianRational(1)});
                    } else {
                        combo.terms.push_back({{i, j, k}, GaussianRational(Rational(weight))});
                        weight *= 2;
                    }
                }
            }
        }
        set.combinations.push_back(std::move(combo));
    }
    return set;
}

std::vector<GaussianRational> triple_traces(const MatTuple& a) {
    const std::size_t n = a.size();
    std::vector<GaussianRational> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j + 1 >= n) continue;
            const Mat2 ij = product(a[i], a[j]);
            for (std::size_t k = j + 1; k < n; ++k) out.push_back(trace_of_product(ij, a[k]));
        }
    }
    return out;
}

namespace {

// Position of (i,j,k), i<j<k, in the lexicographic enumeration.
std::size_t lex_index(std::size_t n, const SlotTriple& t) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < t[0]; ++i) index += static_cast<std::size_t>(binomial(static_cast<long>(n - i - 1), 2));
    for (std::size_t j = t[0] + 1; j < t[1]; ++j) index += n - j - 1;
    return index + (t[2] - t[1] - 1);
}

void append_reduced_entries(const TraceZeroTuple& a, const ReducedSet& set, std::vector<ProfileEntry>& out) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) out.push_back({slot_label("t", {i, j}), trace_of_product(a[i], a[j])});
    }
    const auto triples = triple_traces(a.tuple());
    for (const auto& combo : set.combinations) {
        GaussianRational f;
        for (const auto& term : combo.terms) f += term.coeff * triples[lex_index(n, term.slots)];
        out.push_back({"f(" + std::to_string(combo.level) + ")", std::move(f)});
    }
}

}  // namespace

InvariantProfile eval_reduced_profile(const TraceZeroTuple& a, const ReducedSet& set) {
    if (set.n != a.size()) throw SizeMismatch("reduced set built for a different tuple length");
    std::vector<ProfileEntry> out;
    append_reduced_entries(a, set, out);
    return InvariantProfile(Family::ReducedSPrime, std::move(out));
}

InvariantProfile eval_reduced_generators(const MatTuple& a, CoefficientScheme scheme) {
    if (a.size() <= 2) return eval_full_generators(a);
    const auto split = tracefree_part(a);
    std::vector<ProfileEntry> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back({slot_label("tr", {i}), split.traces[i]});
    append_reduced_entries(split.part, build_reduced_combinations(a.size(), scheme), out);
    return InvariantProfile(Family::ReducedSPrime, std::move(out));
}

namespace {

// Compares value lists stage by stage in canonical label order, so the first
// differing stage gives the same witness as a full profile comparison and the
// later stages are never computed.
template <typename Values, typename Label>
std::optional<std::string> first_mismatch(const Values& x, const Values& y, Label label) {
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] != y[k]) return label(k);
    }
    return std::nullopt;
}

std::vector<GaussianRational> traces(const MatTuple& a) {
    std::vector<GaussianRational> out;
    for (const auto& m : a) out.push_back(m.trace());
    return out;
}

std::vector<GaussianRational> determinants(const MatTuple& a) {
    std::vector<GaussianRational> out;
    for (const auto& m : a) out.push_back(det2(m));
    return out;
}

std::vector<GaussianRational> pair_traces(const MatTuple& a, bool with_squares) {
    std::vector<GaussianRational> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = with_squares ? i : i + 1; j < a.size(); ++j) out.push_back(trace_of_product(a[i], a[j]));
    }
    return out;
}

std::vector<std::string> pair_labels(std::size_t n, bool with_squares) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = with_squares ? i : i + 1; j < n; ++j) out.push_back(slot_label("t", {i, j}));
    }
    return out;
}

std::vector<std::string> triple_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) out.push_back(slot_label("t", {i, j, k}));
        }
    }
    return out;
}

Decision verdict(std::optional<std::string> witness) { return {!witness.has_value(), std::move(witness)}; }

std::optional<std::string> trace_mismatch(const MatTuple& a, const MatTuple& b) {
    return first_mismatch(traces(a), traces(b), [](std::size_t k) { return slot_label("tr", {k}); });
}

}  // namespace

Decision decide_equiv_full(const MatTuple& a, const MatTuple& b) {
    if (a.size() != b.size()) throw SizeMismatch("tuples of different length");
    const std::size_t n = a.size();
    if (auto w = trace_mismatch(a, b)) return verdict(std::move(w));
    if (auto w = first_mismatch(determinants(a), determinants(b), [](std::size_t k) { return slot_label("det", {k}); })) {
        return verdict(std::move(w));
    }
    if (auto w = first_mismatch(pair_traces(a, false), pair_traces(b, false),
                                [n](std::size_t k) { return pair_labels(n, false)[k]; })) {
        return verdict(std::move(w));
    }
    return verdict(first_mismatch(triple_traces(a), triple_traces(b),
                                  [n](std::size_t k) { return triple_labels(n)[k]; }));
}

Decision decide_equiv_reduced(const MatTuple& a, const MatTuple& b, CoefficientScheme scheme) {
    if (a.size() != b.size()) throw SizeMismatch("tuples of different length");
    const std::size_t n = a.size();
    if (n <= 2) return decide_equiv_full(a, b);
    if (auto w = trace_mismatch(a, b)) return verdict(std::move(w));
    const auto x = tracefree_part(a).part;
    const auto y = tracefree_part(b).part;
    if (auto w = first_mismatch(pair_traces(x.tuple(), true), pair_traces(y.tuple(), true),
                                [n](std::size_t k) { return pair_labels(n, true)[k]; })) {
        return verdict(std::move(w));
    }
    const auto set = build_reduced_combinations(n, scheme);
    const auto level_sums = [&](const TraceZeroTuple& t) {
        const auto triples = triple_traces(t.tuple());
        std::vector<GaussianRational> out;
        for (const auto& combo : set.combinations) {
            GaussianRational f;
            for (const auto& term : combo.terms) f += term.coeff * triples[lex_index(n, term.slots)];
            out.push_back(std::move(f));
        }
        return out;
    };
    return verdict(first_mismatch(level_sums(x), level_sums(y), [&](std::size_t k) {
        return "f(" + std::to_string(set.combinations[k].level) + ")";
    }));
}

MatrixX pair_trace_matrix(const TraceZeroTuple& a) {
    const auto n = static_cast<Eigen::Index>(a.size());
    MatrixX t(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            t(i, j) = trace_of_product(a[i], a[j]);
            t(j, i) = t(i, j);
        }
    }
    return t;
}

TripleTraceCandidates triple_traces_up_to_sign(const MatrixX& pair_traces) {
    const auto n = pair_traces.rows();
    if (pair_traces.cols() != n) throw SizeMismatch("pair-trace matrix must be square");
    if (pair_traces != pair_traces.transpose()) throw InconsistentData("pair-trace matrix is not symmetric");

    TripleTraceCandidates out;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            for (Eigen::Index k = j + 1; k < n; ++k) {
                out.triples.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                       static_cast<std::size_t>(k)});
            }
        }
    }
    const auto gram = [&](const SlotTriple& r, const SlotTriple& c) {
        Matrix3T<GaussianRational> g;
        for (int x = 0; x < 3; ++x) {
            for (int y = 0; y < 3; ++y) g(x, y) = pair_traces(static_cast<Eigen::Index>(r[x]), static_cast<Eigen::Index>(c[y]));
        }
        return g.determinant();
    };
    const auto c = gram_relation_constant();

    // Fix the sign on the first triple with nonzero square; every other value
    // is then forced by t_T = c * Gram(T, T0) / t_T0.
    std::size_t anchor = out.triples.size();
    GaussianRational anchor_value;
    for (std::size_t t = 0; t < out.triples.size(); ++t) {
        const auto square = c * gram(out.triples[t], out.triples[t]);
        if (!square.is_zero()) {
            anchor = t;
            anchor_value = require_sqrt(square);
            break;
        }
    }
    out.plus.assign(out.triples.size(), GaussianRational());
    if (anchor < out.triples.size()) {
        const auto inv = anchor_value.inverse();
        for (std::size_t t = 0; t < out.triples.size(); ++t) {
            out.plus[t] = c * gram(out.triples[t], out.triples[anchor]) * inv;
        }
    }
    for (std::size_t x = 0; x < out.triples.size(); ++x) {
        for (std::size_t y = x; y < out.triples.size(); ++y) {
            if (out.plus[x] * out.plus[y] != c * gram(out.triples[x], out.triples[y])) {
                throw InconsistentData("pairwise traces admit no consistent triple traces");
            }
        }
    }
    out.minus.reserve(out.plus.size());
    for (const auto& v : out.plus) out.minus.push_back(-v);
    return out;
}

}  // namespace matinv
