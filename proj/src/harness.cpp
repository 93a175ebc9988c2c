#include "matinv/harness.hpp"

#include <array>
#include <functional>

#include "matinv/semi_invariants.hpp"

namespace matinv {

namespace {

constexpr std::array<std::pair<SamplerKind, std::string_view>, 7> kSamplerNames{{
    {SamplerKind::RandomTuple, "RandomTuple"},
    {SamplerKind::SameOrbitPair, "SameOrbitPair"},
    {SamplerKind::CPair, "CPair"},
    {SamplerKind::CPrimePair, "CPrimePair"},
    {SamplerKind::C0Pair, "C0Pair"},
    {SamplerKind::PerturbedPair, "PerturbedPair"},
    {SamplerKind::GridTuple, "GridTuple"},
}};

using Coordinates = std::vector<GaussianRational>;

Coordinates random_row(RandomStream& rng, std::size_t n, long bound) {
    Coordinates row;
    row.reserve(n);
    // Now and then draw from {-1, 0, 1} so zero columns and repeated
    // columns show up.
    const bool small = rng.uniform(0, 3) == 0;
    for (std::size_t i = 0; i < n; ++i) row.push_back(small ? GaussianRational(rng.uniform(-1, 1)) : rng.gaussian(bound));
    return row;
}

// Either an independent row or alpha * b + beta * c, which keeps
// rank(b; c; c') <= 2.
Coordinates second_c_row(RandomStream& rng, const Coordinates& b, const Coordinates& c, long bound) {
    if (rng.coin()) return random_row(rng, b.size(), bound);
    const auto alpha = rng.gaussian(bound);
    const auto beta = rng.coin() ? rng.gaussian(bound) : GaussianRational();
    Coordinates out;
    for (std::size_t i = 0; i < b.size(); ++i) out.push_back(alpha * b[i] + beta * c[i]);
    return out;
}

TuplePair c_family_pair(RandomStream& rng, std::size_t n, long bound, SamplerKind kind) {
    const Coordinates zeros(n, GaussianRational());
    Coordinates b = kind == SamplerKind::C0Pair ? zeros : random_row(rng, n, bound);
    Coordinates b_prime = b;
    if (kind == SamplerKind::CPrimePair) {
        for (auto& x : b_prime) x = -x;
    }
    const Coordinates c = random_row(rng, n, bound);
    const Coordinates c_prime = second_c_row(rng, b, c, bound);
    return {TraceZeroTuple::from_coordinates(zeros, b, c).tuple(),
            TraceZeroTuple::from_coordinates(zeros, b_prime, c_prime).tuple()};
}

TuplePair grid_pair(const SamplerSpec& spec, std::size_t index) {
    const std::size_t radix = spec.grid_values.size();
    std::array<Coordinates, 3> rows;
    for (auto& row : rows) row.reserve(spec.n);
    std::size_t rest = index;
    for (std::size_t slot = 0; slot < spec.n; ++slot) {
        for (auto& row : rows) {
            row.push_back(GaussianRational(spec.grid_values[rest % radix]));
            rest /= radix;
        }
    }
    auto a = TraceZeroTuple::from_coordinates(rows[0], rows[1], rows[2]);
    std::vector<Mat2> negated;
    for (const auto& m : a.tuple()) negated.emplace_back(-m);
    return {a.tuple(), MatTuple(std::move(negated))};
}

RandomStream trial_stream(std::uint64_t seed, std::uint64_t salt, std::size_t n, std::size_t index) {
    return RandomStream(seed).substream((salt << 56) ^ (static_cast<std::uint64_t>(n) << 40) ^ index);
}

}  // namespace

std::string_view sampler_name(SamplerKind kind) {
    for (const auto& [k, name] : kSamplerNames) {
        if (k == kind) return name;
    }
    return "?";
}

SamplerKind sampler_from_name(std::string_view name) {
    for (const auto& [k, n] : kSamplerNames) {
        if (n == name) return k;
    }
    throw ParseError("unknown sampler kind " + std::string(name));
}

std::size_t grid_size(const SamplerSpec& spec) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < 3 * spec.n; ++i) total *= spec.grid_values.size();
    return total;
}

TuplePair sample_one(const SamplerSpec& spec, std::size_t index) {
    if (spec.kind == SamplerKind::GridTuple) return grid_pair(spec, index);
    auto rng = trial_stream(spec.seed, static_cast<std::uint64_t>(spec.kind) + 1, spec.n, index);
    switch (spec.kind) {
        case SamplerKind::RandomTuple: {
            auto first = random_tuple(rng, spec.n, spec.bound);
            return {std::move(first), random_tuple(rng, spec.n, spec.bound)};
        }
        case SamplerKind::SameOrbitPair: {
            auto a = random_tuple(rng, spec.n, spec.bound);
            const auto g = random_sl2(rng, spec.bound);
            auto b = conj_act(g, a);
            return {std::move(a), std::move(b)};
        }
        case SamplerKind::PerturbedPair: {
            auto a = random_tuple(rng, spec.n, spec.bound);
            const auto g = random_sl2(rng, spec.bound);
            auto b = conj_act(g, a);
            const auto slot = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(spec.n) - 1));
            const auto entry = rng.uniform(0, 3);
            GaussianRational delta = rng.gaussian(3);
            while (delta.is_zero()) delta = rng.gaussian(3);
            b[slot](entry) += delta;
            return {std::move(a), std::move(b)};
        }
        case SamplerKind::CPair:
        case SamplerKind::CPrimePair:
        case SamplerKind::C0Pair:
            return c_family_pair(rng, spec.n, spec.bound, spec.kind);
        case SamplerKind::GridTuple:
            break;
    }
    return grid_pair(spec, index);
}

std::vector<TuplePair> sample(const SamplerSpec& spec, std::size_t count) {
    std::vector<TuplePair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_one(spec, i));
    return out;
}

void Report::record_failure(io::Json counterexample) {
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(counterexample));
}

void Report::merge(const Report& other) {
    trials += other.trials;
    failures += other.failures;
    for (const auto& c : other.counterexamples) {
        if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(c);
    }
}

io::Json to_json(const Report& report) {
    io::Json j;
    j["suite"] = report.suite;
    j["spec"] = report.spec;
    j["trials"] = report.trials;
    j["failures"] = report.failures;
    j["counterexamples"] = report.counterexamples;
    return j;
}

io::Json to_json(const SamplerSpec& spec) {
    io::Json j;
    j["kind"] = sampler_name(spec.kind);
    j["n"] = spec.n;
    j["bound"] = spec.bound;
    j["seed"] = spec.seed;
    if (spec.kind == SamplerKind::GridTuple) j["values"] = spec.grid_values;
    return j;
}

namespace {

io::Json pair_json(const TuplePair& p) {
    io::Json j;
    j["a"] = io::to_json(p.first);
    j["b"] = io::to_json(p.second);
    return j;
}

}  // namespace

Report crosscheck_reduced_vs_full(const SamplerSpec& spec, std::size_t count) {
    Report report{"reduced", to_json(spec), 0, 0, {}};
    if (spec.kind == SamplerKind::GridTuple) count = std::min(count, grid_size(spec));
    for (std::size_t t = 0; t < count; ++t) {
        const auto pair = sample_one(spec, t);
        const auto full = decide_equiv_full(pair.first, pair.second);
        const auto reduced = decide_equiv_reduced(pair.first, pair.second);
        ++report.trials;
        if (full.inseparable != reduced.inseparable) {
            auto j = pair_json(pair);
            j["trial"] = t;
            j["full"] = io::to_json(full);
            j["reduced"] = io::to_json(reduced);
            report.record_failure(std::move(j));
        }
    }
    return report;
}

Report grid_minor_certification(std::size_t n, const std::vector<long>& values, std::size_t budget) {
    if (values.empty()) throw BudgetExceeded("empty value set");
    std::size_t total = 1;
    for (std::size_t i = 0; i < 3 * n; ++i) {
        total *= values.size();
        if (total > budget) {
            throw BudgetExceeded("grid of " + std::to_string(values.size()) + "^" + std::to_string(3 * n) +
                                 " matrices exceeds the budget of " + std::to_string(budget));
        }
    }
    io::Json spec;
    spec["n"] = n;
    spec["values"] = values;
    spec["scheme"] = "unit";
    Report report{"minors", spec, 0, 0, {}};
    if (n < 3) {
        report.trials = total;
        return report;
    }
    const auto set = build_reduced_combinations(n);

    std::vector<std::array<long, 3>> columns;
    for (long x : values) {
        for (long y : values) {
            for (long z : values) columns.push_back({x, y, z});
        }
    }
    std::vector<SlotTriple> triples;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});
        }
    }
    std::vector<std::size_t> choice(n, 0);
    std::vector<long> minors(triples.size());
    const auto minor_of = [&](const SlotTriple& t) {
        const auto& p = columns[choice[t[0]]];
        const auto& q = columns[choice[t[1]]];
        const auto& r = columns[choice[t[2]]];
        return det3(p[0], q[0], r[0], p[1], q[1], r[1], p[2], q[2], r[2]);
    };
    for (std::size_t scanned = 0; scanned < total; ++scanned) {
        bool any_minor = false;
        for (std::size_t t = 0; t < triples.size(); ++t) {
            minors[t] = minor_of(triples[t]);
            any_minor = any_minor || minors[t] != 0;
        }
        if (any_minor) {
            bool all_f_vanish = true;
            for (const auto& combo : set.combinations) {
                long f = 0;
                for (const auto& term : combo.terms) {
                    const auto pos = static_cast<std::size_t>(
                        std::find(triples.begin(), triples.end(), term.slots) - triples.begin());
                    f += minors[pos];
                }
                if (f != 0) {
                    all_f_vanish = false;
                    break;
                }
            }
            if (all_f_vanish) {
                io::Json matrix = io::Json::array();
                for (int row = 0; row < 3; ++row) {
                    io::Json r = io::Json::array();
                    for (std::size_t c = 0; c < n; ++c) r.push_back(columns[choice[c]][row]);
                    matrix.push_back(std::move(r));
                }
                io::Json j;
                j["matrix"] = std::move(matrix);
                report.record_failure(std::move(j));
            }
        }
        ++report.trials;
        for (std::size_t c = 0; c < n; ++c) {
            if (++choice[c] < columns.size()) break;
            choice[c] = 0;
        }
    }
    return report;
}

Report invariance_suite(std::uint64_t seed, std::size_t trials, std::size_t n) {
    io::Json spec;
    spec["seed"] = seed;
    spec["n"] = n;
    Report report{"invariance", spec, 0, 0, {}};
    const auto id = mat2::identity();
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_stream(seed, 100, n, t);
        const MatTuple a = t == 0 ? MatTuple::zero(n) : random_tuple(rng, n);
        const auto g = random_sl2(rng);
        const auto h1 = random_sl2(rng);
        const auto h2 = random_sl2(rng);
        const auto x = tracefree_part(a).part;
        ++report.trials;

        const auto check = [&](const char* identity, bool ok) {
            if (ok) return;
            io::Json j;
            j["identity"] = identity;
            j["trial"] = t;
            j["tuple"] = io::to_json(a);
            report.record_failure(std::move(j));
        };

        check("conjugation_invariance", eval_full_generators(conj_act(g, a)) == eval_full_generators(a));
        check("leftright_invariance", eval_H_generators(leftright_act(h1, h2, a)) == eval_H_generators(a));

        bool cayley = true;
        for (const auto& m : a) {
            const Mat2 lhs = m * m - m.trace() * m + det2(m) * id;
            cayley = cayley && all_zero(lhs);
        }
        check("cayley_hamilton", cayley);

        bool anticommutator = true;
        bool trace_square = true;
        bool commutator = true;
        for (std::size_t i = 0; i < n; ++i) {
            trace_square = trace_square && trace_of_product(x[i], x[i]) == GaussianRational(-2) * det2(x[i]);
            for (std::size_t j = i; j < n; ++j) {
                const auto tij = trace_of_product(x[i], x[j]);
                anticommutator = anticommutator && Mat2(x[i] * x[j] + x[j] * x[i]) == Mat2(tij * id);
                if (j > i) {
                    commutator = commutator &&
                                 commutator_det(x[i], x[j]) == GaussianRational(4) * det2(x[i]) * det2(x[j]) - tij * tij;
                }
            }
        }
        check("anticommutator", anticommutator);
        check("trace_square", trace_square);
        check("commutator_det", commutator);

        bool minor = true;
        bool antisymmetry = true;
        std::vector<SlotTriple> triples;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    triples.push_back({i, j, k});
                    const auto tijk = word_trace(x.tuple(), {i, j, k});
                    minor = minor && triple_trace_minor(x, i, j, k) == tijk;
                    antisymmetry = antisymmetry && word_trace(x.tuple(), {i, k, j}) == -tijk;
                }
            }
        }
        if (!triples.empty()) {
            // One shuffled triple per trial exercises the alternating sign.
            auto shuffled = triples[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(triples.size()) - 1))];
            std::swap(shuffled[static_cast<std::size_t>(rng.uniform(0, 1))], shuffled[2]);
            minor = minor && triple_trace_minor(x, shuffled[0], shuffled[1], shuffled[2]) ==
                                 word_trace(x.tuple(), {shuffled[0], shuffled[1], shuffled[2]});
            const auto& lhs = triples[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(triples.size()) - 1))];
            const auto& rhs = triples[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(triples.size()) - 1))];
            check("gram_relation", gram_relation_check(x, lhs, rhs).holds());
        }
        check("triple_trace_minor", minor);
        check("triple_antisymmetry", antisymmetry);

        const auto h = random_gl(rng, n, 5);
        check("star_conjugation_commute", star_act(h, conj_act(g, a)) == conj_act(g, star_act(h, a)));
    }
    return report;
}

namespace {

constexpr std::array<SamplerKind, 6> kPairKinds{SamplerKind::SameOrbitPair, SamplerKind::PerturbedPair,
                                                SamplerKind::RandomTuple,   SamplerKind::CPair,
                                                SamplerKind::CPrimePair,    SamplerKind::C0Pair};

}  // namespace

Report sigma_suite(std::uint64_t seed, std::size_t trials, std::size_t n) {
    io::Json spec;
    spec["seed"] = seed;
    spec["n"] = n;
    Report report{"sigma", spec, 0, 0, {}};
    for (std::size_t t = 0; t < trials; ++t) {
        const SamplerSpec s{kPairKinds[t % kPairKinds.size()], n, 10, seed, {}};
        const auto pair = sample_one(s, t / kPairKinds.size());
        const auto via_sigma = conj_equiv_via_sigma(pair.first, pair.second);
        const auto full = decide_equiv_full(pair.first, pair.second);
        ++report.trials;
        if (via_sigma.inseparable != full.inseparable) {
            auto j = pair_json(pair);
            j["trial"] = t;
            j["sampler"] = sampler_name(s.kind);
            report.record_failure(std::move(j));
        }
    }
    return report;
}

Report geometry_suite(std::uint64_t seed, std::size_t trials, std::size_t n) {
    io::Json spec;
    spec["seed"] = seed;
    spec["n"] = n;
    Report report{"geometry", spec, 0, 0, {}};
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_stream(seed, 200, n, t);
        ++report.trials;
        const auto fail = [&](const char* what, io::Json detail) {
            detail["check"] = what;
            detail["trial"] = t;
            report.record_failure(std::move(detail));
        };

        // Triangularization certificate on a random conjugate of an
        // upper-triangular tuple.
        std::vector<Mat2> upper;
        for (std::size_t i = 0; i < n; ++i) {
            upper.push_back(make_mat2(rng.gaussian(10), rng.gaussian(10), 0, rng.gaussian(10)));
        }
        const auto conjugated = conj_act(random_sl2(rng), MatTuple(std::move(upper)));
        try {
            if (!is_triangularizable(conjugated)) {
                fail("triangularizable_recognized", io::Json{{"tuple", io::to_json(conjugated)}});
            } else if (!conj_act(triangularize(conjugated), conjugated).is_upper_triangular()) {
                fail("triangularize_certificate", io::Json{{"tuple", io::to_json(conjugated)}});
            }
        } catch (const Error& e) {
            fail("triangularize_error", io::Json{{"tuple", io::to_json(conjugated)}, {"error", e.what()}});
        }

        // C' pairs lie in the graph closure.
        const auto cprime = sample_one({SamplerKind::CPrimePair, n, 10, seed, {}}, t);
        const auto cprime_class = classify_pair(TraceZeroTuple::from(cprime.first), TraceZeroTuple::from(cprime.second));
        if (!decide_equiv_full(cprime.first, cprime.second).inseparable ||
            (cprime_class.verdict != PairClassification::GraphClosure &&
             cprime_class.verdict != PairClassification::Both)) {
            fail("cprime_inseparable", pair_json(cprime));
        }

        // C pairs: Both exactly when every Delta_ijk vanishes.
        const auto cpair = sample_one({SamplerKind::CPair, n, 10, seed, {}}, t);
        const auto a = TraceZeroTuple::from(cpair.first);
        const auto a_prime = TraceZeroTuple::from(cpair.second);
        bool all_vanish = true;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    all_vanish = all_vanish && det3(a.b(i), a.b(j), a.b(k), a.c(i), a.c(j), a.c(k), a_prime.c(i),
                                                    a_prime.c(j), a_prime.c(k))
                                                   .is_zero();
                }
            }
        }
        const auto verdict = classify_pair(a, a_prime).verdict;
        if ((verdict == PairClassification::Both) != all_vanish ||
            (verdict != PairClassification::Both && verdict != PairClassification::ExtraComponentOnly)) {
            fail("cpair_both_iff_minors_vanish", pair_json(cpair));
        }

        // Same verdict after independent random conjugation of each side.
        const auto moved = classify_pair(conj_act(random_sl2(rng), a), conj_act(random_sl2(rng), a_prime));
        if (moved.verdict != verdict) fail("verdict_stable_under_conjugation", pair_json(cpair));
    }
    return report;
}

}  // namespace matinv
