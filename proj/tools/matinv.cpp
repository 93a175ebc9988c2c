// matinv: invariants, separation and orbit-closure classification for tuples
// of 2x2 matrices. JSON goes to stdout; diagnostics go to stderr.
//
// Exit codes: 0 success (for `separate`: inseparable), 1 separated or suite
// failures, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "matinv/harness.hpp"
#include "matinv/semi_invariants.hpp"

namespace {

using matinv::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitSeparated = 1;
constexpr int kExitError = 2;

matinv::MatTuple read_tuple(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw matinv::ParseError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return matinv::io::parse_tuple_text(text);
    } catch (const matinv::Error& e) {
        throw matinv::ParseError(path + ": " + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

matinv::CoefficientScheme parse_scheme(const std::string& name) {
    return name == "vandermonde" ? matinv::CoefficientScheme::VandermondeLevelSums
                                 : matinv::CoefficientScheme::UnitLevelSums;
}

struct Options {
    std::string action = "conj";
    std::string set = "full";
    std::string scheme = "unit";
    std::string input = "-";
    std::string a;
    std::string b;
    bool certificate = false;
    std::size_t n = 3;
    std::string suite;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::vector<long> values{-1, 0, 1};
    std::string sampler = "all";
    std::size_t budget = matinv::kGridBudget;
};

int cmd_invariants(const Options& o) {
    const auto a = read_tuple(o.input);
    const auto profile = [&] {
        if (o.action == "conj") {
            return o.set == "full" ? matinv::eval_full_generators(a)
                                   : matinv::eval_reduced_generators(a, parse_scheme(o.scheme));
        }
        if (o.action == "conj-tracezero") {
            const auto x = matinv::TraceZeroTuple::from(a);
            if (o.set == "full" || a.size() < 3) return matinv::eval_tracezero_generators(x);
            return matinv::eval_reduced_profile(x, matinv::build_reduced_combinations(a.size(), parse_scheme(o.scheme)));
        }
        if (o.set != "full") throw matinv::ParseError("the left-right action has only the full set");
        return matinv::eval_H_generators(a);
    }();
    Json out;
    out["family"] = matinv::family_name(profile.family());
    out["n"] = a.size();
    out["invariants"] = matinv::io::to_json(profile);
    emit(out);
    return kExitOk;
}

int cmd_separate(const Options& o) {
    const auto a = read_tuple(o.a);
    const auto b = read_tuple(o.b);
    matinv::Decision decision;
    if (o.action == "conj") {
        decision = o.set == "full" ? matinv::decide_equiv_full(a, b)
                                   : matinv::decide_equiv_reduced(a, b, parse_scheme(o.scheme));
    } else if (o.action == "sigma") {
        decision = matinv::conj_equiv_via_sigma(a, b);
    } else {
        if (o.set != "full") throw matinv::ParseError("the left-right action has only the full set");
        decision = matinv::decide_equiv_H(a, b);
    }
    Json out;
    out["action"] = o.action;
    out["set"] = o.action == "sigma" ? std::string("full") : o.set;
    out["inseparable"] = decision.inseparable;
    out["witness"] = decision.witness ? Json(*decision.witness) : Json(nullptr);
    emit(out);
    return decision.inseparable ? kExitOk : kExitSeparated;
}

int cmd_classify(const Options& o) {
    const auto a = matinv::TraceZeroTuple::from(read_tuple(o.a));
    const auto b = matinv::TraceZeroTuple::from(read_tuple(o.b));
    emit(matinv::io::to_json(matinv::classify_pair(a, b)));
    return kExitOk;
}

int cmd_triangularizable(const Options& o) {
    const auto a = read_tuple(o.input);
    Json out;
    const bool yes = matinv::is_triangularizable(a);
    out["triangularizable"] = yes;
    if (o.certificate) {
        if (yes) {
            const auto g = matinv::triangularize(a);
            out["certificate"] = {{"g", matinv::io::to_json(g.matrix())},
                                  {"conjugate", matinv::io::to_json(matinv::conj_act(g, a))}};
        } else {
            out["certificate"] = nullptr;
        }
    }
    emit(out);
    return kExitOk;
}

int cmd_reduced_set(const Options& o) {
    emit(matinv::io::to_json(matinv::build_reduced_combinations(o.n, parse_scheme(o.scheme))));
    return kExitOk;
}

int cmd_sizes(const Options& o) {
    const auto c = matinv::cardinality_and_dimension(o.n);
    Json out;
    out["S_n"] = c.full_set;
    out["S_prime"] = c.reduced_set;
    out["dim_conj"] = c.dim_conj;
    out["H_set"] = c.h_set;
    out["dim_H"] = c.dim_h;
    emit(out);
    return kExitOk;
}

int cmd_verify(const Options& o) {
    matinv::Report report;
    if (o.suite == "reduced") {
        std::vector<matinv::SamplerKind> kinds;
        if (o.sampler == "all") {
            kinds = {matinv::SamplerKind::RandomTuple, matinv::SamplerKind::SameOrbitPair,
                     matinv::SamplerKind::CPair,       matinv::SamplerKind::CPrimePair,
                     matinv::SamplerKind::C0Pair,      matinv::SamplerKind::PerturbedPair};
        } else {
            kinds = {matinv::sampler_from_name(o.sampler)};
        }
        report.suite = "reduced";
        report.spec = Json{{"n", o.n}, {"seed", o.seed}, {"samplers", Json::array()}};
        for (const auto kind : kinds) {
            matinv::SamplerSpec spec{kind, o.n, 10, o.seed, o.values};
            report.spec["samplers"].push_back(matinv::sampler_name(kind));
            report.merge(matinv::crosscheck_reduced_vs_full(spec, o.trials));
        }
    } else if (o.suite == "minors") {
        // The grid scan is exhaustive; --trials is ignored.
        report = matinv::grid_minor_certification(o.n, o.values, o.budget);
    } else if (o.suite == "invariance") {
        report = matinv::invariance_suite(o.seed, o.trials, o.n);
    } else if (o.suite == "sigma") {
        report = matinv::sigma_suite(o.seed, o.trials, o.n);
    } else {
        report = matinv::geometry_suite(o.seed, o.trials, o.n);
    }
    emit(matinv::to_json(report));
    return report.ok() ? kExitOk : kExitSeparated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants and orbit-closure separation for tuples of 2x2 matrices"};
    app.require_subcommand(1);
    Options o;
    const auto set_option = [&](CLI::App* cmd) {
        cmd->add_option("--set", o.set, "generating set")->check(CLI::IsMember({"full", "reduced"}));
        cmd->add_option("--scheme", o.scheme, "reduced-set coefficients")->check(CLI::IsMember({"unit", "vandermonde"}));
    };

    auto* invariants = app.add_subcommand("invariants", "evaluate a generating set on a tuple");
    invariants->add_option("--action", o.action)->check(CLI::IsMember({"conj", "conj-tracezero", "leftright"}));
    set_option(invariants);
    invariants->add_option("--input", o.input, "tuple document, - for stdin");

    auto* separate = app.add_subcommand("separate", "decide whether two tuples are separated");
    separate->add_option("--action", o.action)->check(CLI::IsMember({"conj", "leftright", "sigma"}));
    set_option(separate);
    separate->add_option("--a", o.a)->required();
    separate->add_option("--b", o.b)->required();

    auto* classify = app.add_subcommand("classify", "component of an inseparable trace-zero pair");
    classify->add_option("--a", o.a)->required();
    classify->add_option("--b", o.b)->required();

    auto* triangularizable = app.add_subcommand("triangularizable", "simultaneous triangularizability");
    triangularizable->add_option("--input", o.input, "tuple document, - for stdin");
    triangularizable->add_flag("--certificate", o.certificate, "emit g with g A g^-1 upper-triangular");

    auto* reduced_set = app.add_subcommand("reduced-set", "minor combinations of the reduced set");
    reduced_set->add_option("--n", o.n)->required();
    reduced_set->add_option("--scheme", o.scheme)->check(CLI::IsMember({"unit", "vandermonde"}));

    auto* sizes = app.add_subcommand("sizes", "set sizes and invariant ring dimensions");
    sizes->add_option("--n", o.n)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite)
        ->required()
        ->check(CLI::IsMember({"reduced", "minors", "invariance", "sigma", "geometry"}));
    verify->add_option("--n", o.n);
    verify->add_option("--trials", o.trials);
    verify->add_option("--seed", o.seed);
    verify->add_option("--values", o.values, "grid values for the minors suite")->delimiter(',');
    verify->add_option("--sampler", o.sampler, "sampler kind for the reduced suite, or all");
    verify->add_option("--budget", o.budget, "largest grid the minors suite scans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (*invariants) return cmd_invariants(o);
        if (*separate) return cmd_separate(o);
        if (*classify) return cmd_classify(o);
        if (*triangularizable) return cmd_triangularizable(o);
        if (*reduced_set) return cmd_reduced_set(o);
        if (*sizes) return cmd_sizes(o);
        return cmd_verify(o);
    } catch (const matinv::Error& e) {
        std::cerr << "matinv: " << e.what() << '\n';
        return kExitError;
    }
}
