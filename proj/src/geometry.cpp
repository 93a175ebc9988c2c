#include "matinv/geometry.hpp"

#include <array>

namespace matinv {

GaussianRational commutator_det(const Mat2& ai, const Mat2& aj) {
    const Mat2 commutator = ai * aj - aj * ai;
    return det2(commutator);
}

bool is_triangularizable(const MatTuple& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!commutator_det(a[i], a[j]).is_zero()) return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (word_trace(a, {i, j, k}) != word_trace(a, {k, j, i})) return false;
            }
        }
    }
    return true;
}

namespace {

using Vec2 = Eigen::Matrix<GaussianRational, 2, 1>;

bool is_eigenvector(const Mat2& m, const Vec2& v) {
    const Vec2 image = m * v;
    return (v(0) * image(1) - v(1) * image(0)).is_zero();
}

// Nonzero vector in the kernel of the singular matrix x - mu I.
Vec2 kernel_vector(const Mat2& x, const GaussianRational& mu) {
    const GaussianRational p = x(0, 0) - mu;
    const GaussianRational& q = x(0, 1);
    Vec2 v;
    if (!p.is_zero() || !q.is_zero()) {
        v << q, -p;
    } else {
        v << x(1, 1) - mu, -x(1, 0);
        if (all_zero(v)) v << 1, 0;
    }
    return v;
}

// g with g v on the first coordinate axis, so g x g^{-1} is upper-triangular
// whenever v is an eigenvector of x.
SL2Element moving_to_first_axis(const Vec2& v) {
    // g^{-1} = [[v0, x], [v1, y]] with v0 y - v1 x = 1.
    Mat2 g_inverse;
    if (!v(0).is_zero()) {
        g_inverse << v(0), 0, v(1), v(0).inverse();
    } else {
        g_inverse << v(0), -v(1).inverse(), v(1), 0;
    }
    return SL2Element::from(make_mat2(g_inverse(1, 1), -g_inverse(0, 1), -g_inverse(1, 0), g_inverse(0, 0)));
}

}  // namespace

SL2Element triangularize(const MatTuple& a) {
    if (!is_triangularizable(a)) throw NotTriangularizable("tuple is not simultaneously triangularizable");
    if (a.is_upper_triangular()) return SL2Element();
    const auto parts = tracefree_part(a).part;
    bool lower = true;
    for (std::size_t i = 0; i < parts.size(); ++i) lower = lower && parts.c(i).is_zero();
    if (lower) return SL2Element::weyl();

    std::vector<Vec2> candidates;
    for (std::size_t i = 0; i < parts.size() && candidates.empty(); ++i) {
        const Mat2& x = parts[i];
        const auto det = det2(x);
        if (det.is_zero()) continue;
        const auto lambda = sqrt_in_field(-det);
        if (!lambda) {
            throw FieldExtensionRequired("eigenvalues of slot " + std::to_string(i + 1) + " are not in Q(i)");
        }
        candidates.push_back(kernel_vector(x, *lambda));
        candidates.push_back(kernel_vector(x, -*lambda));
    }
    if (candidates.empty()) {
        // Every slot is nilpotent; a common eigenvector spans the kernel of
        // any nonzero slot.
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!all_zero(parts[i])) {
                candidates.push_back(kernel_vector(parts[i], GaussianRational()));
                break;
            }
        }
    }
    for (const auto& v : candidates) {
        bool common = true;
        for (std::size_t i = 0; i < parts.size() && common; ++i) common = is_eigenvector(parts[i], v);
        if (common) return moving_to_first_axis(v);
    }
    throw NotTriangularizable("no common eigenvector found");
}

bool is_simultaneously_diagonalizable(const TraceZeroTuple& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!all_zero(a[i]) && det2(a[i]).is_zero()) return false;
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * a[j] != a[j] * a[i]) return false;
        }
    }
    return true;
}

bool has_closed_orbit(const TraceZeroTuple& a) {
    if (a.tuple().is_zero()) return true;
    if (!is_triangularizable(a.tuple())) return true;
    return is_simultaneously_diagonalizable(a);
}

std::string_view pair_class_name(PairClass cls) {
    switch (cls) {
        case PairClass::InC: return "InC";
        case PairClass::InCPrime: return "InCPrime";
        case PairClass::InC0: return "InC0";
        case PairClass::NotInC: return "NotInC";
    }
    return "?";
}

PairForm pair_form(const TraceZeroTuple& a, const TraceZeroTuple& a_prime) {
    if (a.size() != a_prime.size()) throw SizeMismatch("tuples of different length");
    if (!a.tuple().is_upper_triangular() || !a_prime.tuple().is_upper_triangular()) {
        throw NotUpperTriangular("pair_form needs upper-triangular tuples");
    }
    bool equal = true;
    bool opposite = true;
    bool zero = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        equal = equal && a.b(i) == a_prime.b(i);
        opposite = opposite && a.b(i) == -a_prime.b(i);
        zero = zero && a.b(i).is_zero() && a_prime.b(i).is_zero();
    }
    const PairClass cls = zero ? PairClass::InC0
                        : equal ? PairClass::InC
                        : opposite ? PairClass::InCPrime
                                   : PairClass::NotInC;
    return {a, a_prime, cls};
}

MMatrixRank m_matrix_and_rank(const PairForm& form) {
    if (form.cls == PairClass::NotInC) throw NotInCFamily("pair is not in C, C' or C0");
    const auto n = static_cast<Eigen::Index>(form.first.size());
    MMatrixRank out;
    out.m.resize(3, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto s = static_cast<std::size_t>(i);
        out.m(0, i) = form.first.b(s);
        out.m(1, i) = form.first.c(s);
        out.m(2, i) = form.second.c(s);
    }
    out.rank = exact_rank(out.m);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            for (Eigen::Index k = j + 1; k < n; ++k) {
                const auto& m = out.m;
                const auto delta = det3(m(0, i), m(0, j), m(0, k), m(1, i), m(1, j), m(1, k), m(2, i), m(2, j), m(2, k));
                if (!delta.is_zero()) {
                    out.nonzero_minors.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                                  static_cast<std::size_t>(k)});
                }
            }
        }
    }
    return out;
}

bool torus_graph_condition(const PairForm& form) {
    if (form.cls != PairClass::InC && form.cls != PairClass::InC0) {
        throw NotInCFamily("torus condition applies to C pairs only");
    }
    for (std::size_t i = 0; i < form.first.size(); ++i) {
        for (std::size_t j = i + 1; j < form.first.size(); ++j) {
            if (form.first.c(i) * form.second.c(j) != form.first.c(j) * form.second.c(i)) return false;
        }
    }
    return true;
}

std::string_view classification_name(PairClassification c) {
    switch (c) {
        case PairClassification::NotEquivalent: return "NotEquivalent";
        case PairClassification::GraphClosure: return "GraphClosure";
        case PairClassification::ExtraComponentOnly: return "ExtraComponentOnly";
        case PairClassification::Both: return "Both";
    }
    return "?";
}

namespace {

// For an upper-triangular diagonalizable tuple, the other triangular form:
// the same tuple conjugated to diagonal and then by the Weyl element, which
// negates every diagonal entry.
TraceZeroTuple swap_diagonal(const TraceZeroTuple& u) {
    SL2Element g;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!u.b(i).is_zero()) {
            g = SL2Element::upper_shear(u.c(i) / (GaussianRational(2) * u.b(i)));
            break;
        }
    }
    return conj_act(SL2Element::weyl() * g, u);
}

}  // namespace

ClassificationReport classify_pair(const TraceZeroTuple& a, const TraceZeroTuple& a_prime) {
    if (a.size() != a_prime.size()) throw SizeMismatch("tuples of different length");
    ClassificationReport report;
    if (eval_tracezero_generators(a) != eval_tracezero_generators(a_prime)) {
        report.verdict = PairClassification::NotEquivalent;
        return report;
    }
    // Outside G.W^n x G.W^n the pair can only lie in the graph closure.
    if (!is_triangularizable(a.tuple()) || !is_triangularizable(a_prime.tuple())) {
        report.verdict = PairClassification::GraphClosure;
        return report;
    }
    auto u = conj_act(triangularize(a.tuple()), a);
    auto u_prime = conj_act(triangularize(a_prime.tuple()), a_prime);
    auto form = pair_form(u, u_prime);
    if (form.cls == PairClass::InCPrime) {
        if (is_simultaneously_diagonalizable(u)) {
            form = pair_form(swap_diagonal(u), u_prime);
        } else if (is_simultaneously_diagonalizable(u_prime)) {
            form = pair_form(u, swap_diagonal(u_prime));
        }
    }
    report.form = form.cls;
    switch (form.cls) {
        case PairClass::NotInC:
            throw InconsistentData("inseparable triangular pair with incoherent diagonals");
        case PairClass::InCPrime:
            report.verdict = PairClassification::GraphClosure;
            return report;
        case PairClass::InC:
        case PairClass::InC0:
            break;
    }
    report.m = m_matrix_and_rank(form);
    report.verdict = report.m->rank <= 2 ? PairClassification::Both : PairClassification::ExtraComponentOnly;
    return report;
}

}  // namespace matinv
