#include "matinv/matrix.hpp"

namespace matinv {

Mat2 product(const Mat2& a, const Mat2& b) {
    Mat2 out = Mat2::Zero();
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out(r, c).add_product(a(r, 0), b(0, c));
            out(r, c).add_product(a(r, 1), b(1, c));
        }
    }
    return out;
}

Mat2 make_mat2(GaussianRational e11, GaussianRational e12, GaussianRational e21, GaussianRational e22) {
    Mat2 m;
    m(0, 0) = std::move(e11);
    m(0, 1) = std::move(e12);
    m(1, 0) = std::move(e21);
    m(1, 1) = std::move(e22);
    return m;
}

namespace mat2 {

Mat2 identity() { return make_mat2(1, 0, 0, 1); }
Mat2 zero() { return make_mat2(0, 0, 0, 0); }

Mat2 unit(int row, int col) {
    Mat2 m = zero();
    m(row - 1, col - 1) = 1;
    return m;
}

Mat2 diag(GaussianRational d1, GaussianRational d2) { return make_mat2(std::move(d1), 0, 0, std::move(d2)); }

}  // namespace mat2

MatTuple::MatTuple(std::vector<Mat2> mats) : mats_(std::move(mats)) {
    if (mats_.empty()) throw LengthMismatch("a matrix tuple needs at least one slot");
}

MatTuple MatTuple::zero(std::size_t n) { return MatTuple(std::vector<Mat2>(n, mat2::zero())); }

bool MatTuple::is_zero() const {
    for (const auto& m : mats_) {
        for (Eigen::Index k = 0; k < 4; ++k) {
            if (!m(k).is_zero()) return false;
        }
    }
    return true;
}

bool MatTuple::is_trace_zero() const {
    for (const auto& m : mats_) {
        if (!(m(0, 0) + m(1, 1)).is_zero()) return false;
    }
    return true;
}

bool MatTuple::is_upper_triangular() const {
    for (const auto& m : mats_) {
        if (!m(1, 0).is_zero()) return false;
    }
    return true;
}

MatTuple MatTuple::appended(const Mat2& m) const {
    auto mats = mats_;
    mats.push_back(m);
    return MatTuple(std::move(mats));
}

bool operator==(const MatTuple& a, const MatTuple& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

TraceZeroTuple TraceZeroTuple::from(MatTuple tuple) {
    if (!tuple.is_trace_zero()) throw NotTraceZero("tuple has a slot with nonzero trace");
    return TraceZeroTuple(std::move(tuple));
}

TraceZeroTuple TraceZeroTuple::from_coordinates(const std::vector<GaussianRational>& a,
                                                const std::vector<GaussianRational>& b,
                                                const std::vector<GaussianRational>& c) {
    if (a.size() != b.size() || b.size() != c.size()) throw SizeMismatch("coordinate rows differ in length");
    std::vector<Mat2> mats;
    mats.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mats.push_back(make_mat2(b[i], c[i], a[i], -b[i]));
    return TraceZeroTuple(MatTuple(std::move(mats)));
}

SL2Element SL2Element::from(const Mat2& g) {
    if (det2(g) != GaussianRational(1)) throw NotInSL2("matrix does not have determinant 1");
    return SL2Element(g);
}

Mat2 SL2Element::inverse() const { return make_mat2(g_(1, 1), -g_(0, 1), -g_(1, 0), g_(0, 0)); }

SL2Element SL2Element::upper_shear(const GaussianRational& u) { return SL2Element(make_mat2(1, u, 0, 1)); }
SL2Element SL2Element::lower_shear(const GaussianRational& v) { return SL2Element(make_mat2(1, 0, v, 1)); }
SL2Element SL2Element::weyl() { return SL2Element(make_mat2(0, 1, -1, 0)); }

MatTuple conj_act(const SL2Element& g, const MatTuple& a) {
    const Mat2& left = g.matrix();
    const Mat2 right = g.inverse();
    std::vector<Mat2> out;
    out.reserve(a.size());
    for (const auto& m : a) out.emplace_back(left * m * right);
    return MatTuple(std::move(out));
}

TraceZeroTuple conj_act(const SL2Element& g, const TraceZeroTuple& a) {
    return TraceZeroTuple::from(conj_act(g, a.tuple()));
}

MatTuple leftright_act(const SL2Element& h1, const SL2Element& h2, const MatTuple& a) {
    const Mat2& left = h1.matrix();
    const Mat2 right = h2.inverse();
    std::vector<Mat2> out;
    out.reserve(a.size());
    for (const auto& m : a) out.emplace_back(left * m * right);
    return MatTuple(std::move(out));
}

MatTuple star_act(const MatrixX& h, const MatTuple& a) {
    const auto n = static_cast<Eigen::Index>(a.size());
    if (h.rows() != n || h.cols() != n) throw SizeMismatch("star action matrix must be n x n");
    if (exact_determinant(h).is_zero()) throw SingularMatrix("star action matrix is singular");
    std::vector<Mat2> out(a.size(), mat2::zero());
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (h(i, j).is_zero()) continue;
            out[i] += h(i, j) * a[j];
        }
    }
    return MatTuple(std::move(out));
}

TraceFreeSplit tracefree_part(const MatTuple& a) {
    const GaussianRational half(Rational(1, 2));
    std::vector<Mat2> parts;
    std::vector<GaussianRational> traces;
    parts.reserve(a.size());
    traces.reserve(a.size());
    for (const auto& m : a) {
        GaussianRational tr = m(0, 0) + m(1, 1);
        const GaussianRational shift = tr * half;
        parts.push_back(make_mat2(m(0, 0) - shift, m(0, 1), m(1, 0), m(1, 1) - shift));
        traces.push_back(std::move(tr));
    }
    return {TraceZeroTuple::from(MatTuple(std::move(parts))), std::move(traces)};
}

MatTuple with_traces(const TraceZeroTuple& part, const std::vector<GaussianRational>& traces) {
    if (traces.size() != part.size()) throw SizeMismatch("trace list length differs from tuple length");
    const GaussianRational half(Rational(1, 2));
    std::vector<Mat2> mats;
    mats.reserve(part.size());
    for (std::size_t i = 0; i < part.size(); ++i) {
        const GaussianRational shift = traces[i] * half;
        const Mat2& x = part[i];
        mats.push_back(make_mat2(x(0, 0) + shift, x(0, 1), x(1, 0), x(1, 1) + shift));
    }
    return MatTuple(std::move(mats));
}

SL2Element sl2_from_shears(const GaussianRational& u, const GaussianRational& v, const GaussianRational& w) {
    return SL2Element::upper_shear(u) * SL2Element::lower_shear(v) * SL2Element::upper_shear(w);
}

SL2Element random_sl2(RandomStream& rng, long bound) {
    const auto u = rng.gaussian(bound);
    const auto v = rng.gaussian(bound);
    const auto w = rng.gaussian(bound);
    return sl2_from_shears(u, v, w);
}

Mat2 random_mat2(RandomStream& rng, long bound) {
    auto e11 = rng.gaussian(bound);
    auto e12 = rng.gaussian(bound);
    auto e21 = rng.gaussian(bound);
    auto e22 = rng.gaussian(bound);
    return make_mat2(std::move(e11), std::move(e12), std::move(e21), std::move(e22));
}

MatTuple random_tuple(RandomStream& rng, std::size_t n, long bound) {
    std::vector<Mat2> mats;
    mats.reserve(n);
    for (std::size_t i = 0; i < n; ++i) mats.push_back(random_mat2(rng, bound));
    return MatTuple(std::move(mats));
}

TraceZeroTuple random_tracezero_tuple(RandomStream& rng, std::size_t n, long bound) {
    std::vector<GaussianRational> a, b, c;
    for (std::size_t i = 0; i < n; ++i) {
        a.push_back(rng.gaussian(bound));
        b.push_back(rng.gaussian(bound));
        c.push_back(rng.gaussian(bound));
    }
    return TraceZeroTuple::from_coordinates(a, b, c);
}

MatrixX random_gl(RandomStream& rng, std::size_t n, long bound) {
    const auto size = static_cast<Eigen::Index>(n);
    MatrixX h = MatrixX::Identity(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        GaussianRational d = rng.gaussian(bound);
        while (d.is_zero()) d = rng.gaussian(bound);
        h(i, i) = d;
    }
    if (size < 2) return h;
    for (std::size_t step = 0; step < 2 * n; ++step) {
        const auto i = rng.uniform(0, size - 1);
        auto j = rng.uniform(0, size - 2);
        if (j >= i) ++j;
        // Row operation row_i += lambda * row_j keeps the determinant.
        h.row(i) += rng.gaussian(bound) * h.row(j);
    }
    return h;
}

}  // namespace matinv
