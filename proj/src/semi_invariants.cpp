#include "matinv/semi_invariants.hpp"

#include <algorithm>

namespace matinv {

GaussianRational bracket(const MatTuple& a, std::size_t i, std::size_t j) {
    if (i >= a.size() || j >= a.size()) throw IndexOutOfRange("bracket slot out of range");
    return a[i].trace() * a[j].trace() - trace_of_product(a[i], a[j]);
}

Matrix4T<GaussianRational> xi_block(const MatTuple& a, const XiIndex& q,
                                    const std::array<GaussianRational, 4>& scales) {
    Matrix4T<GaussianRational> block;
    block.topLeftCorner<2, 2>() = scales[0] * a[q[0]];
    block.topRightCorner<2, 2>() = scales[1] * a[q[1]];
    block.bottomLeftCorner<2, 2>() = scales[2] * a[q[2]];
    block.bottomRightCorner<2, 2>() = scales[3] * a[q[3]];
    return block;
}

namespace {

// Laplace expansion along the first two rows: the six 2x2 minors there times
// their complementary minors in the last two rows.
GaussianRational det4(const Matrix4T<GaussianRational>& m) {
    const auto minor = [&](int row, int c0, int c1) {
        GaussianRational out = m(row, c0) * m(row + 1, c1);
        out.add_product(-m(row, c1), m(row + 1, c0));
        return out;
    };
    static constexpr std::array<std::array<int, 4>, 6> kSplits{{
        {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}, {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1},
    }};
    static constexpr std::array<int, 6> kSigns{1, -1, 1, 1, -1, 1};
    GaussianRational total;
    for (std::size_t s = 0; s < kSplits.size(); ++s) {
        const auto& c = kSplits[s];
        auto top = minor(0, c[0], c[1]);
        if (top.is_zero()) continue;
        if (kSigns[s] < 0) top = -top;
        total.add_product(top, minor(2, c[2], c[3]));
    }
    return total;
}

}  // namespace

GaussianRational xi(const MatTuple& a, const XiIndex& q) {
    if (*std::max_element(q.begin(), q.end()) >= a.size()) throw IndexOutOfRange("xi slot out of range");
    // det is homogeneous of degree 4 in the scales, so the alternating sum of
    // the 0/1 corner values isolates the squarefree monomial.
    const Mat2 zero = Mat2::Zero();
    GaussianRational total;
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::array<bool, 4> on;
        int ones = 0;
        for (int bit = 0; bit < 4; ++bit) {
            on[bit] = (mask >> bit) & 1U;
            ones += on[bit] ? 1 : 0;
        }
        // Unless a diagonal or anti-diagonal pair of blocks survives, two zero
        // blocks share a block row or column and the determinant is 0.
        if (!(on[0] && on[3]) && !(on[1] && on[2])) continue;
        Matrix4T<GaussianRational> block;
        block.topLeftCorner<2, 2>() = on[0] ? a[q[0]] : zero;
        block.topRightCorner<2, 2>() = on[1] ? a[q[1]] : zero;
        block.bottomLeftCorner<2, 2>() = on[2] ? a[q[2]] : zero;
        block.bottomRightCorner<2, 2>() = on[3] ? a[q[3]] : zero;
        const auto det = det4(block);
        if ((4 - ones) % 2 == 0) {
            total += det;
        } else {
            total -= det;
        }
    }
    return total;
}

InvariantProfile eval_H_generators(const MatTuple& a) {
    const std::size_t n = a.size();
    std::vector<ProfileEntry> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back({slot_label("det", {i}), det2(a[i])});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) out.push_back({slot_label("br", {i, j}), bracket(a, i, j)});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                for (std::size_t l = k + 1; l < n; ++l) {
                    out.push_back({slot_label("xi", {i, j, k, l}), xi(a, {i, j, k, l})});
                }
            }
        }
    }
    return InvariantProfile(Family::SemiInvariantH, std::move(out));
}

Decision decide_equiv_H(const MatTuple& a, const MatTuple& b) {
    if (a.size() != b.size()) throw SizeMismatch("tuples of different length");
    return compare_profiles(eval_H_generators(a), eval_H_generators(b));
}

Decision conj_equiv_via_sigma(const MatTuple& a, const MatTuple& b) {
    if (a.size() != b.size()) throw SizeMismatch("tuples of different length");
    const Mat2 id = mat2::identity();
    return decide_equiv_H(a.appended(id), b.appended(id));
}

}  // namespace matinv
