#pragma once

// Slow reference computations used only by the tests. None of them share code
// paths with the library beyond the scalar type.

#include <algorithm>
#include <numeric>
#include <vector>

#include "matinv/matrix.hpp"

namespace oracle {

using matinv::GaussianRational;

inline int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

/// Leibniz expansion; fine up to 6x6.
template <typename Matrix>
GaussianRational leibniz_det(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    GaussianRational total;
    do {
        GaussianRational term(permutation_sign(p));
        for (int r = 0; r < n; ++r) term *= m(r, p[static_cast<std::size_t>(r)]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Largest k with a nonzero k x k minor.
inline long minor_rank(const matinv::MatrixX& m) {
    const auto rows = static_cast<int>(m.rows());
    const auto cols = static_cast<int>(m.cols());
    for (int k = std::min(rows, cols); k > 0; --k) {
        std::vector<bool> rsel(static_cast<std::size_t>(rows), false);
        std::fill(rsel.begin(), rsel.begin() + k, true);
        do {
            std::vector<bool> csel(static_cast<std::size_t>(cols), false);
            std::fill(csel.begin(), csel.begin() + k, true);
            do {
                matinv::MatrixX sub(k, k);
                int rr = 0;
                for (int r = 0; r < rows; ++r) {
                    if (!rsel[static_cast<std::size_t>(r)]) continue;
                    int cc = 0;
                    for (int c = 0; c < cols; ++c) {
                        if (csel[static_cast<std::size_t>(c)]) sub(rr, cc++) = m(r, c);
                    }
                    ++rr;
                }
                if (!leibniz_det(sub).is_zero()) return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

/// Coefficient of s0 s1 s2 s3 in det [[s0 A, s1 B], [s2 C, s3 D]], read off
/// the Leibniz expansion: a permutation contributes exactly when it takes one
/// entry from each block.
inline GaussianRational xi_symbolic(const matinv::MatTuple& a, const std::array<std::size_t, 4>& q) {
    const auto entry = [&](int r, int c) -> const GaussianRational& {
        const int block = (r / 2) * 2 + c / 2;
        return a[q[static_cast<std::size_t>(block)]](r % 2, c % 2);
    };
    std::vector<int> p{0, 1, 2, 3};
    GaussianRational total;
    do {
        std::array<int, 4> uses{};
        for (int r = 0; r < 4; ++r) ++uses[static_cast<std::size_t>((r / 2) * 2 + p[static_cast<std::size_t>(r)] / 2)];
        if (std::any_of(uses.begin(), uses.end(), [](int u) { return u != 1; })) continue;
        GaussianRational term(permutation_sign(p));
        for (int r = 0; r < 4; ++r) term *= entry(r, p[static_cast<std::size_t>(r)]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Tr of the plain left-to-right product.
inline GaussianRational product_trace(const std::vector<matinv::Mat2>& factors) {
    matinv::Mat2 acc = matinv::mat2::identity();
    for (const auto& f : factors) acc = matinv::Mat2(acc * f);
    return acc.trace();
}

/// 1-based triples i<j<k with i+j+k == level, lexicographic.
inline std::vector<std::array<std::size_t, 3>> triples_at_level(std::size_t n, std::size_t level) {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            for (std::size_t k = j + 1; k <= n; ++k) {
                if (i + j + k == level) out.push_back({i, j, k});
            }
        }
    }
    return out;
}

}  // namespace oracle
