#pragma once

// Exact dense linear algebra over a field scalar. Everything here works for
// any Eigen-compatible exact scalar (GaussianRational, mpq_class, ...).

#include <utility>

#include <Eigen/Core>
#include <Eigen/LU>

#include "matinv/scalar.hpp"

namespace matinv {

template <typename Scalar>
using Matrix2T = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Matrix3T = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using Matrix4T = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using MatrixXT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorXT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixX = MatrixXT<GaussianRational>;
using VectorX = VectorXT<GaussianRational>;

template <typename Scalar>
bool is_zero(const Scalar& x) {
    return x == Scalar(0);
}
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

/// Exact test; Eigen's isZero() is tolerance based.
template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (!is_zero(m(r, c))) return false;
        }
    }
    return true;
}

namespace detail {

// Fraction-free (Bareiss) forward elimination in place. Returns the rank and
// the parity of the row swaps performed.
template <typename Scalar>
std::pair<Eigen::Index, bool> bareiss_eliminate(MatrixXT<Scalar>& m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Scalar previous(1);
    Eigen::Index rank = 0;
    bool odd_swaps = false;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = rank;
        while (pivot < rows && is_zero(m(pivot, col))) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            m.row(pivot).swap(m.row(rank));
            odd_swaps = !odd_swaps;
        }
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            for (Eigen::Index c = col + 1; c < cols; ++c) {
                m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / previous;
            }
            m(r, col) = Scalar(0);
        }
        previous = m(rank, col);
        ++rank;
    }
    return {rank, odd_swaps};
}

}  // namespace detail

/// Exact rank by fraction-free Gaussian elimination.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& matrix) {
    MatrixXT<typename Derived::Scalar> work = matrix;
    return detail::bareiss_eliminate(work).first;
}

/// Exact determinant of a square matrix of any size.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& matrix) {
    using Scalar = typename Derived::Scalar;
    if (matrix.rows() != matrix.cols()) throw SizeMismatch("determinant of a non-square matrix");
    const Eigen::Index n = matrix.rows();
    if (n == 0) return Scalar(1);
    MatrixXT<Scalar> work = matrix;
    const auto [rank, odd_swaps] = detail::bareiss_eliminate(work);
    if (rank < n) return Scalar(0);
    Scalar det = work(n - 1, n - 1);
    return odd_swaps ? Scalar(-det) : det;
}

/// Cofactor expansion of a 3x3 determinant built from three columns.
template <typename Scalar>
Scalar det3(const Scalar& a11, const Scalar& a12, const Scalar& a13,
            const Scalar& a21, const Scalar& a22, const Scalar& a23,
            const Scalar& a31, const Scalar& a32, const Scalar& a33) {
    return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) + a13 * (a21 * a32 - a22 * a31);
}

}  // namespace matinv
