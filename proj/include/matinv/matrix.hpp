#pragma once

// 2x2 matrices over Q(i), n-tuples of them, and the three group actions:
// simultaneous conjugation by SL2, the left-right SL2 x SL2 action, and the
// commuting GL_n action that recombines slots linearly.

#include <cstddef>
#include <vector>

#include "matinv/linalg.hpp"
#include "matinv/random.hpp"

namespace matinv {

using Mat2 = Matrix2T<GaussianRational>;

template <typename Derived>
typename Derived::Scalar det2(const Eigen::MatrixBase<Derived>& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/// Trace of a product of two 2x2 matrices without forming the product.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar trace_of_product(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b) {
    typename DerivedA::Scalar out(0);
    out.add_product(a(0, 0), b(0, 0));
    out.add_product(a(0, 1), b(1, 0));
    out.add_product(a(1, 0), b(0, 1));
    out.add_product(a(1, 1), b(1, 1));
    return out;
}

/// a * b for 2x2 matrices, accumulated in place.
Mat2 product(const Mat2& a, const Mat2& b);

Mat2 make_mat2(GaussianRational e11, GaussianRational e12, GaussianRational e21, GaussianRational e22);

namespace mat2 {
Mat2 identity();
Mat2 zero();
/// Matrix unit E_{rc} with 1-based row/column, e.g. unit(1, 2) = [[0,1],[0,0]].
Mat2 unit(int row, int col);
Mat2 diag(GaussianRational d1, GaussianRational d2);
}  // namespace mat2

/// An n-matrix: a non-empty sequence of 2x2 matrices. Slots are 0-based in
/// the C++ interface; labels and files use 1-based slot numbers.
class MatTuple {
public:
    explicit MatTuple(std::vector<Mat2> mats);
    MatTuple(std::initializer_list<Mat2> mats) : MatTuple(std::vector<Mat2>(mats)) {}

    static MatTuple zero(std::size_t n);

    std::size_t size() const noexcept { return mats_.size(); }
    const Mat2& operator[](std::size_t i) const { return mats_[i]; }
    Mat2& operator[](std::size_t i) { return mats_[i]; }
    const std::vector<Mat2>& mats() const noexcept { return mats_; }
    auto begin() const { return mats_.begin(); }
    auto end() const { return mats_.end(); }

    bool is_zero() const;
    bool is_trace_zero() const;
    bool is_upper_triangular() const;

    /// The tuple with one more slot appended.
    MatTuple appended(const Mat2& m) const;

    friend bool operator==(const MatTuple& a, const MatTuple& b);
    friend bool operator!=(const MatTuple& a, const MatTuple& b) { return !(a == b); }

private:
    std::vector<Mat2> mats_;
};

/// A tuple whose slots all have trace zero, A_i = [[b_i, c_i], [a_i, -b_i]].
class TraceZeroTuple {
public:
    /// Throws NotTraceZero.
    static TraceZeroTuple from(MatTuple tuple);
    static TraceZeroTuple from_coordinates(const std::vector<GaussianRational>& a,
                                           const std::vector<GaussianRational>& b,
                                           const std::vector<GaussianRational>& c);
    static TraceZeroTuple zero(std::size_t n) { return TraceZeroTuple(MatTuple::zero(n)); }

    const MatTuple& tuple() const noexcept { return tuple_; }
    std::size_t size() const noexcept { return tuple_.size(); }
    const Mat2& operator[](std::size_t i) const { return tuple_[i]; }

    const GaussianRational& a(std::size_t i) const { return tuple_[i](1, 0); }
    const GaussianRational& b(std::size_t i) const { return tuple_[i](0, 0); }
    const GaussianRational& c(std::size_t i) const { return tuple_[i](0, 1); }

    friend bool operator==(const TraceZeroTuple& x, const TraceZeroTuple& y) { return x.tuple_ == y.tuple_; }

private:
    explicit TraceZeroTuple(MatTuple tuple) : tuple_(std::move(tuple)) {}
    MatTuple tuple_;
};

/// An element of SL2(Q(i)).
class SL2Element {
public:
    SL2Element() : g_(mat2::identity()) {}
    /// Throws NotInSL2 unless det(g) == 1.
    static SL2Element from(const Mat2& g);

    const Mat2& matrix() const noexcept { return g_; }
    /// Adjugate, which is the inverse because det = 1.
    Mat2 inverse() const;

    friend SL2Element operator*(const SL2Element& x, const SL2Element& y) {
        return SL2Element(Mat2(x.g_ * y.g_));
    }
    friend bool operator==(const SL2Element& x, const SL2Element& y) { return x.g_ == y.g_; }

    static SL2Element upper_shear(const GaussianRational& u);  ///< [[1,u],[0,1]]
    static SL2Element lower_shear(const GaussianRational& v);  ///< [[1,0],[v,1]]
    static SL2Element weyl();                                  ///< [[0,1],[-1,0]]

private:
    explicit SL2Element(Mat2 g) : g_(std::move(g)) {}
    Mat2 g_;
};

class NotInSL2 : public Error {
public:
    explicit NotInSL2(const std::string& what) : Error(what) {}
};

/// Slot-wise g A_i g^{-1}.
MatTuple conj_act(const SL2Element& g, const MatTuple& a);
TraceZeroTuple conj_act(const SL2Element& g, const TraceZeroTuple& a);

/// Slot-wise h1 A_i h2^{-1}.
MatTuple leftright_act(const SL2Element& h1, const SL2Element& h2, const MatTuple& a);

/// Slot i of the result is sum_j h(i, j) A_j. Throws SizeMismatch or
/// SingularMatrix.
MatTuple star_act(const MatrixX& h, const MatTuple& a);

struct TraceFreeSplit {
    TraceZeroTuple part;
    std::vector<GaussianRational> traces;
};

/// A_i = X_i + (Tr(A_i) / 2) I with X_i trace-free.
TraceFreeSplit tracefree_part(const MatTuple& a);

/// Inverse of tracefree_part.
MatTuple with_traces(const TraceZeroTuple& part, const std::vector<GaussianRational>& traces);

/// E12(u) E21(v) E12(w) for bounded random u, v, w.
SL2Element random_sl2(RandomStream& rng, long bound = 10);
SL2Element sl2_from_shears(const GaussianRational& u, const GaussianRational& v, const GaussianRational& w);

Mat2 random_mat2(RandomStream& rng, long bound = 10);
MatTuple random_tuple(RandomStream& rng, std::size_t n, long bound = 10);
TraceZeroTuple random_tracezero_tuple(RandomStream& rng, std::size_t n, long bound = 10);

/// Product of random elementary matrices and a random invertible diagonal;
/// always invertible.
MatrixX random_gl(RandomStream& rng, std::size_t n, long bound = 10);

}  // namespace matinv
