#pragma once

// Exact arithmetic in the Gaussian rationals Q(i).

#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

#include "matinv/errors.hpp"

namespace matinv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders a rational as "p/q"; the denominator is always printed.
std::string fraction_string(const Rational& q);

/// Parses "p/q" or "p". Throws ZeroDenominator for "p/0" and ParseError for
/// anything that is not an optionally signed decimal fraction.
Rational parse_fraction(std::string_view text);

/// Square root of a non-negative rational when it is rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// An element re + im*i of Q(i), both parts kept as reduced fractions with
/// positive denominators (zero is 0/1).
class GaussianRational {
public:
    GaussianRational() = default;

    template <std::integral I>
    GaussianRational(I value) : re_(static_cast<long>(value)) {}  // NOLINT(implicit)

    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT(implicit)

    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /// Builds (re_num/re_den) + (im_num/im_den) i in canonical form.
    static GaussianRational canonicalize(const Integer& re_num, const Integer& re_den,
                                         const Integer& im_num, const Integer& im_den);

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& real() const noexcept { return re_; }
    const Rational& imag() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2.
    Rational norm() const { return Rational(re_ * re_ + im_ * im_); }
    /// Throws ZeroDenominator on zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& rhs) {
        re_ += rhs.re_;
        im_ += rhs.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& rhs) {
        re_ -= rhs.re_;
        im_ -= rhs.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs) { return *this *= rhs.inverse(); }
    /// *this += x * y without intermediate GaussianRational values.
    GaussianRational& add_product(const GaussianRational& x, const GaussianRational& y);

    friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
    friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
    friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
    friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Human-readable form, e.g. "1/2+3/1*i".
    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

/// Square root inside Q(i). The returned root has positive real part, or zero
/// real part and non-negative imaginary part. nullopt when x is not a square.
std::optional<GaussianRational> sqrt_in_field(const GaussianRational& x);

/// As sqrt_in_field, throwing NotASquare instead of returning nullopt.
GaussianRational require_sqrt(const GaussianRational& x);

}  // namespace matinv

namespace Eigen {

template <>
struct NumTraits<matinv::GaussianRational> : GenericNumTraits<matinv::GaussianRational> {
    using Real = matinv::GaussianRational;
    using NonInteger = matinv::GaussianRational;
    using Literal = matinv::GaussianRational;
    using Nested = matinv::GaussianRational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 32
    };
};

}  // namespace Eigen
