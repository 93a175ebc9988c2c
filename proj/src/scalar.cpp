#include "matinv/scalar.hpp"

#include <cctype>
#include <sstream>

namespace matinv {

std::string fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_part = text.substr(0, slash);
    const auto den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_decimal_integer(num_part) || !is_decimal_integer(den_part)) {
        throw ParseError("malformed fraction \"" + std::string(text) + "\"");
    }
    const Integer den = parse_integer(den_part);
    if (den == 0) throw ZeroDenominator("zero denominator in \"" + std::string(text) + "\"");
    Rational q(parse_integer(num_part), den);
    q.canonicalize();
    return q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    Rational root(sqrt(num), sqrt(den));
    root.canonicalize();
    return root;
}

GaussianRational GaussianRational::canonicalize(const Integer& re_num, const Integer& re_den,
                                                const Integer& im_num, const Integer& im_den) {
    if (re_den == 0 || im_den == 0) throw ZeroDenominator("zero denominator");
    return {Rational(re_num, re_den), Rational(im_num, im_den)};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    if (is_real()) return {Rational(1 / re_)};
    const Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    if (rhs.is_real()) {
        if (is_real()) {
            re_ *= rhs.re_;
            return *this;
        }
        re_ *= rhs.re_;
        im_ *= rhs.re_;
        return *this;
    }
    if (is_real()) {
        im_ = re_ * rhs.im_;
        re_ *= rhs.re_;
        return *this;
    }
    thread_local Rational t1, t2, t3;
    mpq_mul(t1.get_mpq_t(), re_.get_mpq_t(), rhs.re_.get_mpq_t());
    mpq_mul(t2.get_mpq_t(), im_.get_mpq_t(), rhs.im_.get_mpq_t());
    mpq_mul(t3.get_mpq_t(), re_.get_mpq_t(), rhs.im_.get_mpq_t());
    mpq_mul(im_.get_mpq_t(), im_.get_mpq_t(), rhs.re_.get_mpq_t());
    mpq_add(im_.get_mpq_t(), im_.get_mpq_t(), t3.get_mpq_t());
    mpq_sub(re_.get_mpq_t(), t1.get_mpq_t(), t2.get_mpq_t());
    return *this;
}

GaussianRational& GaussianRational::add_product(const GaussianRational& x, const GaussianRational& y) {
    thread_local Rational t;
    const auto acc = [](Rational& target, const Rational& p, const Rational& q, bool subtract) {
        if (sgn(p) == 0 || sgn(q) == 0) return;
        mpq_mul(t.get_mpq_t(), p.get_mpq_t(), q.get_mpq_t());
        if (subtract) {
            mpq_sub(target.get_mpq_t(), target.get_mpq_t(), t.get_mpq_t());
        } else {
            mpq_add(target.get_mpq_t(), target.get_mpq_t(), t.get_mpq_t());
        }
    };
    acc(re_, x.re_, y.re_, false);
    acc(re_, x.im_, y.im_, true);
    acc(im_, x.re_, y.im_, false);
    acc(im_, x.im_, y.re_, false);
    return *this;
}

std::string GaussianRational::to_string() const {
    if (is_real()) return fraction_string(re_);
    return fraction_string(re_) + (sgn(im_) < 0 ? "" : "+") + fraction_string(im_) + "*i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

std::optional<GaussianRational> sqrt_in_field(const GaussianRational& x) {
    const Rational& p = x.real();
    const Rational& q = x.imag();
    if (sgn(q) == 0) {
        if (sgn(p) >= 0) {
            if (auto r = rational_sqrt(p)) return GaussianRational(*r);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(Rational(-p))) return GaussianRational(Rational(0), *r);
        return std::nullopt;
    }
    // (u + v i)^2 = p + q i  <=>  u^2 - v^2 = p, 2uv = q, so u^2 = (p + |x|) / 2.
    const auto modulus = rational_sqrt(x.norm());
    if (!modulus) return std::nullopt;
    const auto u = rational_sqrt(Rational((p + *modulus) / 2));
    if (!u || sgn(*u) == 0) return std::nullopt;
    Rational v = q / (2 * *u);
    return GaussianRational(*u, v);
}

GaussianRational require_sqrt(const GaussianRational& x) {
    if (auto r = sqrt_in_field(x)) return *r;
    throw NotASquare(x.to_string() + " has no square root in Q(i)");
}

}  // namespace matinv
