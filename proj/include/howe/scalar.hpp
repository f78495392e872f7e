#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "howe/rational.hpp"

namespace howe {

/// Element a + b*sqrt(2) + c*i + d*i*sqrt(2) of Q(i, sqrt 2).
///
/// Every computation in the library happens over this field: sqrt(2) shows
/// up in the odd orthogonal Chevalley sets and i in the change between the
/// Theta and xi/eta/theta odd coordinates.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t n) : a_(n) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Scalar sqrt2() { return {0, 1, 0, 0}; }
    static Scalar imag() { return {0, 0, 1, 0}; }
    static Scalar frac(std::int64_t n, std::int64_t d) { return Scalar(Rational(n, d)); }

    /// Parses the textual form written by str(); accepts any field
    /// expression in rationals, r2, i, + - * / and parentheses.
    static Scalar parse(std::string_view text);

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }
    const Rational& imag_part() const { return c_; }
    const Rational& imag_sqrt2_part() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

    Scalar operator-() const { return {-a_, -b_, -c_, -d_}; }
    Scalar inverse() const;
    Scalar conj_i() const { return {a_, b_, -c_, -d_}; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    /// Lexicographic on components; only for deterministic ordering.
    friend bool operator<(const Scalar& x, const Scalar& y);

    /// "a+b*r2+c*i+d*i*r2" with zero components omitted; "0" for zero.
    std::string str() const;
    std::size_t hash() const;

private:
    Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace howe

template <>
struct std::hash<howe::Scalar> {
    std::size_t operator()(const howe::Scalar& s) const { return s.hash(); }
};
