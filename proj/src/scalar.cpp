#include "howe/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace howe {

namespace {

// (a + b r)(a' + b' r) with r^2 = 2
void mul_sqrt2(const Rational& a, const Rational& b, const Rational& a2, const Rational& b2, Rational& out_a,
               Rational& out_b) {
    if (b.is_zero() && b2.is_zero()) {
        out_a = a * a2;
        out_b = Rational();
        return;
    }
    out_a = a * a2 + Rational(2) * b * b2;
    out_b = a * b2 + b * a2;
}

class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    Scalar run() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("scalar parse error (" + why + ") in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar acc;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (eat('+')) {
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                break;
            }
            Scalar t = term();
            acc += sign > 0 ? t : -t;
            first = false;
        }
        return acc;
    }

    Scalar term() {
        Scalar v = atom();
        for (;;) {
            if (eat('*'))
                v *= atom();
            else if (eat('/'))
                v /= atom();
            else
                break;
        }
        return v;
    }

    Scalar atom() {
        skip();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (eat('-')) return -atom();
        if (s_.substr(pos_, 2) == "r2") {
            pos_ += 2;
            return Scalar::sqrt2();
        }
        if (pos_ < s_.size() && s_[pos_] == 'i') {
            ++pos_;
            return Scalar::imag();
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected number");
        return Scalar(Rational::parse(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).run(); }

Scalar& Scalar::operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        a_ *= o.a_;
        return *this;
    }
    // (x + i y)(x' + i y') with x = a + b r, y = c + d r
    Rational xx_a, xx_b, yy_a, yy_b, xy_a, xy_b, yx_a, yx_b;
    mul_sqrt2(a_, b_, o.a_, o.b_, xx_a, xx_b);
    mul_sqrt2(c_, d_, o.c_, o.d_, yy_a, yy_b);
    mul_sqrt2(a_, b_, o.c_, o.d_, xy_a, xy_b);
    mul_sqrt2(c_, d_, o.a_, o.b_, yx_a, yx_b);
    a_ = xx_a - yy_a;
    b_ = xx_b - yy_b;
    c_ = xy_a + yx_a;
    d_ = xy_b + yx_b;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (is_rational()) return Scalar(a_.inverse());
    // 1/(x + i y) = (x - i y) / (x^2 + y^2), x^2 + y^2 in Q(sqrt 2) and nonzero
    Rational n_a, n_b, t_a, t_b;
    mul_sqrt2(a_, b_, a_, b_, n_a, n_b);
    mul_sqrt2(c_, d_, c_, d_, t_a, t_b);
    n_a += t_a;
    n_b += t_b;
    // 1/(u + v r) = (u - v r)/(u^2 - 2 v^2)
    Rational norm = n_a * n_a - Rational(2) * n_b * n_b;
    Rational inv_a = n_a / norm;
    Rational inv_b = -n_b / norm;
    Scalar inv_n(inv_a, inv_b, 0, 0);
    return conj_i() * inv_n;
}

bool operator<(const Scalar& x, const Scalar& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    if (x.c_ != y.c_) return x.c_ < y.c_;
    return x.d_ < y.d_;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    auto emit = [&out](const Rational& q, const char* unit) {
        if (q.is_zero()) return;
        std::string num = q.str();
        bool neg = num.front() == '-';
        if (neg) num.erase(0, 1);
        if (!out.empty())
            out += neg ? "-" : "+";
        else if (neg)
            out += "-";
        if (*unit == '\0') {
            out += num;
        } else if (num == "1") {
            out += unit;
        } else {
            out += num;
            out += "*";
            out += unit;
        }
    };
    emit(a_, "");
    emit(b_, "r2");
    emit(c_, "i");
    emit(d_, "i*r2");
    return out;
}

std::size_t Scalar::hash() const {
    std::size_t h = a_.hash();
    h = h * 31 + b_.hash();
    h = h * 31 + c_.hash();
    h = h * 31 + d_.hash();
    return h;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace howe
