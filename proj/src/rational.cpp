#include "howe/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace howe {

namespace {

using i128 = __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::uint64_t limbs[2] = {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(u >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (neg) z = -z;
    return z;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    set_from_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    assign_big(std::move(c));
}

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_)
        big_ = std::make_unique<mpq_class>(*other.big_);
    else
        big_.reset();
    return *this;
}

void Rational::assign_big(mpq_class q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::set_from_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n <= kMax64 && n >= kMin64 && d <= kMax64) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(mpz_from(n), mpz_from(d));
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    std::string num(trim(text.substr(0, slash)));
    std::string den = slash == std::string_view::npos ? std::string("1") : std::string(trim(text.substr(slash + 1)));
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    auto valid = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s.front() == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!valid(num) || !valid(den)) throw std::invalid_argument("malformed rational: " + std::string(text));
    mpz_class zn(num), zd(den);
    if (zd == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(zn, zd);
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_from(num_), mpz_from(den_));
    return q;
}

std::string Rational::numerator_str() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
std::string Rational::denominator_str() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_big(-*big_);
        return r;
    }
    r.set_from_i128(-static_cast<i128>(num_), den_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational");
    Rational r;
    if (big_) {
        mpq_class q = 1 / *big_;
        r.assign_big(std::move(q));
        return r;
    }
    r.set_from_i128(den_, num_);
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            set_from_i128(static_cast<i128>(num_) + o.num_, 1);
        } else {
            set_from_i128(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                          static_cast<i128>(den_) * o.den_);
        }
        return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Rational();
    if (!big_ && !o.big_) {
        i128 g1 = gcd128(num_, o.den_);
        i128 g2 = gcd128(o.num_, den_);
        i128 n = (static_cast<i128>(num_) / g1) * (static_cast<i128>(o.num_) / g2);
        i128 d = (static_cast<i128>(den_) / g2) * (static_cast<i128>(o.den_) / g1);
        set_from_i128(n, d);
        return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms differ in storage class only when values differ
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace howe
