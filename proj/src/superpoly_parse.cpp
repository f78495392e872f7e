#include <cctype>
#include <stdexcept>

#include "howe/superpoly.hpp"

namespace howe {

namespace {

class PolyParser {
public:
    PolyParser(GeneratorSetPtr gens, std::string_view s) : gens_(std::move(gens)), s_(s) {}

    SuperPolynomial run() {
        SuperPolynomial v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error (" + why + ") at offset " + std::to_string(pos_) +
                                    " in '" + std::string(s_) + "'");
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
    SuperPolynomial constant(const Scalar& c) const { return SuperPolynomial::constant(gens_, c); }

    SuperPolynomial expr() {
        SuperPolynomial acc(gens_);
        bool first = true;
        for (;;) {
            bool neg = false;
            if (eat('+')) {
            } else if (eat('-')) {
                neg = true;
            } else if (!first) {
                break;
            }
            SuperPolynomial t = term();
            if (neg)
                acc -= t;
            else
                acc += t;
            first = false;
        }
        return acc;
    }

    SuperPolynomial term() {
        SuperPolynomial v = power();
        for (;;) {
            if (eat('*')) {
                v = v * power();
            } else if (eat('/')) {
                SuperPolynomial d = power();
                if (d.is_zero()) fail("division by zero");
                if (d.size() != 1 || d.terms().begin()->first.total_degree() != 0 ||
                    d.constant_term().is_zero())
                    fail("division by a non-constant");
                v *= d.constant_term().inverse();
            } else {
                break;
            }
        }
        return v;
    }

    SuperPolynomial power() {
        SuperPolynomial base = atom();
        if (!eat('^')) return base;
        bool paren = eat('(');
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (paren && !eat(')')) fail("missing ')'");
        if (neg) return negative_power(base, e);
        SuperPolynomial out = constant(1);
        for (int k = 0; k < e; ++k) out = out * base;
        return out;
    }

    // only a single Laurent generator (or a nonzero constant) may be inverted
    SuperPolynomial negative_power(const SuperPolynomial& base, int e) {
        if (base.size() != 1) fail("negative power of a sum");
        const auto& [m, c] = *base.terms().begin();
        if (m.odd) fail("negative power of an odd element");
        Monomial r = m;
        for (std::size_t i = 0; i < r.even.size(); ++i) {
            if (r.even[i] && !gens_->is_laurent(i)) fail("negative power of non-Laurent generator");
            r.even[i] *= -e;
        }
        Scalar inv = c.inverse(), coef = 1;
        for (int k = 0; k < e; ++k) coef *= inv;
        return SuperPolynomial::monomial(gens_, r, coef);
    }

    SuperPolynomial atom() {
        skip();
        if (eat('(')) {
            SuperPolynomial v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (eat('-')) return -atom();
        if (pos_ >= s_.size()) fail("unexpected end");
        char ch = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(Scalar(Rational::parse(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            if (name == "r2") return constant(Scalar::sqrt2());
            if (name == "i") return constant(Scalar::imag());
            if (!gens_->find(name)) fail("unknown generator '" + std::string(name) + "'");
            return SuperPolynomial::generator(gens_, name);
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    GeneratorSetPtr gens_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

SuperPolynomial SuperPolynomial::parse(GeneratorSetPtr gens, std::string_view text) {
    return PolyParser(std::move(gens), text).run();
}

}  // namespace howe
