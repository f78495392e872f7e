#include <algorithm>

#include "doctest.h"
#include "howe/random.hpp"
#include "howe/superpoly.hpp"

using namespace howe;

namespace {

GeneratorSetPtr mixed() {
    GeneratorSet::Spec s;
    s.even = {"q1", "q2", "p1", "p2"};
    s.odd = {"xi1", "xi2", "eta1", "eta2", "th"};
    return GeneratorSet::make(s);
}

SuperPolynomial P(const GeneratorSetPtr& g, const char* t) { return SuperPolynomial::parse(g, t); }

// Oracle: write each monomial as a word of odd letters, concatenate and bubble
// sort, counting transpositions.
SuperPolynomial oracle_multiply(const SuperPolynomial& a, const SuperPolynomial& b) {
    SuperPolynomial out(a.generators());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<int> word;
            for (int i = 0; i < 64; ++i)
                if (ma.odd >> i & 1) word.push_back(i);
            for (int i = 0; i < 64; ++i)
                if (mb.odd >> i & 1) word.push_back(i);
            int sign = 1;
            bool repeated = false;
            for (std::size_t x = 0; x < word.size(); ++x)
                for (std::size_t y = 0; y + 1 < word.size() - x; ++y) {
                    if (word[y] == word[y + 1]) repeated = true;
                    if (word[y] > word[y + 1]) {
                        std::swap(word[y], word[y + 1]);
                        sign = -sign;
                    }
                }
            for (std::size_t y = 0; y + 1 < word.size(); ++y)
                if (word[y] == word[y + 1]) repeated = true;
            if (repeated) continue;
            Monomial m;
            m.even = ma.even;
            for (std::size_t i = 0; i < m.even.size(); ++i) m.even[i] += mb.even[i];
            for (int w : word) m.odd |= std::uint64_t{1} << w;
            out += SuperPolynomial::monomial(a.generators(), m, Scalar(sign) * ca * cb);
        }
    return out;
}

}  // namespace

TEST_CASE("scalar arithmetic in Q(i, sqrt 2)") {
    Scalar r2 = Scalar::sqrt2(), i = Scalar::imag();
    CHECK(r2 * r2 == Scalar(2));
    CHECK(i * i == Scalar(-1));
    CHECK((r2 * i).str() == "i*r2");
    CHECK(Scalar::parse("1/2-3*r2+i-2/3*i*r2").str() == "1/2-3*r2+i-2/3*i*r2");
    CHECK(Scalar::parse("(1+r2)/(1-r2)") == Scalar(-3) - Scalar(2) * r2);
    RandomSource rs(11);
    for (int k = 0; k < 100; ++k) {
        Scalar x = rs.nonzero_scalar(), y = rs.scalar(), z = rs.scalar();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * x.inverse() == Scalar(1));
        CHECK(Scalar::parse(x.str()) == x);
    }
}

TEST_CASE("rational overflow promotes to GMP and demotes back") {
    Rational big(1);
    for (int k = 0; k < 5; ++k) big *= Rational(1000000007);
    Rational back = big;
    for (int k = 0; k < 5; ++k) back /= Rational(1000000007);
    CHECK(back == Rational(1));
    CHECK(back.is_one());
    CHECK(Rational::parse(big.str()) == big);
}

TEST_CASE("multiply: spec examples") {
    auto g = mixed();
    CHECK((P(g, "xi1") * P(g, "xi1")).is_zero());
    CHECK(P(g, "xi1") * P(g, "xi2") == P(g, "xi1*xi2"));
    CHECK(P(g, "xi2") * P(g, "xi1") == -P(g, "xi1*xi2"));
    CHECK(P(g, "p1+th") * P(g, "q1+th") == P(g, "p1*q1+p1*th+q1*th"));
    auto h = GeneratorSet::make({"q"}, {});
    CHECK_THROWS_AS(P(g, "q1") * SuperPolynomial::generator(h, "q"), StructuralError);
}

TEST_CASE("partial derivatives: spec examples") {
    auto g = mixed();
    CHECK(partial_derivative(P(g, "q1^2"), "q1") == P(g, "2*q1"));
    CHECK(partial_derivative(P(g, "xi1*xi2"), "xi2") == -P(g, "xi1"));
    CHECK(partial_derivative(P(g, "p1*q1"), "th").is_zero());
    CHECK_THROWS_AS(partial_derivative(P(g, "q1"), "nope"), StructuralError);
}

TEST_CASE("degrees") {
    auto g = GeneratorSet::make({{"q1", "p1"},
                                 {"xi1", "eta1", "th"},
                                 {},
                                 {GeneratorRole::Q, GeneratorRole::P},
                                 {GeneratorRole::Q, GeneratorRole::P, GeneratorRole::Theta}});
    CHECK(degree_standard(P(g, "1")) == -2);
    CHECK(degree_standard(P(g, "p1")) == -1);
    CHECK(degree_standard(P(g, "q1*p1")) == 0);
    CHECK_THROWS_AS(degree_standard(P(g, "q1+q1*p1")), DegreeError);
    CHECK(degree_rough(P(g, "q1^3*xi1"), OddDimParity::Odd) == -2);
    CHECK(degree_rough(P(g, "q1*p1"), OddDimParity::Odd) == 0);
    CHECK(degree_rough(P(g, "q1*th"), OddDimParity::Odd) == -1);
    CHECK(degree_rough(P(g, "p1*th"), OddDimParity::Odd) == 1);
    CHECK(degree_rough(P(g, "p1*eta1"), OddDimParity::Odd) == 2);
    CHECK_THROWS_AS(degree_rough(P(g, "q1+p1"), OddDimParity::Odd), DegreeError);
}

TEST_CASE("serialization round trip") {
    auto g = mixed();
    RandomSource rs(5);
    for (int k = 0; k < 100; ++k) {
        auto f = rs.polynomial(g, 4, 6);
        CHECK(SuperPolynomial::parse(g, f.str()) == f);
    }
    CHECK(P(g, "(1+r2)*q1 - xi1*q2").str() == "(1+r2)*q1-q2*xi1");
}

TEST_CASE("property suites: supercommutativity, associativity, Leibniz") {
    auto g = mixed();
    RandomSource rs(2024);
    for (int k = 0; k < 200; ++k) {
        auto u = rs.homogeneous(g, 4, 4), v = rs.homogeneous(g, 4, 4);
        int s = (*u.parity() & *v.parity()) ? -1 : 1;
        CHECK((u * v - Scalar(s) * (v * u)).is_zero());
        CHECK(u * v == oracle_multiply(u, v));
    }
    for (int k = 0; k < 100; ++k) {
        auto a = rs.polynomial(g, 3, 3), b = rs.polynomial(g, 3, 3), c = rs.polynomial(g, 3, 3);
        CHECK((a * b) * c == a * (b * c));
    }
    for (int k = 0; k < 100; ++k) {
        auto f = rs.homogeneous(g, 3, 4), h = rs.homogeneous(g, 3, 4);
        Generator x{true, static_cast<std::size_t>(rs.uniform(0, 4))};
        Scalar s = (*f.parity() & 1) ? Scalar(-1) : Scalar(1);
        CHECK(partial_derivative(f * h, x) == partial_derivative(f, x) * h + s * (f * partial_derivative(h, x)));
        Generator y{false, static_cast<std::size_t>(rs.uniform(0, 3))};
        CHECK(partial_derivative(f * h, y) == partial_derivative(f, y) * h + f * partial_derivative(h, y));
    }
}

TEST_CASE("standard degree is additive on monomials") {
    auto g = mixed();
    RandomSource rs(9);
    for (int k = 0; k < 100; ++k) {
        auto a = SuperPolynomial::monomial(g, rs.monomial(*g, 4));
        auto b = SuperPolynomial::monomial(g, rs.monomial(*g, 4));
        auto ab = a * b;
        if (ab.is_zero()) continue;
        CHECK(degree_standard(ab) + 2 == degree_standard(a) + 2 + degree_standard(b) + 2);
    }
}
