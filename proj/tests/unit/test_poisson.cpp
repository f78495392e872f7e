#include "doctest.h"
#include "howe/poisson.hpp"
#include "howe/random.hpp"

using namespace howe;

namespace {

Scalar koszul(const SuperPolynomial& a, const SuperPolynomial& b) {
    return (*a.parity() & *b.parity()) ? Scalar(-1) : Scalar(1);
}

SuperPolynomial nonzero_homogeneous(RandomSource& rs, const PoissonAlgebra& alg, int deg, int terms) {
    for (;;) {
        auto f = rs.homogeneous(alg.generators(), deg, terms);
        if (!f.is_zero()) return f;
    }
}

}  // namespace

TEST_CASE("bracket: spec examples") {
    PoissonAlgebra xe(1, 3, Coordinates::XiEtaTheta), th(1, 3, Coordinates::Theta);
    CHECK(xe.bracket(xe.gen("p1"), xe.gen("q1")) == xe.constant(1));
    CHECK(xe.bracket(xe.gen("xi1"), xe.gen("eta1")) == xe.constant(1));
    CHECK(xe.bracket(xe.gen("th"), xe.gen("th")) == xe.constant(1));
    // the printed formula gives -(-1)^1 (dTh/dTh)^2 = +1, consistent with {th, th} = 1
    CHECK(th.bracket(th.gen("Th1"), th.gen("Th1")) == th.constant(1));
    PoissonAlgebra other(1, 2, Coordinates::XiEtaTheta);
    CHECK_THROWS_AS(xe.bracket(xe.gen("q1"), other.gen("q1")), StructuralError);
}

TEST_CASE("change of coordinates") {
    PoissonAlgebra xe(0, 3, Coordinates::XiEtaTheta), th(0, 3, Coordinates::Theta);
    CHECK(change_coordinates(xe, xe.gen("th"), th) == th.gen("Th3"));
    auto xieta = change_coordinates(xe, xe.element("xi1*eta1"), th);
    auto etaxi = change_coordinates(xe, xe.element("eta1*xi1"), th);
    CHECK((xieta + etaxi).is_zero());
    CHECK(xieta == th.element("i*Th1*Th2"));
    RandomSource rs(31);
    for (int k = 0; k < 50; ++k) {
        auto f = rs.polynomial(xe.generators(), 3, 4);
        CHECK(change_coordinates(th, change_coordinates(xe, f, th), xe) == f);
    }
}

TEST_CASE("bracket properties in both coordinate systems") {
    RandomSource rs(77);
    for (auto coords : {Coordinates::Theta, Coordinates::XiEtaTheta}) {
        PoissonAlgebra alg(2, 3, coords);
        for (int k = 0; k < 300; ++k) {
            auto f = nonzero_homogeneous(rs, alg, 3, 3), g = nonzero_homogeneous(rs, alg, 3, 3);
            CHECK((alg.bracket(f, g) + koszul(f, g) * alg.bracket(g, f)).is_zero());
        }
        for (int k = 0; k < 100; ++k) {
            auto f = nonzero_homogeneous(rs, alg, 3, 2), g = nonzero_homogeneous(rs, alg, 3, 2),
                 h = nonzero_homogeneous(rs, alg, 3, 2);
            auto j = koszul(f, h) * alg.bracket(f, alg.bracket(g, h)) +
                     koszul(g, f) * alg.bracket(g, alg.bracket(h, f)) +
                     koszul(h, g) * alg.bracket(h, alg.bracket(f, g));
            CHECK(j.is_zero());
            CHECK(alg.bracket(f, g * h) == alg.bracket(f, g) * h + koszul(f, g) * (g * alg.bracket(f, h)));
        }
    }
}

TEST_CASE("bracket respects the standard grading") {
    PoissonAlgebra alg(1, 2, Coordinates::XiEtaTheta);
    RandomSource rs(3);
    for (int k = 0; k < 100; ++k) {
        auto f = SuperPolynomial::monomial(alg.generators(), rs.monomial(*alg.generators(), 4));
        auto g = SuperPolynomial::monomial(alg.generators(), rs.monomial(*alg.generators(), 4));
        auto b = alg.bracket(f, g);
        if (b.is_zero()) continue;
        CHECK(degree_standard(b) == degree_standard(f) + degree_standard(g));
    }
}

TEST_CASE("coordinate change intertwines the two printed brackets") {
    RandomSource rs(5);
    for (int m = 2; m <= 5; ++m) {
        PoissonAlgebra xe(1, m, Coordinates::XiEtaTheta), th(1, m, Coordinates::Theta);
        for (int k = 0; k < 100; ++k) {
            auto f = nonzero_homogeneous(rs, th, 3, 2), g = nonzero_homogeneous(rs, th, 3, 2);
            CHECK(change_coordinates(th, th.bracket(f, g), xe) ==
                  xe.bracket(change_coordinates(th, f, xe), change_coordinates(th, g, xe)));
        }
    }
}

TEST_CASE("osp quadratic basis") {
    auto b10 = osp_quadratic_basis(PoissonAlgebra(1, 0, Coordinates::XiEtaTheta));
    CHECK(b10.labels == std::vector<std::string>{"q1^2", "q1*p1", "p1^2"});
    CHECK(osp_quadratic_basis(PoissonAlgebra(0, 2, Coordinates::XiEtaTheta)).labels ==
          std::vector<std::string>{"xi1*eta1"});
    // 3 + 1 + 2*1*2: osp(2|2) is (4|4)
    CHECK(osp_quadratic_basis(PoissonAlgebra(1, 2, Coordinates::XiEtaTheta)).size() == 8);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 6; ++m) {
            if (n + m > 6) continue;  // full grid is covered by the acceptance binary
            PoissonAlgebra alg(n, m, Coordinates::XiEtaTheta);
            auto b = osp_quadratic_basis(alg);
            CHECK(static_cast<long long>(b.size()) == osp_dimension(n, m));
            CHECK(is_bracket_closed(alg, b));
        }
    auto json = structure_constants_json(PoissonAlgebra(1, 0, Coordinates::XiEtaTheta), b10);
    CHECK(json.find("\"q1*p1\"") != std::string::npos);
}

TEST_CASE("Hamiltonian fields on Lambda(xi, eta)") {
    PoissonAlgebra alg(0, 4, Coordinates::XiEtaTheta);
    CHECK(hamiltonian_quotient_field(alg, alg.constant(3)).is_zero());
    CHECK(hamiltonian_quotient_field(alg, alg.gen("xi1")) ==
          -NormalOrderedOperator::derivative(alg.generators(), "eta1"));
    // measured: as printed, H_f = -ad_f, hence [H_f, H_g] = -H_{f,g}
    auto f = alg.element("xi1*eta1"), g = alg.gen("xi1");
    CHECK(commutator(hamiltonian_quotient_field(alg, f), hamiltonian_quotient_field(alg, g)) ==
          -hamiltonian_quotient_field(alg, alg.bracket(f, g)));
    RandomSource rs(8);
    for (int k = 0; k < 50; ++k) {
        auto a = rs.homogeneous(alg.generators(), 4, 3), b = rs.homogeneous(alg.generators(), 4, 3);
        auto ha = hamiltonian_quotient_field(alg, a), hb = hamiltonian_quotient_field(alg, b);
        CHECK(commutator(ha, hb) == -hamiltonian_quotient_field(alg, alg.bracket(a, b)));
        auto v = rs.polynomial(alg.generators(), 4, 4);
        CHECK(apply(ha, v) == -alg.bracket(a, v));
    }
    CHECK_THROWS_AS(hamiltonian_quotient_field(PoissonAlgebra(1, 2, Coordinates::XiEtaTheta),
                                               PoissonAlgebra(1, 2, Coordinates::XiEtaTheta).gen("q1")),
                    UnsupportedError);
}
