#include "doctest.h"
#include "howe/random.hpp"
#include "howe/weyl_clifford.hpp"

using namespace howe;

namespace {

NormalOrderedOperator random_operator(RandomSource& rs, const GeneratorSetPtr& fock, int max_deg, int terms,
                                      std::optional<int> parity = std::nullopt) {
    NormalOrderedOperator op(fock);
    int n = rs.uniform(1, terms);
    for (int k = 0; k < n; ++k) {
        Monomial a = rs.monomial(*fock, max_deg), b = rs.monomial(*fock, max_deg);
        if (parity && ((a.parity() + b.parity()) & 1) != *parity) continue;
        op += NormalOrderedOperator::term(fock, a, b, rs.scalar());
    }
    return op;
}

int op_parity(RandomSource& rs) { return rs.uniform(0, 1); }

}  // namespace

TEST_CASE("quantize: spec examples") {
    PoissonAlgebra alg(1, 2, Coordinates::XiEtaTheta);
    auto fock = fock_generators(alg);
    Scalar hbar = Scalar::frac(3, 2);
    auto q1 = NormalOrderedOperator::multiplication(SuperPolynomial::generator(fock, "q1"));
    auto dq1 = NormalOrderedOperator::derivative(fock, "q1");
    auto xi1 = NormalOrderedOperator::multiplication(SuperPolynomial::generator(fock, "xi1"));
    auto dxi1 = NormalOrderedOperator::derivative(fock, "xi1");
    CHECK(quantize(alg, alg.element("q1*p1"), hbar) == hbar * (q1 * dq1));
    CHECK(quantize(alg, alg.element("p1*q1"), hbar) == hbar * (q1 * dq1));
    CHECK(quantize(alg, alg.constant(1), hbar) == NormalOrderedOperator::identity(fock));
    auto op = quantize(alg, alg.element("xi1*eta1"), hbar);
    CHECK(op == hbar * (xi1 * dxi1));
    CHECK(apply(op, SuperPolynomial::constant(fock, 1)).is_zero());
    CHECK(apply(op, SuperPolynomial::generator(fock, "xi1")) == hbar * SuperPolynomial::generator(fock, "xi1"));
    CHECK_THROWS_AS(quantize(PoissonAlgebra(1, 2, Coordinates::Theta), PoissonAlgebra(1, 2, Coordinates::Theta).gen("q1")),
                    UnsupportedError);
}

TEST_CASE("commutator: spec examples") {
    PoissonAlgebra alg(1, 2, Coordinates::XiEtaTheta);
    auto fock = fock_generators(alg);
    auto q1 = NormalOrderedOperator::multiplication(SuperPolynomial::generator(fock, "q1"));
    auto dq1 = NormalOrderedOperator::derivative(fock, "q1");
    auto xi1 = NormalOrderedOperator::multiplication(SuperPolynomial::generator(fock, "xi1"));
    auto dxi1 = NormalOrderedOperator::derivative(fock, "xi1");
    auto id = NormalOrderedOperator::identity(fock);
    CHECK(commutator(dq1, q1) == id);
    Scalar h2 = Scalar(4);  // hbar = 2
    CHECK(commutator(h2 * (dq1 * dq1), q1 * q1) == h2 * (Scalar(4) * (q1 * dq1) + Scalar(2) * id));
    CHECK(commutator(xi1 * dxi1, xi1) == xi1);
    CHECK((q1 * dq1).str() == "q1|D[q1]");
}

TEST_CASE("normal ordering agrees with successive application") {
    auto fock = GeneratorSet::make({"x1", "x2"}, {"a1", "a2", "a3"});
    RandomSource rs(99);
    for (int k = 0; k < 200; ++k) {
        auto a = random_operator(rs, fock, 3, 3), b = random_operator(rs, fock, 3, 3);
        auto ab = compose(a, b);
        for (int t = 0; t < 50; ++t) {
            auto v = rs.polynomial(fock, 3, 3);
            CHECK(apply(ab, v) == apply(a, apply(b, v)));
        }
    }
}

TEST_CASE("supercommutator Jacobi and associativity") {
    auto fock = GeneratorSet::make({"x1"}, {"a1", "a2"});
    RandomSource rs(17);
    for (int k = 0; k < 100; ++k) {
        int pa = op_parity(rs), pb = op_parity(rs), pc = op_parity(rs);
        auto a = random_operator(rs, fock, 2, 3, pa), b = random_operator(rs, fock, 2, 3, pb),
             c = random_operator(rs, fock, 2, 3, pc);
        auto sign = [](int x, int y) { return (x & y) ? Scalar(-1) : Scalar(1); };
        auto j = sign(pa, pc) * commutator(a, commutator(b, c)) + sign(pb, pa) * commutator(b, commutator(c, a)) +
                 sign(pc, pb) * commutator(c, commutator(a, b));
        CHECK(j.is_zero());
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("quantization defect") {
    PoissonAlgebra alg(1, 2, Coordinates::XiEtaTheta);
    Scalar hbar = Scalar(3);
    CHECK(quantization_defect(alg, alg.element("q1*p1"), alg.element("q1^2"), hbar) == Scalar(0));
    CHECK(quantization_defect(alg, alg.element("p1^2"), alg.element("q1^2"), hbar) == Scalar(2) * hbar * hbar);
    CHECK(quantization_defect(alg, alg.element("xi1*eta1"), alg.element("xi1*eta1"), hbar) == Scalar(0));
    for (Scalar h : {Scalar(1), Scalar(2), Scalar::frac(1, 2)})
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 4; ++m) {
                PoissonAlgebra a(n, m, Coordinates::XiEtaTheta);
                auto b = osp_quadratic_basis(a);
                for (std::size_t i = 0; i < b.size(); ++i)
                    for (std::size_t j = 0; j < b.size(); ++j)
                        CHECK_NOTHROW(quantization_defect(a, b.elements[i], b.elements[j], h));
            }
    // the printed theta rule hbar (th + d/dth) is not a deformation: non-scalar defect
    PoissonAlgebra a(1, 1, Coordinates::XiEtaTheta);
    CHECK_THROWS_AS(quantization_defect(a, a.element("q1*th"), a.element("p1*th"), 1, ThetaRule::Printed),
                    InvariantViolation);
    CHECK(quantization_defect(a, a.element("q1*th"), a.element("p1*th"), 1) == Scalar::frac(1, 2));
    CHECK_THROWS_AS(quantize(a, a.gen("th"), 3), UnsupportedError);
}

TEST_CASE("quantization is linear") {
    PoissonAlgebra alg(1, 3, Coordinates::XiEtaTheta);
    RandomSource rs(4);
    for (int k = 0; k < 50; ++k) {
        auto f = rs.polynomial(alg.generators(), 3, 3), g = rs.polynomial(alg.generators(), 3, 3);
        Scalar s = rs.scalar();
        CHECK(quantize(alg, f + s * g) == quantize(alg, f) + s * quantize(alg, g));
    }
}

TEST_CASE("image dimensions") {
    CHECK(image_dimension(2).image_dimension == 4);
    CHECK(image_dimension(4).image_dimension == 16);
    auto odd = image_dimension(3);
    CHECK(odd.image_dimension == 8);
    CHECK(odd.failures_conjugate_j == 0);
    CHECK(odd.centralizer_of_j == 8);
    // the printed J = i Q(th) does not supercommute with Q(th) itself
    CHECK(odd.failures_printed_j > 0);
}

TEST_CASE("printed o(n) bases") {
    auto o4 = spinor_basis_o(2, OrthogonalKind::Even);
    CHECK(o4.cartan[0] == o4.algebra.element("xi1*eta1-xi2*eta2"));
    CHECK(o4.cartan[1] == o4.algebra.element("xi1*eta1+xi2*eta2"));
    auto o3 = spinor_basis_o(1, OrthogonalKind::Odd);
    CHECK(o3.raising[0] == o3.algebra.element("r2*eta1*th"));
    CHECK(o3.cartan[0] == o3.algebra.element("2*xi1*eta1"));
    for (int k = 1; k <= 4; ++k) {
        for (auto kind : {OrthogonalKind::Even, OrthogonalKind::Odd}) {
            if (kind == OrthogonalKind::Even && k < 2) continue;
            auto b = spinor_basis_o(k, kind);
            auto check = check_chevalley_relations(b);
            CAPTURE(b.type);
            CAPTURE(k);
            CHECK(check.ok);
            // measured: the printed bracket gives {X+_i, X-_i} = -H_i
            CHECK(check.cartan_sign == -1);
            CHECK(is_bracket_closed(b.algebra, osp_quadratic_basis(b.algebra)));
        }
        auto sp = check_chevalley_relations(symplectic_basis(k));
        CHECK(sp.ok);
        CHECK(sp.cartan_sign == 1);
    }
}

TEST_CASE("vacuum highest weights") {
    auto rep = highest_weight_of_vacuum(spinor_basis_o(3, OrthogonalKind::Even));
    CHECK(rep.eigenvalues == std::vector<Scalar>{0, 0, 1});
    rep = highest_weight_of_vacuum(spinor_basis_o(2, OrthogonalKind::Odd));
    CHECK(rep.eigenvalues == std::vector<Scalar>{0, 1});
    // with the printed theta rule the last eigenvalue doubles
    rep = highest_weight_of_vacuum(spinor_basis_o(2, OrthogonalKind::Odd), 1, ThetaRule::Printed);
    CHECK(rep.eigenvalues == std::vector<Scalar>{0, 2});
    CHECK(rep.to_json().find("vacuum_eigenvalues") != std::string::npos);
    // sp(2): H = Q(qp) kills the vacuum; X+ = q^2/2 does not
    PoissonAlgebra sp2(1, 0, Coordinates::XiEtaTheta);
    auto fock = fock_generators(sp2);
    CHECK(apply(quantize(sp2, sp2.element("q1*p1")), SuperPolynomial::constant(fock, 1)).is_zero());
    CHECK_THROWS_AS(highest_weight_of_vacuum(symplectic_basis(1)), NotHighestWeightError);
}
