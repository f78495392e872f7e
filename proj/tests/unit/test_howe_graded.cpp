#include "doctest.h"
#include "howe/closure.hpp"
#include "howe/random.hpp"
#include "howe/errors.hpp"
#include "howe/supermatrix.hpp"

using namespace howe;

namespace {

long binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

SuperMatrix random_homogeneous(RandomSource& rs, std::size_t r, std::size_t s, int p) {
    SuperMatrix m(r, s);
    for (std::size_t i = 0; i < r + s; ++i)
        for (std::size_t j = 0; j < r + s; ++j)
            if ((m.index_parity(i) + m.index_parity(j)) % 2 == p && rs.coin()) m(i, j) = rs.scalar();
    return m;
}

}  // namespace

TEST_CASE("supermatrix: super Jacobi and supertrace of commutators") {
    RandomSource rs(11);
    for (int t = 0; t < 100; ++t) {
        int pa = rs.uniform(0, 1), pb = rs.uniform(0, 1), pc = rs.uniform(0, 1);
        auto a = random_homogeneous(rs, 2, 2, pa), b = random_homogeneous(rs, 2, 2, pb),
             c = random_homogeneous(rs, 2, 2, pc);
        Scalar sign((pa * pb) % 2 ? -1 : 1);
        CHECK(supercommutator(a, supercommutator(b, c)) ==
              supercommutator(supercommutator(a, b), c) + sign * supercommutator(b, supercommutator(a, c)));
        CHECK(supercommutator(a, b).supertrace().is_zero());
    }
}

TEST_CASE("form algebras: superdimensions") {
    CHECK(superdimension(form_algebra(FormEquippedSpace::orthogonal(4))).str() == "(6|0)");
    CHECK(superdimension(form_algebra(FormEquippedSpace::symplectic(2))).str() == "(10|0)");
    CHECK(superdimension(form_algebra(FormEquippedSpace::orthosymplectic(1, 1))).str() == "(3|2)");
    CHECK(superdimension(form_algebra(FormEquippedSpace::orthosymplectic(3, 3))).str() == "(24|18)");
    CHECK(superdimension(form_algebra(FormEquippedSpace::periplectic(3))).str() == "(9|9)");
    CHECK(superdimension(form_algebra(FormEquippedSpace::periplectic(3), true)).str() == "(8|9)");
    CHECK(FormEquippedSpace::periplectic(2).flavor == Flavor::Periplectic);
    CHECK_THROWS_AS(FormEquippedSpace::make(2, 0, Matrix(2, 2)), StructuralError);
}

TEST_CASE("centralizer: scalars and gl(V1) (x) 1") {
    auto gl = gl_basis(1, 1);
    auto all = centralizer({SuperMatrix::identity(1, 1)}, gl);
    CHECK(superdimension(all).str() == "(2|2)");

    TensorLayout t(1, 1, 2, 0);
    std::vector<SuperMatrix> left, right;
    for (const auto& x : gl_basis(1, 1)) left.push_back(tensor_left(t, x));
    for (const auto& y : gl_basis(2, 0)) right.push_back(tensor_right(t, y));
    auto c = centralizer(left, gl_basis(t.r, t.s));
    CHECK(superdimension(c).str() == "(4|0)");
    CHECK(same_span(c, right));
}

TEST_CASE("lefschetz: sl2 relations and H eigenvalues") {
    for (int n = 1; n <= 4; ++n) {
        auto t = lefschetz_triple(n);
        CHECK(t.relations_hold());
        for (int i = 0; i <= 2 * n; ++i)
            for (const auto& m : monomials_of_degree(*t.space, i)) {
                SuperPolynomial v = SuperPolynomial::monomial(t.space, m, Scalar(1));
                CHECK(apply(t.h, v) == v * Scalar(i - n));
            }
    }
    auto t = lefschetz_triple(1);
    auto omega = apply(t.xplus, SuperPolynomial::constant(t.space, Scalar(1)));
    CHECK(!omega.is_zero());
    CHECK(apply(t.xminus, omega) == SuperPolynomial::constant(t.space, Scalar(1)));
}

TEST_CASE("lefschetz: primitive dimensions and direct sum") {
    CHECK(primitive_forms(2, 1).size() == 4);
    CHECK(primitive_forms(2, 2).size() == 5);
    CHECK(primitive_forms(1, 2).empty());
    for (int n = 1; n <= 4; ++n) {
        auto t = lefschetz_triple(n);
        for (int i = 0; i <= 2 * n; ++i) {
            std::size_t expected = i <= n ? binom(2 * n, i) - binom(2 * n, i - 2) : 0;
            CHECK(primitive_forms(n, i).size() == expected);
            auto d = check_decomposition(t, i, [n](int k) { return primitive_forms(n, k); });
            CHECK(d.direct_sum);
            CHECK(d.ambient_dimension == static_cast<std::size_t>(binom(2 * n, i)));
        }
    }
}

TEST_CASE("harmonics: dimensions and decomposition") {
    CHECK(spherical_harmonics(3, 2).size() == 5);
    CHECK(spherical_harmonics(2, 4).size() == 2);
    CHECK(spherical_harmonics(5, 0).size() == 1);
    for (int d = 1; d <= 6; ++d) {
        auto t = harmonic_triple(d);
        CHECK(t.relations_hold());
        for (int i = 0; i <= 6; ++i) {
            std::size_t expected = binom(d + i - 1, i) - binom(d + i - 3, i - 2);
            CHECK(spherical_harmonics(d, i).size() == expected);
            auto dec = check_decomposition(t, i, [d](int k) { return spherical_harmonics(d, k); });
            CHECK(dec.direct_sum);
        }
    }
}

TEST_CASE("h_primitives specializes to primitive forms and harmonics") {
    auto t = lefschetz_triple(2);
    auto hp = h_primitives({t.xminus}, t.space, 4);
    for (int i = 0; i <= 4; ++i) CHECK(hp.dimension(i) == primitive_forms(2, i).size());
    auto empty = h_primitives({}, t.space, 4);
    for (int i = 0; i <= 4; ++i) CHECK(empty.dimension(i) == static_cast<std::size_t>(binom(4, i)));
    auto hm = harmonic_triple(3);
    auto hh = h_primitives({hm.xminus}, hm.space, 4);
    for (int i = 0; i <= 4; ++i) CHECK(hh.dimension(i) == spherical_harmonics(3, i).size());
    CHECK_THROWS_AS(h_primitives({t.xplus}, t.space, 2), StructuralError);
}

TEST_CASE("irreducibility by commutant") {
    for (int n = 1; n <= 2; ++n) {
        auto t = lefschetz_triple(n);
        auto gamma = commuting_derivations(t.space, {t.xplus, t.xminus});
        std::vector<LinearMap> maps;
        for (const auto& g : gamma) maps.push_back([g](const SuperPolynomial& p) { return apply(g, p); });
        for (int i = 0; i <= n; ++i) CHECK(commutant_dimension(maps, primitive_forms(n, i)) == 1);
    }
    for (int d = 2; d <= 3; ++d) {
        auto t = harmonic_triple(d);
        auto gamma = commuting_derivations(t.space, {t.xplus, t.xminus});
        std::vector<LinearMap> maps;
        for (const auto& g : gamma) maps.push_back([g](const SuperPolynomial& p) { return apply(g, p); });
        maps.push_back(reflection(t.space, "x1"));
        for (int i = 0; i <= 3; ++i) CHECK(commutant_dimension(maps, spherical_harmonics(d, i)) == 1);
    }
    // so(2) alone splits the harmonics of degree i >= 1 into two lines
    auto t = harmonic_triple(2);
    auto gamma = commuting_derivations(t.space, {t.xplus, t.xminus});
    std::vector<LinearMap> maps;
    for (const auto& g : gamma) maps.push_back([g](const SuperPolynomial& p) { return apply(g, p); });
    CHECK(commutant_dimension(maps, spherical_harmonics(2, 2)) == 2);
}

TEST_CASE("bernstein: osp(1|2) closure") {
    for (int n = 1; n <= 2; ++n)
        for (Scalar h : {Scalar(1), Scalar(2), Scalar::frac(1, 2)}) {
            auto rep = bernstein_osp12(n, h);
            CHECK(rep.closure.superdimension() == "(3|2)");
            CHECK(rep.is_osp12);
        }
    auto flat = bernstein_osp12(1, Scalar(0));
    CHECK(flat.degenerate);
    CHECK(!flat.is_osp12);
    CHECK(commutator(flat.dplus, flat.dplus).is_zero());
}

TEST_CASE("hyper-Kahler: quaternionic forms and closures at n = 1") {
    auto two = hyperkahler_actions(1);
    CHECK(two.quaternion_relations);
    CHECK(two.forms_nondegenerate);
    CHECK(two.triples_ok);
    CHECK(two.primitive_dimensions.at(0) == 1);
    // two Kahler forms alone close on sl(2) + sl(2)
    CHECK(two.even_closure.even_dim() == 6);
    auto three = hyperkahler_actions(1, {1, 1, 1});
    CHECK(three.even_closure.even_dim() == 10);
    CHECK(three.even_closure.odd_dim() == 0);
    CHECK(three.killing_rank == 10);
    CHECK(three.cartan_rank == 2);
}
