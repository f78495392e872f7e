#include "doctest.h"
#include "howe/errors.hpp"
#include "howe/stringy.hpp"

using namespace howe;

namespace {

const Rational half(1, 2);

std::vector<DensityModuleSpec> grid9() {
    std::vector<DensityModuleSpec> out;
    for (const Rational& l : {Rational(0), half, Rational(1)})
        for (const Rational& m : {Rational(0), half, Rational(-2, 3)}) out.push_back(DensityModuleSpec::make(l, m));
    return out;
}

}  // namespace

TEST_CASE("vir: spec brackets") {
    auto e = [](long i) { return VirElement::basis(i); };
    CHECK(vir_bracket(e(1), e(-1)) == Scalar(-2) * e(0));
    CHECK(vir_bracket(e(2), e(-2)) == Scalar(-4) * e(0) - Scalar::frac(1, 2) * VirElement::central());
    CHECK(vir_bracket(e(3), e(3)).is_zero());
    CHECK(vir_bracket(VirElement::central(), e(2)).is_zero());
}

TEST_CASE("vir: antisymmetry and Jacobi with the central term") {
    auto e = [](long i) { return VirElement::basis(i); };
    for (long i = -5; i <= 5; ++i)
        for (long j = -5; j <= 5; ++j) {
            CHECK(vir_bracket(e(i), e(j)) == Scalar(-1) * vir_bracket(e(j), e(i)));
            for (long k = -5; k <= 5; ++k) {
                auto jac = vir_bracket(e(i), vir_bracket(e(j), e(k))) + vir_bracket(e(j), vir_bracket(e(k), e(i))) +
                           vir_bracket(e(k), vir_bracket(e(i), e(j)));
                CHECK(jac.is_zero());
            }
        }
}

TEST_CASE("density modules: printed rows and representation property") {
    auto f00 = DensityModuleSpec::make(0, 0);
    CHECK(!density_action(f00, 1, 0));
    for (const auto& f : grid9()) {
        for (long j = -4; j <= 4; ++j) {
            CHECK(density_coefficient(f, 1, j) == f.mu + Rational(j) + Rational(2) * f.lambda);
            CHECK(density_coefficient(f, -1, j + 1) == f.mu + Rational(j) + Rational(1));
        }
        CHECK(density_representation_failures(f, 3, 10) == 0);
    }
    auto df = DensityModuleSpec::make(0, 0, true);
    CHECK(!df.has_index(0));
    CHECK(!density_action(df, 2, -2));
    CHECK(density_representation_failures(df, 3, 10) == 0);
    CHECK_THROWS_AS(DensityModuleSpec::make(half, 0, true), StructuralError);
}

TEST_CASE("invariant forms: closed forms and scan") {
    auto vol = invariant_form(DensityModuleSpec::make(half, 0));
    REQUIRE(vol.form);
    CHECK(vol.form->symmetry == FormSymmetry::Symmetric);
    CHECK(vol.form->pair(0, -1) == Rational(1));
    CHECK(vol.scan.classification == "symmetric");

    auto tf = invariant_form(DensityModuleSpec::make(0, half));
    REQUIRE(tf.form);
    CHECK(tf.form->symmetry == FormSymmetry::Skew);
    for (long i = -5; i <= 5; ++i)
        for (long j = -5; j <= 5; ++j) CHECK(tf.form->pair(i, j) == -tf.form->pair(j, i));
    CHECK(tf.scan.classification == "skew");

    CHECK(invariant_form(DensityModuleSpec::make(half, half)).scan.classification == "symmetric");
    CHECK(invariant_form(DensityModuleSpec::make(0, 0, true)).scan.classification == "skew");
    // without the quotient the constant is a null vector
    CHECK(!invariant_form(DensityModuleSpec::make(0, 0)).form);

    for (const auto& f : {DensityModuleSpec::make(1, 0), DensityModuleSpec::make(1, Rational(1, 3))}) {
        auto r = invariant_form(f);
        CHECK(!r.form);
        CHECK(r.scan.classification == "no invariant form found on the tested window");
    }
    // d : F_{0,1/2} -> F_{1,1/2} is an isomorphism, so the skew form transports
    CHECK(scan_invariant_forms(DensityModuleSpec::make(1, half)).classification == "skew");

    for (const auto& hc : half_constructions()) CHECK(form_invariance_failures(hc.form, 3, 8) == 0);
}

TEST_CASE("doubled module: isotropic halves and invariance") {
    for (const auto& f : grid9())
        for (DoubleSign s : {DoubleSign::Plus, DoubleSign::Minus}) {
            auto w = double_module(f, s);
            CHECK(w.form({false, 2}, {false, 2}) == Rational(0));
            CHECK(w.form({true, 1}, {true, 1}) == Rational(0));
            CHECK(w.form({false, 3}, {true, 3}) == (s == DoubleSign::Plus ? Rational(1) : Rational(-1)));
            CHECK(w.form({true, 3}, {false, 3}) == Rational(1));
            CHECK(double_invariance_failures(w, 2, 6) == 0);
        }
}

TEST_CASE("fock: vacuum, excitations, window errors") {
    auto hc = half_constructions();
    auto r = FockRealization::half(hc[0].form, 10);
    auto vac = r.vacuum();
    for (long n = 1; n <= 4; ++n) CHECK(r.apply(n, vac).is_zero());
    CHECK(r.apply(0, vac).is_zero());
    for (const auto& c : hc) {
        auto fr = FockRealization::half(c.form, 10);
        const auto& f = c.form.module;
        for (long j : {-1L, -2L, -3L}) {
            if (!f.has_index(j)) continue;
            auto s = fr.create({false, j}, fr.vacuum());
            auto e0 = fr.apply(0, s);
            FockState expected = s;
            for (auto& [k, v] : expected.terms) v *= density_coefficient(f, 0, j);
            CHECK(e0 == expected);
        }
    }
    auto edge = r.create({false, -10}, vac);
    CHECK_THROWS_AS(r.apply(-1, edge), WindowError);
    CHECK_NOTHROW(r.with_window(12).apply(-1, edge));
    CHECK_THROWS_AS(FockRealization::half(InvariantForm{DensityModuleSpec::make(half, half), FormSymmetry::Symmetric}, 8),
                    ConventionError);
}

TEST_CASE("central charges of the half constructions (measured)") {
    auto hc = half_constructions();
    auto vol = central_charge(FockRealization::half(hc[0].form, 12));
    CHECK(vol.c == Rational(-1, 2));
    CHECK(vol.h == Rational(0));
    auto tf = central_charge(FockRealization::half(hc[1].form, 12));
    CHECK(tf.c == Rational(-1));
    CHECK(tf.h == Rational(-1, 16));
    auto df = central_charge(FockRealization::half(hc[2].form, 12));
    CHECK(df.c == Rational(-1));
    CHECK(df.h == Rational(0));
    for (const auto* rep : {&vol, &tf, &df}) CHECK(rep->window_stable);
}

TEST_CASE("table n = 0: calibration and predictions") {
    auto cal = calibrate_table_n0();
    CHECK(cal.vacuum_charge == 1);
    CHECK(cal.readout == HReadout::Bracket);
    auto check = [&](Rational l, Rational m, Rational c, Rational h) {
        auto p = table_n0(l, m, cal);
        CHECK(p.c == c);
        CHECK(p.h == h);
    };
    check(half, 0, -1, 1);
    check(1, 0, 2, 2);
    check(0, 0, 2, 0);
    for (auto [l, m] : table_grid()) {
        auto p = table_n0(l, m, cal);
        CHECK(p.matches());
        CHECK(p.osc_flips_c());
        CHECK(p.window_stable);
    }
    // c does not depend on the vacuum charge
    for (long k = -2; k <= 2; ++k) {
        auto w = double_module(DensityModuleSpec::make(Rational(3, 2), Rational(1, 3)), DoubleSign::Plus);
        CHECK(central_charge(FockRealization::doubled(w, k, 12)).c == Rational(11));
    }
    auto csv = table_csv({table_n0(1, 0, cal)});
    CHECK(csv == "lambda,mu,c,h,c_formula,h_formula,c_osc,h_osc,match,window_stable\n1,0,2,2,2,2,-2,-2,true,true\n");
}
