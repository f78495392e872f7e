#include <algorithm>
#include <sstream>

#include "howe/closure.hpp"
#include "howe/errors.hpp"
#include "howe/random.hpp"
#include "howe/verify.hpp"
#include "howe/weyl_clifford.hpp"
#include "verify_internal.hpp"

namespace howe {

namespace {

using detail::make_job;
using detail::num;
using detail::Params;

std::string tuple(const std::vector<Scalar>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out + ")";
}

Scalar koszul(const SuperPolynomial& a, const SuperPolynomial& b) {
    return (*a.parity() & *b.parity()) ? Scalar(-1) : Scalar(1);
}

SuperPolynomial nonzero_homogeneous(RandomSource& rs, const GeneratorSetPtr& g, int deg, int terms) {
    for (;;) {
        auto f = rs.homogeneous(g, deg, terms);
        if (!f.is_zero()) return f;
    }
}

void paper_values(JobResult& r) {
    PoissonAlgebra xe(1, 3, Coordinates::XiEtaTheta), th(1, 3, Coordinates::Theta);
    r.check("degree_standard(1)", "-2", std::to_string(degree_standard(xe.constant(1))), "grading table");
    r.check("degree_standard(p1)", "-1", std::to_string(degree_standard(xe.gen("p1"))), "grading table");
    const auto odd = OddDimParity::Odd;
    r.check("degree_rough(q1^2), m odd", "-2", std::to_string(degree_rough(xe.element("q1^2"), odd)),
            "rough grading table");
    r.check("degree_rough(q1*p1), m odd", "0", std::to_string(degree_rough(xe.element("q1*p1"), odd)),
            "rough grading table");
    r.check("degree_rough(q1*th), m odd", "-1", std::to_string(degree_rough(xe.element("q1*th"), odd)),
            "rough grading table");
    r.check("change_coordinates(th)", th.gen("Th3").str(), change_coordinates(xe, xe.gen("th"), th).str(),
            "theta = Theta_{2r+1}");

    PoissonAlgebra alg(1, 2, Coordinates::XiEtaTheta);
    auto fock = fock_generators(alg);
    auto q1 = NormalOrderedOperator::multiplication(SuperPolynomial::generator(fock, "q1"));
    auto dq1 = NormalOrderedOperator::derivative(fock, "q1");
    r.check("quantize(p1*q1)", (q1 * dq1).str(), quantize(alg, alg.element("p1*q1")).str(), "Q's stand first");

    auto o4 = spinor_basis_o(2, OrthogonalKind::Even);
    r.check("o(4) H1", o4.algebra.element("xi1*eta1-xi2*eta2").str(), o4.cartan[0].str(), "basis display");
    r.check("o(4) H2", o4.algebra.element("xi1*eta1+xi2*eta2").str(), o4.cartan[1].str(), "basis display");
    auto o3 = spinor_basis_o(1, OrthogonalKind::Odd);
    r.check("o(3) X+1", o3.algebra.element("r2*eta1*th").str(), o3.raising[0].str(), "odd-case display");
    r.check("o(3) H1", o3.algebra.element("2*xi1*eta1").str(), o3.cartan[0].str(), "odd-case display");
}

void exact_algebra_properties(JobResult& r) {
    auto g = GeneratorSet::make({"q1", "q2", "p1", "p2"}, {"xi1", "xi2", "eta1", "eta2", "th"});
    RandomSource rs(2024);
    std::size_t comm = 0, assoc = 0, leibniz = 0, field = 0;
    for (int k = 0; k < 200; ++k) {
        auto u = rs.homogeneous(g, 4, 4), v = rs.homogeneous(g, 4, 4);
        if (!(u * v - koszul(u, v) * (v * u)).is_zero()) ++comm;
    }
    for (int k = 0; k < 100; ++k) {
        auto a = rs.polynomial(g, 3, 3), b = rs.polynomial(g, 3, 3), c = rs.polynomial(g, 3, 3);
        if ((a * b) * c != a * (b * c)) ++assoc;
    }
    for (int k = 0; k < 100; ++k) {
        auto f = rs.homogeneous(g, 3, 4), h = rs.homogeneous(g, 3, 4);
        Generator x{true, static_cast<std::size_t>(rs.uniform(0, 4))};
        Scalar s = (*f.parity() & 1) ? Scalar(-1) : Scalar(1);
        if (partial_derivative(f * h, x) != partial_derivative(f, x) * h + s * (f * partial_derivative(h, x))) ++leibniz;
    }
    for (int k = 0; k < 100; ++k) {
        Scalar x = rs.nonzero_scalar(), y = rs.scalar(), z = rs.scalar();
        if ((x * y) * z != x * (y * z) || !(x * x.inverse()).is_one()) ++field;
    }
    r.check("supercommutativity failures (200 pairs)", "0", num(comm));
    r.check("associativity failures (100 triples)", "0", num(assoc));
    r.check("odd Leibniz failures (100 pairs)", "0", num(leibniz));
    r.check("scalar field failures (100 triples)", "0", num(field));
    r.conventions["derivative"] = "left derivative for odd generators";
}

void poisson_properties(JobResult& r, Coordinates coords) {
    PoissonAlgebra alg(2, 3, coords);
    const auto& g = alg.generators();
    RandomSource rs(coords == Coordinates::Theta ? 77 : 78);
    std::size_t anti = 0, jacobi = 0, leibniz = 0;
    for (int k = 0; k < 200; ++k) {
        auto f = nonzero_homogeneous(rs, g, 3, 3), h = nonzero_homogeneous(rs, g, 3, 3);
        if (!(alg.bracket(f, h) + koszul(f, h) * alg.bracket(h, f)).is_zero()) ++anti;
    }
    for (int k = 0; k < 100; ++k) {
        auto f = nonzero_homogeneous(rs, g, 3, 2), u = nonzero_homogeneous(rs, g, 3, 2),
             h = nonzero_homogeneous(rs, g, 3, 2);
        auto j = koszul(f, h) * alg.bracket(f, alg.bracket(u, h)) + koszul(u, f) * alg.bracket(u, alg.bracket(h, f)) +
                 koszul(h, u) * alg.bracket(h, alg.bracket(f, u));
        if (!j.is_zero()) ++jacobi;
        if (alg.bracket(f, u * h) != alg.bracket(f, u) * h + koszul(f, u) * (u * alg.bracket(f, h))) ++leibniz;
    }
    r.check("super-antisymmetry failures (200 pairs)", "0", num(anti));
    r.check("super Jacobi failures (100 triples)", "0", num(jacobi));
    r.check("bracket Leibniz failures (100 triples)", "0", num(leibniz));
    r.conventions["coordinates"] = coords == Coordinates::Theta ? "Theta" : "xi/eta/theta";
}

void osp_dimensions(JobResult& r) {
    std::size_t bad = 0;
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 3; ++n) {
            if (m == 0 && n == 0) continue;
            PoissonAlgebra alg(n, m, Coordinates::XiEtaTheta);
            auto basis = osp_quadratic_basis(alg);
            const std::string label = "osp(" + std::to_string(m) + "|" + std::to_string(2 * n) + ")";
            r.check(label + " dimension", std::to_string(osp_dimension(n, m)), num(basis.size()),
                    "n(2n+1) + m(m-1)/2 + 2nm");
            if (!is_bracket_closed(alg, basis)) {
                ++bad;
                r.require(label + " bracket closure", false);
            }
        }
    r.check("non-closed quadratic spans", "0", num(bad));
}

void image_dimensions(JobResult& r) {
    for (int m : {2, 4, 6}) {
        auto rep = image_dimension(m);
        r.check("m = " + std::to_string(m) + " image dimension", num(std::size_t(1) << m), num(rep.image_dimension),
                "gl(2^{k-1}|2^{k-1})");
    }
    auto odd = image_dimension(3);
    r.check("m = 3 image dimension", "8", num(odd.image_dimension), "q(2^{k-1})");
    r.check("m = 3 image operators not supercommuting with J", "0", num(odd.failures_conjugate_j));
    r.measure("failures with the printed J = i(th + d/dth)", num(odd.failures_printed_j));
    r.conventions["J"] = "i(th - d/dth)";
    r.conventions["theta"] = "Balanced: sqrt(hbar/2)(th + d/dth)";
}

}  // namespace

VerificationJob bracket_job(int n, int m, bool theta_coords, const std::string& f, const std::string& g,
                            const std::string& expect) {
    Params p{{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"coordinates", theta_coords ? "theta" : "xieta"},
             {"f", f}, {"g", g}};
    if (!expect.empty()) p["expect"] = expect;
    return make_job("bracket", 1, "poisson.bracket", p, [=](JobResult& r) {
        PoissonAlgebra alg(n, m, theta_coords ? Coordinates::Theta : Coordinates::XiEtaTheta);
        auto out = alg.bracket(alg.element(f), alg.element(g));
        if (expect.empty()) r.measure("{f, g}", out.str());
        else r.check("{f, g}", alg.element(expect).str(), out.str());
    });
}

VerificationJob quantize_job(int n, int m, const std::string& f, const Rational& hbar, bool printed_theta,
                             const std::string& expect) {
    Params p{{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"f", f}, {"hbar", hbar.str()},
             {"theta_rule", printed_theta ? "printed" : "balanced"}};
    if (!expect.empty()) p["expect"] = expect;
    return make_job("quantize", 3, "weyl-clifford.quantize", p, [=](JobResult& r) {
        PoissonAlgebra alg(n, m, Coordinates::XiEtaTheta);
        auto op = quantize(alg, alg.element(f), Scalar(hbar), printed_theta ? ThetaRule::Printed : ThetaRule::Balanced);
        if (expect.empty()) r.measure("Q(f)", op.str());
        else r.check("Q(f)", expect, op.str());
        r.conventions["theta"] = printed_theta ? "hbar(th + d/dth)" : "sqrt(hbar/2)(th + d/dth)";
    });
}

VerificationJob spinor_job(int k, bool odd) {
    return make_job("c04-spinor-o" + std::to_string(odd ? 2 * k + 1 : 2 * k), 4, "weyl-clifford.highest_weight_of_vacuum",
                    {{"algebra", "o"}, {"k", std::to_string(k)}, {"odd", odd ? "true" : "false"}}, [=](JobResult& r) {
                        auto b = spinor_basis_o(k, odd ? OrthogonalKind::Odd : OrthogonalKind::Even);
                        auto chev = check_chevalley_relations(b);
                        r.require("Chevalley relations", chev.ok, "", chev.failure);
                        r.measure("cartan sign {X+_i, X-_i} = s H_i", std::to_string(chev.cartan_sign));
                        auto hw = highest_weight_of_vacuum(b);
                        std::vector<Scalar> expected(static_cast<std::size_t>(k), Scalar(0));
                        expected.back() = Scalar(1);
                        r.check("vacuum weight", tuple(expected), tuple(hw.eigenvalues), "H_i 1 = 0 (i < k), H_k 1 = 1");
                        r.measure("quantized printed H_i on the vacuum", tuple(hw.quantized_cartan_eigenvalues));
                        r.details = hw.to_json();
                        r.conventions["cartan"] = "[Q X+_i, Q X-_i]";
                        r.conventions["theta"] = "Balanced: sqrt(hbar/2)(th + d/dth)";
                    });
}

VerificationJob principal_job(int N) {
    return make_job("c05-principal-N" + std::to_string(N), 5, "weyl-clifford.principal_sl2_weight",
                    {{"N", std::to_string(N)}}, [=](JobResult& r) {
                        auto rep = principal_sl2_weight(N);
                        r.check("vacuum weight of H = [X+, X-]", rep.printed_value.str(), rep.highest_weight.str(),
                                N % 2 ? "HW = N(N+1)" : "HW = -N^2/2");
                        r.measure("ambient", rep.ambient);
                        r.details = rep.to_json();
                        r.conventions["representation"] = N % 2 ? "oscillator" : "spinor (Balanced theta)";
                    });
}

std::vector<VerificationJob> detail::algebra_jobs() {
    std::vector<VerificationJob> jobs;
    jobs.push_back(make_job("c00-paper-values", 0, "exact-algebra, poisson, weyl-clifford", {}, paper_values));
    jobs.push_back(make_job("c01-exact-algebra-properties", 1, "exact-algebra", {}, exact_algebra_properties));
    jobs.push_back(make_job("c01-poisson-theta", 1, "poisson.bracket", {{"n", "2"}, {"m", "3"}},
                            [](JobResult& r) { poisson_properties(r, Coordinates::Theta); }));
    jobs.push_back(make_job("c01-poisson-xieta", 1, "poisson.bracket", {{"n", "2"}, {"m", "3"}},
                            [](JobResult& r) { poisson_properties(r, Coordinates::XiEtaTheta); }));
    jobs.push_back(make_job("c02-osp-dimensions", 2, "poisson.osp_quadratic_basis", {{"m", "0..6"}, {"n", "0..3"}},
                            osp_dimensions));
    jobs.push_back(make_job("c03-image-dimensions", 3, "weyl-clifford.image_dimension", {}, image_dimensions));
    for (int k = 1; k <= 4; ++k) {
        if (k >= 2) jobs.push_back(spinor_job(k, false));
        jobs.push_back(spinor_job(k, true));
    }
    for (int N = 1; N <= 6; ++N) jobs.push_back(principal_job(N));
    return jobs;
}

}  // namespace howe
