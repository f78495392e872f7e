#include "howe/closure.hpp"
#include "howe/dual_pairs.hpp"
#include "howe/sergeev.hpp"
#include "howe/verify.hpp"
#include "verify_internal.hpp"

namespace howe {

namespace {

using detail::make_job;
using detail::num;

long binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

std::vector<LinearMap> commuting_maps(const SL2Triple& t) {
    std::vector<LinearMap> maps;
    for (const auto& g : commuting_derivations(t.space, {t.xplus, t.xminus}))
        maps.push_back([g](const SuperPolynomial& p) { return apply(g, p); });
    return maps;
}

std::string tag(const std::string& prefix, const Rational& x) {
    std::string out = prefix;
    for (char c : x.str()) out += c == '/' ? '_' : c == '-' ? 'm' : c;
    return out;
}

}  // namespace

VerificationJob lefschetz_job(int n) {
    return make_job("c06-lefschetz-n" + std::to_string(n), 6, "howe-dual.primitive_forms", {{"n", std::to_string(n)}},
                    [=](JobResult& r) {
                        auto t = lefschetz_triple(n);
                        r.require("sl(2) relations", t.relations_hold());
                        std::size_t split_failures = 0;
                        for (int i = 0; i <= 2 * n; ++i) {
                            long expected = i <= n ? binom(2 * n, i) - binom(2 * n, i - 2) : 0;
                            r.check("dim P^" + std::to_string(i), std::to_string(expected),
                                    num(primitive_forms(n, i).size()), "C(2n,i) - C(2n,i-2)");
                            auto d = check_decomposition(t, i, [n](int k) { return primitive_forms(n, k); });
                            if (!d.direct_sum) ++split_failures;
                        }
                        r.check("degrees where Lambda^i != sum X+^j P^{i-2j}", "0", num(split_failures));
                        if (n <= 2) {
                            auto maps = commuting_maps(t);
                            for (int i = 0; i <= n; ++i)
                                r.check("commutant on P^" + std::to_string(i), "1",
                                        num(commutant_dimension(maps, primitive_forms(n, i))), "irreducibility");
                        }
                        r.conventions["X-"] = "sum d/deta_i d/dxi_i";
                    });
}

VerificationJob harmonics_job(int d, int imax) {
    return make_job("c06-harmonics-d" + std::to_string(d), 6, "howe-dual.spherical_harmonics",
                    {{"d", std::to_string(d)}, {"imax", std::to_string(imax)}}, [=](JobResult& r) {
                        auto t = harmonic_triple(d);
                        r.require("sl(2) relations", t.relations_hold());
                        std::size_t split_failures = 0;
                        for (int i = 0; i <= imax; ++i) {
                            long expected = binom(d + i - 1, i) - binom(d + i - 3, i - 2);
                            r.check("dim H^" + std::to_string(i), std::to_string(expected),
                                    num(spherical_harmonics(d, i).size()), "dim S^i - dim S^{i-2}");
                            auto dec = check_decomposition(t, i, [d](int k) { return spherical_harmonics(d, k); });
                            if (!dec.direct_sum) ++split_failures;
                        }
                        r.check("degrees where S^i != sum X+^j H^{i-2j}", "0", num(split_failures));
                        if (d <= 3) {
                            auto maps = commuting_maps(t);
                            maps.push_back(reflection(t.space, "x1"));
                            for (int i = 0; i <= std::min(imax, 3); ++i) {
                                auto basis = spherical_harmonics(d, i);
                                if (basis.empty()) continue;
                                r.check("O(d) commutant on H^" + std::to_string(i), "1",
                                        num(commutant_dimension(maps, basis)), "irreducibility");
                            }
                            r.conventions["symmetry"] = "so(d) derivations plus the reflection x1 -> -x1";
                        }
                    });
}

VerificationJob bernstein_job(int n, const Rational& hbar) {
    return make_job(tag("c07-bernstein-n" + std::to_string(n) + "-hbar", hbar), 7, "howe-dual.bernstein_osp12",
                    {{"n", std::to_string(n)}, {"hbar", hbar.str()}}, [=](JobResult& r) {
                        auto rep = bernstein_osp12(n, Scalar(hbar));
                        r.check("closure superdimension", "(3|2)", rep.closure.superdimension(), "osp(1|2)");
                        r.require("osp(1|2) relations", rep.is_osp12);
                        r.details = rep.to_json();
                        r.conventions["D+"] = "d + hbar sum p_i dq_i";
                    });
}

VerificationJob hyperkahler_job(int n) {
    return make_job("c08-hyperkahler-n" + std::to_string(n), 8, "howe-dual.hyperkahler_actions",
                    {{"n", std::to_string(n)}}, [=](JobResult& r) {
                        auto two = hyperkahler_actions(n);
                        r.require("quaternion relations", two.quaternion_relations);
                        r.require("sl(2)-triples", two.triples_ok);
                        r.check("even closure dimension", "10", num(two.even_closure.even_dim()), "sp(4)");
                        r.check("super closure superdimension", "(10|4)", two.super_closure.superdimension(),
                                "osp(1|4)");
                        auto three = hyperkahler_actions(n, {1, 1, 1});
                        r.measure("even closure with omega_K added", num(three.even_closure.even_dim()));
                        r.measure("Killing rank / rank with omega_K", num(three.killing_rank) + " / " +
                                                                          num(three.cartan_rank));
                        r.measure("super closure with omega_K added", three.super_closure.superdimension());
                        r.measure("single connection closure", two.single_connection_closure.superdimension());
                        r.details = two.to_json();
                        r.conventions["forms"] = "omega_I, omega_J of left multiplication by I, J on H^n";
                    });
}

VerificationJob dualpair_job(const std::string& row) {
    return make_job("c09-dualpair-" + row, 9, "howe-dual.dual_pair_table_check", {{"row", row}}, [=](JobResult& r) {
        auto cert = dual_pair_table_check(dual_pair_row(row));
        r.require("embedded in " + cert.ambient, cert.embedded);
        r.require("C(g1) = g2", cert.centralizer_of_g1_is_g2, cert.centralizer_of_g1_dim.str());
        r.require("C(g2) = g1", cert.centralizer_of_g2_is_g1, cert.centralizer_of_g2_dim.str());
        r.require("C(C(g)) = g", cert.double_centralizer);
        if (row == "sp2-pe3") r.check("ambient", "pe(6)", cert.ambient, "table row pe(2nm)");
        else r.measure("ambient", cert.ambient);
        r.details = cert.to_json();
    });
}

VerificationJob sergeev_job(const Rational& lambda) {
    return make_job(tag("c10-sergeev-lambda", lambda), 10, "howe-dual.sergeev_report", {{"lambda", lambda.str()}},
                    [=](JobResult& r) {
                        auto rep = sergeev_report(Scalar(lambda));
                        r.require("spe(4) closed", rep.spe4_closed);
                        r.require("T_lambda representation up to the center", rep.representation, "",
                                  rep.first_failure);
                        r.check("commutant dimension", "1", num(rep.commutant_dimension), "irreducible");
                        r.require("T_lambda(z) = lambda 1", rep.z_acts_as_lambda);
                        if (!lambda.is_zero()) {
                            auto ref = sergeev_report(Scalar(1));
                            r.require("cocycle equals the lambda = 1 cocycle", rep.cocycle == ref.cocycle);
                            r.measure("cocycle rank", num(rep.cocycle_rank));
                        }
                        r.details = rep.to_json();
                        r.conventions["spe(4)"] = "b symmetric, c skew, c~ via even permutations";
                    });
}

VerificationJob rho_job(int r_, int s, int n) {
    return make_job("c11-rho-" + std::to_string(r_) + "-" + std::to_string(s) + "-n" + std::to_string(n), 11,
                    "howe-dual.maximal_rho", {{"r", std::to_string(r_)}, {"s", std::to_string(s)}, {"n", std::to_string(n)}},
                    [=](JobResult& r) {
                        auto rep = maximal_rho(static_cast<std::size_t>(r_), static_cast<std::size_t>(s), n);
                        r.require("super Jacobi on the bracket table", rep.algebra_jacobi);
                        const std::string adopted = RhoVariant{true, false}.name();
                        for (const auto& [name, failures] : rep.failures) {
                            if (name == adopted) r.check("homomorphism failures (" + name + ")", "0", num(failures));
                            else r.measure("homomorphism failures (" + name + ")", num(failures));
                        }
                        r.check("kernel dimension", "0", num(rep.kernel_dimension), "faithful");
                        r.measure("commutant", rep.commutant.str());
                        r.details = rep.to_json();
                        r.conventions["rho"] = adopted;
                    });
}

std::vector<VerificationJob> detail::howe_jobs() {
    std::vector<VerificationJob> jobs;
    for (int n = 1; n <= 4; ++n) jobs.push_back(lefschetz_job(n));
    for (int d = 1; d <= 6; ++d) jobs.push_back(harmonics_job(d, 6));
    for (int n = 1; n <= 2; ++n)
        for (const Rational& h : {Rational(1, 2), Rational(1), Rational(2)}) jobs.push_back(bernstein_job(n, h));
    jobs.push_back(hyperkahler_job(1));
    for (const auto& row : dual_pair_row_ids()) jobs.push_back(dualpair_job(row));
    for (const Rational& l : {Rational(0), Rational(1), Rational(1, 2)}) jobs.push_back(sergeev_job(l));
    jobs.push_back(make_job("c10-sergeev-cocycle-identity", 10, "howe-dual.cocycle_identity_failures",
                            {{"triples", "50"}, {"seed", "20240611"}}, [](JobResult& r) {
                                r.check("failing triples", "0", num(cocycle_identity_failures(50, 20240611)));
                            }));
    jobs.push_back(make_job("c10-sergeev-separation", 10, "howe-dual.sergeev_T", {{"lambda", "0, 1, 1/2"}},
                            [](JobResult& r) {
                                std::vector<SuperMatrix> images;
                                for (const Rational& l : {Rational(0), Rational(1), Rational(1, 2)})
                                    images.push_back(sergeev_T(SuperMatrix(4, 4), Scalar(1), Scalar(l)));
                                bool distinct = images[0] != images[1] && images[0] != images[2] &&
                                                images[1] != images[2];
                                r.require("T_lambda(z) pairwise distinct", distinct);
                            }));
    for (auto [r, s] : {std::pair{1, 0}, {2, 0}, {1, 1}, {2, 1}})
        for (int n = 1; n <= 2; ++n) jobs.push_back(rho_job(r, s, n));
    return jobs;
}

}  // namespace howe
