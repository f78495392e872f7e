#include <algorithm>
#include <cctype>

#include "howe/errors.hpp"
#include "howe/stringy.hpp"
#include "howe/verify.hpp"
#include "verify_internal.hpp"

namespace howe {

namespace {

using detail::make_job;

std::string slug(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(c));
        else if (!out.empty() && out.back() != '-') out += '-';
    }
    while (!out.empty() && out.back() == '-') out.pop_back();
    return out;
}

std::string pair_str(const Rational& a, const Rational& b) { return "(" + a.str() + "," + b.str() + ")"; }

void stringy_paper_values(JobResult& r) {
    auto e = [](long i) { return VirElement::basis(i); };
    r.check("[e1, e-1]", (Scalar(-2) * e(0)).str(), vir_bracket(e(1), e(-1)).str(), "(*) with i = 1, j = -1");
    auto f = DensityModuleSpec::make(Rational(1, 3), Rational(1, 5));
    for (long j : {-2L, 0L, 3L}) {
        r.check("e1 phi_" + std::to_string(j) + " coefficient", (f.mu + Rational(j) + Rational(2) * f.lambda).str(),
                density_coefficient(f, 1, j).str(), "sum (mu+i+2 lambda) phi_{i+1} d_i");
        r.check("e-1 phi_" + std::to_string(j + 1) + " coefficient", (f.mu + Rational(j) + Rational(1)).str(),
                density_coefficient(f, -1, j + 1).str(), "sum (mu+i+1) phi_i d_{i+1}");
    }
    for (DoubleSign s : {DoubleSign::Plus, DoubleSign::Minus}) {
        auto w = double_module(f, s);
        r.check(std::string("B((v,0),(0,w*)) sign ") + (s == DoubleSign::Plus ? "+" : "-"),
                s == DoubleSign::Plus ? "1" : "-1", w.form({false, 2}, {true, 2}).str(), "doubled form");
    }
    r.conventions["cocycle"] = "delta_{i+j,0}, minus sign kept";
}

void half_weights(JobResult& r, const HalfConstruction& hc, long window) {
    auto rep = central_charge(FockRealization::half(hc.form, window));
    r.check("(c, h)", pair_str(hc.printed_c, hc.printed_h), pair_str(rep.c, rep.h), "section 4.2 values");
    r.require("window stable (M vs M+4)", rep.window_stable);
    r.details = rep.to_json();
    r.conventions["construction"] = rep.construction;
    r.conventions["statistics"] = rep.statistics;
    r.conventions["polarization"] = rep.polarization;
    r.conventions["h_readout"] = readout_name(rep.readout);
}

}  // namespace

VerificationJob vir_weights_job(const Rational& lambda, const Rational& mu, bool fermi, bool doubled, long window) {
    detail::Params p{{"lambda", lambda.str()},
                     {"mu", mu.str()},
                     {"stat", fermi ? "fermi" : "bose"},
                     {"construction", doubled ? "doubled" : "half"},
                     {"window", std::to_string(window)}};
    return make_job("vir-weights", 12, "stringy.central_charge", p, [=](JobResult& r) {
        if (doubled) {
            auto cal = calibrate_table_n0(window);
            auto pt = table_n0(lambda, mu, cal);
            if (fermi) {
                r.check("(c, h)", pair_str(pt.c_formula, pt.h_formula), pair_str(pt.c, pt.h),
                        "12 lambda^2 - 12 lambda + 2, (mu + 2 lambda)(mu + 1)");
            } else {
                r.check("c", (-pt.c_formula).str(), pt.c_osc.str(), "Osc: c -> -c");
                r.measure("h", pt.h_osc.str(), "not asserted");
            }
            r.require("window stable (M vs M+4)", pt.window_stable);
            r.conventions["vacuum_charge"] = std::to_string(cal.vacuum_charge);
            r.conventions["h_readout"] = readout_name(cal.readout);
            r.conventions["construction"] = fermi ? "Spin(F + F*), symmetric form" : "Osc(F + F*), skew form";
            return;
        }
        // the module carrying an invariant form; F_{0,0} means dF
        auto f = lambda.is_zero() && mu.is_zero() ? DensityModuleSpec::make(0, 0, true) : DensityModuleSpec::make(lambda, mu);
        auto hcs = half_constructions();
        auto it = std::find_if(hcs.begin(), hcs.end(), [&](const HalfConstruction& h) {
            return h.form.module.name() == f.name();
        });
        std::optional<InvariantForm> form;
        if (it != hcs.end()) form = it->form;
        else form = invariant_form(f).form;
        if (!form) throw ConventionError(f.name() + " carries no invariant form");
        const bool form_fermi = form->symmetry == FormSymmetry::Symmetric;
        if (form_fermi != fermi)
            throw ConventionError(std::string("the ") + (form_fermi ? "symmetric" : "skew") + " form on " + f.name() +
                                  " gives " + (form_fermi ? "fermionic" : "bosonic") + " statistics");
        if (it != hcs.end()) {
            half_weights(r, *it, window);
            return;
        }
        auto rep = central_charge(FockRealization::half(*form, window));
        r.measure("(c, h)", pair_str(rep.c, rep.h));
        r.require("window stable (M vs M+4)", rep.window_stable);
        r.details = rep.to_json();
    });
}

VerificationJob table43_job(const std::vector<std::pair<Rational, Rational>>& grid, long window) {
    std::string points;
    for (const auto& [l, m] : grid) points += (points.empty() ? "" : " ") + pair_str(l, m);
    return make_job("c12-table43", 12, "stringy.table_n0", {{"grid", points}, {"window", std::to_string(window)}},
                    [=](JobResult& r) {
                        auto cal = calibrate_table_n0(window);
                        auto anchor = table_n0(1, 0, cal);
                        r.check("anchor (1,0)", "(2,2)", pair_str(anchor.c, anchor.h), "table formulas evaluated");
                        std::vector<TablePoint> pts;
                        for (const auto& [l, m] : grid) {
                            auto p = table_n0(l, m, cal);
                            const std::string at = " at " + pair_str(l, m);
                            r.check("(c, h)" + at, pair_str(p.c_formula, p.h_formula), pair_str(p.c, p.h),
                                    "12 lambda^2 - 12 lambda + 2, (mu + 2 lambda)(mu + 1)");
                            r.require("window stable" + at, p.window_stable);
                            r.check("Osc c" + at, (-p.c).str(), p.c_osc.str(), "c -> -c");
                            r.measure("Osc h" + at, p.h_osc.str(), "not asserted");
                            pts.push_back(p);
                        }
                        r.details = table_json(pts, cal);
                        r.artifacts["table43.csv"] = table_csv(pts);
                        r.conventions["anchor"] = "(lambda,mu) = (1,0) -> (c,h) = (2,2)";
                        r.conventions["vacuum_charge"] = std::to_string(cal.vacuum_charge);
                        r.conventions["h_readout"] = readout_name(cal.readout);
                    });
}

std::vector<VerificationJob> detail::stringy_jobs(const VerifyOptions& opt) {
    std::vector<VerificationJob> jobs;
    jobs.push_back(make_job("c00-stringy-values", 0, "stringy", {}, stringy_paper_values));
    for (const auto& hc : half_constructions()) {
        const long window = opt.window;
        jobs.push_back(make_job("c12-half-" + slug(hc.name), 12, "stringy.central_charge",
                                {{"construction", hc.name}, {"module", hc.form.module.name()},
                                 {"window", std::to_string(window)}},
                                [hc, window](JobResult& r) { half_weights(r, hc, window); }));
    }
    jobs.push_back(table43_job(opt.table_grid.empty() ? table_grid() : opt.table_grid, opt.window));
    return jobs;
}

std::vector<VerificationJob> verification_jobs(const VerifyOptions& opt) {
    auto jobs = detail::algebra_jobs();
    for (const auto& group : {detail::howe_jobs(), detail::stringy_jobs(opt)})
        jobs.insert(jobs.end(), group.begin(), group.end());
    std::stable_sort(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return jobs;
}

}  // namespace howe
