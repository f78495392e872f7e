#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "howe/errors.hpp"
#include "howe/stringy.hpp"
#include "json.hpp"

namespace howe {

void FockState::add(const std::vector<Mode>& key, const Rational& c) {
    if (c.is_zero()) return;
    Rational& slot = terms[key];
    slot += c;
    if (slot.is_zero()) terms.erase(key);
}

FockState& FockState::operator-=(const FockState& o) {
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
}

std::optional<Rational> FockState::vacuum_multiple() const {
    if (terms.empty()) return Rational(0);
    if (terms.size() == 1 && terms.begin()->first.empty()) return terms.begin()->second;
    return std::nullopt;
}

std::string FockState::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        out << (first ? "" : " + ") << "(" << c.str() << ")";
        for (const auto& m : k) out << "*" << m.str();
        out << "|0>";
        first = false;
    }
    return out.str();
}

FockRealization FockRealization::half(const InvariantForm& form, long window) {
    FockRealization r;
    r.half_ = form;
    r.window_ = window;
    r.statistics_ = form.symmetry == FormSymmetry::Symmetric ? Statistics::Fermionic : Statistics::Bosonic;
    r.validate();
    return r;
}

FockRealization FockRealization::doubled(const DoubledModule& w, long vacuum_charge, long window) {
    FockRealization r;
    r.doubled_ = true;
    r.double_ = w;
    r.half_.module = w.base;
    r.vacuum_charge_ = vacuum_charge;
    r.window_ = window;
    r.statistics_ = w.sign == DoubleSign::Plus ? Statistics::Fermionic : Statistics::Bosonic;
    r.validate();
    return r;
}

FockRealization FockRealization::with_window(long window) const {
    FockRealization r = *this;
    r.window_ = window;
    return r;
}

std::string FockRealization::construction() const {
    if (doubled_)
        return std::string(double_.sign == DoubleSign::Plus ? "Spin" : "Osc") + "(" + double_.base.name() + ")";
    return std::string(statistics_ == Statistics::Fermionic ? "exterior" : "symmetric") + " algebra on half of " +
           half_.module.name();
}

std::string FockRealization::polarization() const {
    if (doubled_)
        return "creation: phi_j for j < " + std::to_string(vacuum_charge_) + ", phi*_j for j >= " +
               std::to_string(vacuum_charge_);
    return "creation: phi_i for i < 0";
}

bool FockRealization::in_module(Mode m) const {
    if (!doubled_ && m.dual) return false;
    return half_.module.has_index(m.index);
}

bool FockRealization::is_creation(Mode m) const {
    if (!doubled_) return m.index < 0;
    return m.dual ? m.index >= vacuum_charge_ : m.index < vacuum_charge_;
}

Rational FockRealization::form(Mode a, Mode b) const {
    if (doubled_) return double_.form(a, b);
    return half_.pair(a.index, b.index);
}

std::optional<std::pair<Mode, Rational>> FockRealization::act(long n, Mode m) const {
    if (doubled_) return double_.act(n, m);
    auto r = density_action(half_.module, n, m.index);
    if (!r) return std::nullopt;
    return std::pair{Mode{false, r->first}, r->second};
}

std::pair<Mode, Rational> FockRealization::dual_of(Mode m) const {
    Mode x = doubled_ ? Mode{!m.dual, m.index} : Mode{false, half_.index_sum() - m.index};
    Rational b = form(x, m);
    if (b.is_zero()) throw StructuralError("form is degenerate at " + m.str());
    return {x, b.inverse()};
}

void FockRealization::validate() const {
    if (window_ < 1) throw StructuralError("window must be positive");
    if (!doubled_) (void)half_.index_sum();
    for (long j = -window_ - 4; j < window_ + 4; ++j)
        for (bool d : {false, true}) {
            Mode m{d, j};
            if (!in_module(m)) continue;
            Mode p = dual_of(m).first;
            if (!in_module(p)) throw StructuralError("partner of " + m.str() + " is divided out");
            if (is_creation(m) == is_creation(p))
                throw ConventionError("polarization is not Lagrangian at " + m.str() + " / " + p.str());
        }
}

void FockRealization::gamma(Mode m, const std::vector<Mode>& key, const Rational& c, FockState& out) const {
    const bool fermi = statistics_ == Statistics::Fermionic;
    if (is_creation(m)) {
        auto pos = std::lower_bound(key.begin(), key.end(), m);
        if (fermi && pos != key.end() && *pos == m) return;
        std::vector<Mode> next(key.begin(), pos);
        next.push_back(m);
        next.insert(next.end(), pos, key.end());
        const auto before = pos - key.begin();
        out.add(next, fermi && before % 2 ? -c : c);
        return;
    }
    const Mode p = dual_of(m).first;
    const Rational b = form(m, p);
    auto [lo, hi] = std::equal_range(key.begin(), key.end(), p);
    if (lo == hi) return;
    std::vector<Mode> next(key.begin(), lo);
    next.insert(next.end(), lo + 1, key.end());
    if (fermi) {
        const auto before = lo - key.begin();
        out.add(next, (before % 2 ? -c : c) * b);
    } else {
        out.add(next, c * b * Rational(static_cast<std::int64_t>(hi - lo)));
    }
}

FockState FockRealization::vacuum() const {
    FockState s;
    s.add({}, Rational(1));
    return s;
}

FockState FockRealization::create(Mode m, const FockState& s) const {
    if (!in_module(m) || !is_creation(m)) throw StructuralError(m.str() + " is not a creation mode");
    FockState out;
    for (const auto& [k, c] : s.terms) gamma(m, k, c, out);
    return out;
}

FockState FockRealization::apply(long n, const FockState& s) const {
    const Rational sgn = statistics_ == Statistics::Fermionic ? Rational(-1) : Rational(1);
    const long reach = window_ + std::labs(n) + 2;
    auto inside = [this](Mode m) { return m.index >= -window_ && m.index < window_; };
    FockState out;
    for (long j = -reach; j < reach; ++j)
        for (bool d : {false, true}) {
            const Mode a{d, j};
            if (!in_module(a)) continue;
            auto img = act(n, a);
            if (!img) continue;
            auto [y, scale] = dual_of(a);
            const Mode x = img->first;
            const Rational coef = img->second * scale * Rational(1, 2);
            // :gamma_x gamma_y:, annihilators to the right
            const bool swap = !is_creation(x) && is_creation(y);
            for (const auto& [key, c] : s.terms) {
                FockState mid, res;
                gamma(swap ? x : y, key, c, mid);
                for (const auto& [k2, c2] : mid.terms) gamma(swap ? y : x, k2, swap ? c2 * sgn : c2, res);
                if (res.is_zero()) continue;
                if (!inside(x) || !inside(y))
                    throw WindowError("rho(e_" + std::to_string(n) + ") needs modes " + x.str() + ", " + y.str() +
                                          " outside window " + std::to_string(window_),
                                      static_cast<int>(std::max(std::labs(x.index), std::labs(y.index)) + 1));
                for (const auto& [k3, c3] : res.terms) out.add(k3, c3 * coef);
            }
        }
    return out;
}

std::string readout_name(HReadout r) { return r == HReadout::E0 ? "e0-eigenvalue" : "vacuum-bracket"; }

namespace {

std::pair<Rational, Rational> vacuum_brackets(const FockRealization& r) {
    const FockState vac = r.vacuum();
    for (long n : {1L, 2L})
        if (!r.apply(n, vac).is_zero())
            throw ConventionError("e_" + std::to_string(n) + " does not kill the vacuum of " + r.construction());
    auto bracket = [&](long n) {
        FockState a = r.apply(n, r.apply(-n, vac));
        a -= r.apply(-n, r.apply(n, vac));
        auto m = a.vacuum_multiple();
        if (!m)
            throw ConventionError("[e_" + std::to_string(n) + ", e_-" + std::to_string(n) +
                                  "] leaves the vacuum line: " + a.str());
        return *m;
    };
    return {bracket(1), bracket(2)};
}

}  // namespace

CentralChargeReport central_charge(const FockRealization& r, HReadout readout) {
    CentralChargeReport rep;
    auto [s1, s2] = vacuum_brackets(r);
    rep.bracket_1 = s1;
    rep.bracket_2 = s2;
    const Rational h0 = s1 * Rational(-1, 2);
    rep.c = Rational(-2) * (s2 + Rational(4) * h0);
    rep.h = readout == HReadout::E0 ? h0 : s1;
    rep.readout = readout;
    rep.construction = r.construction();
    rep.statistics = r.statistics() == Statistics::Fermionic ? "fermionic" : "bosonic";
    rep.polarization = r.polarization();
    rep.vacuum_charge = r.vacuum_charge();
    rep.window = r.window();
    rep.window_stable = vacuum_brackets(r.with_window(r.window() + 4)) == std::pair{s1, s2};
    return rep;
}

std::string CentralChargeReport::to_json() const {
    nlohmann::ordered_json j;
    j["construction"] = construction;
    j["c"] = c.str();
    j["h"] = h.str();
    j["convention"] = {{"statistics", statistics},
                       {"polarization", polarization},
                       {"vacuum_charge", vacuum_charge},
                       {"h_readout", readout_name(readout)},
                       {"normal_ordering", "annihilators right, vacuum value subtracted"}};
    j["vacuum_bracket_e1_em1"] = bracket_1.str();
    j["vacuum_bracket_e2_em2"] = bracket_2.str();
    j["window"] = window;
    j["window_stable"] = window_stable;
    return j.dump(2);
}

std::vector<HalfConstruction> half_constructions() {
    const Rational half(1, 2);
    return {
        {"osc(sqrt Vol)", InvariantForm{DensityModuleSpec::make(half, 0), FormSymmetry::Symmetric}, Rational(-1, 3), 0},
        {"spin(sqrt t F)", InvariantForm{DensityModuleSpec::make(0, half), FormSymmetry::Skew}, Rational(1, 6), half},
        {"spin(dF)", InvariantForm{DensityModuleSpec::make(0, 0, true), FormSymmetry::Skew}, Rational(-1, 6), 0},
    };
}

TableCalibration calibrate_table_n0(long window) {
    TableCalibration cal;
    cal.window = window;
    auto anchor = double_module(DensityModuleSpec::make(1, 0), DoubleSign::Plus);
    for (HReadout readout : {HReadout::E0, HReadout::Bracket})
        for (long k : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) {
            auto rep = central_charge(FockRealization::doubled(anchor, k, window), readout);
            cal.attempts.push_back(readout_name(readout) + " k=" + std::to_string(k) + ": (c,h) = (" + rep.c.str() +
                                   "," + rep.h.str() + ")");
            if (rep.c == Rational(2) && rep.h == Rational(2)) {
                cal.vacuum_charge = k;
                cal.readout = readout;
                return cal;
            }
        }
    std::string all;
    for (const auto& a : cal.attempts) all += "\n  " + a;
    throw ConventionError("no convention reproduces (c,h) = (2,2) at (lambda,mu) = (1,0):" + all);
}

TablePoint table_n0(const Rational& lambda, const Rational& mu, const TableCalibration& cal) {
    TablePoint p;
    p.lambda = lambda;
    p.mu = mu;
    auto f = DensityModuleSpec::make(lambda, mu);
    auto spin = central_charge(FockRealization::doubled(double_module(f, DoubleSign::Plus), cal.vacuum_charge, cal.window),
                               cal.readout);
    auto osc = central_charge(FockRealization::doubled(double_module(f, DoubleSign::Minus), cal.vacuum_charge, cal.window),
                              cal.readout);
    p.c = spin.c;
    p.h = spin.h;
    p.c_osc = osc.c;
    p.h_osc = osc.h;
    p.c_formula = Rational(12) * lambda * lambda - Rational(12) * lambda + Rational(2);
    p.h_formula = (mu + Rational(2) * lambda) * (mu + Rational(1));
    p.window_stable = spin.window_stable && osc.window_stable;
    return p;
}

std::vector<std::pair<Rational, Rational>> table_grid() {
    std::vector<std::pair<Rational, Rational>> g;
    for (const Rational& l : {Rational(0), Rational(1, 2), Rational(3, 2), Rational(-1)})
        for (const Rational& m : {Rational(0), Rational(1, 3), Rational(1)}) g.emplace_back(l, m);
    return g;
}

std::string table_csv(const std::vector<TablePoint>& points) {
    std::ostringstream out;
    out << "lambda,mu,c,h,c_formula,h_formula,c_osc,h_osc,match,window_stable\n";
    for (const auto& p : points)
        out << p.lambda.str() << "," << p.mu.str() << "," << p.c.str() << "," << p.h.str() << "," << p.c_formula.str()
            << "," << p.h_formula.str() << "," << p.c_osc.str() << "," << p.h_osc.str() << ","
            << (p.matches() ? "true" : "false") << "," << (p.window_stable ? "true" : "false") << "\n";
    return out.str();
}

std::string table_json(const std::vector<TablePoint>& points, const TableCalibration& cal) {
    nlohmann::ordered_json j;
    j["calibration"] = {{"anchor", "(lambda,mu) = (1,0) -> (c,h) = (2,2)"},
                        {"vacuum_charge", cal.vacuum_charge},
                        {"h_readout", readout_name(cal.readout)},
                        {"window", cal.window},
                        {"attempts", cal.attempts}};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : points)
        arr.push_back({{"lambda", p.lambda.str()},
                       {"mu", p.mu.str()},
                       {"c", p.c.str()},
                       {"h", p.h.str()},
                       {"c_formula", p.c_formula.str()},
                       {"h_formula", p.h_formula.str()},
                       {"c_osc", p.c_osc.str()},
                       {"h_osc", p.h_osc.str()},
                       {"match", p.matches()},
                       {"window_stable", p.window_stable}});
    j["points"] = arr;
    return j.dump(2);
}

}  // namespace howe
