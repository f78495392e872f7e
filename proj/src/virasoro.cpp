#include <sstream>

#include "howe/errors.hpp"
#include "howe/linalg.hpp"
#include "howe/stringy.hpp"

namespace howe {

namespace {

long to_long(const Rational& r) {
    if (!r.is_integer()) throw StructuralError("expected an integer, got " + r.str());
    return r.to_mpq().get_num().get_si();
}

void add_to(std::map<long, Scalar>& m, long k, const Scalar& c) {
    Scalar& slot = m[k];
    slot += c;
    if (slot.is_zero()) m.erase(k);
}

}  // namespace

VirElement VirElement::basis(long i) {
    VirElement x;
    x.e[i] = Scalar(1);
    return x;
}

VirElement VirElement::central() {
    VirElement x;
    x.z = Scalar(1);
    return x;
}

VirElement& VirElement::operator+=(const VirElement& o) {
    for (const auto& [i, c] : o.e) add_to(e, i, c);
    z += o.z;
    return *this;
}

VirElement& VirElement::operator-=(const VirElement& o) {
    for (const auto& [i, c] : o.e) add_to(e, i, -c);
    z -= o.z;
    return *this;
}

VirElement& VirElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        e.clear();
        z = Scalar(0);
        return *this;
    }
    for (auto& [i, x] : e) x *= c;
    z *= c;
    return *this;
}

std::string VirElement::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : e) {
        out << (first ? "" : " + ") << "(" << c.str() << ")*e" << i;
        first = false;
    }
    if (!z.is_zero()) out << (first ? "" : " + ") << "(" << z.str() << ")*z";
    return first && z.is_zero() ? "0" : out.str();
}

VirElement vir_bracket(const VirElement& x, const VirElement& y) {
    VirElement out;
    for (const auto& [i, a] : x.e)
        for (const auto& [j, b] : y.e) {
            Scalar ab = a * b;
            if (j != i) add_to(out.e, i + j, ab * Scalar(j - i));
            if (i + j == 0) out.z -= ab * Scalar(Rational(i * i * i - i, 12));
        }
    return out;
}

DensityModuleSpec DensityModuleSpec::make(Rational lambda, Rational mu, bool quotient) {
    if (quotient && (!lambda.is_zero() || !mu.is_integer()))
        throw StructuralError("the quotient by constants needs lambda = 0 and integer mu");
    return {std::move(lambda), std::move(mu), quotient};
}

bool DensityModuleSpec::has_index(long j) const { return !quotient || !(mu + Rational(j)).is_zero(); }

std::string DensityModuleSpec::name() const {
    if (quotient) return "dF_{0," + mu.str() + "}";
    return "F_{" + lambda.str() + "," + mu.str() + "}";
}

Rational density_coefficient(const DensityModuleSpec& f, long n, long j) {
    return f.mu + Rational(j) + f.lambda * Rational(n + 1);
}

std::optional<std::pair<long, Rational>> density_action(const DensityModuleSpec& f, long n, long j) {
    if (!f.has_index(j)) throw StructuralError("index " + std::to_string(j) + " is divided out in " + f.name());
    if (!f.has_index(j + n)) return std::nullopt;
    Rational c = density_coefficient(f, n, j);
    if (c.is_zero()) return std::nullopt;
    return std::pair{j + n, c};
}

std::size_t density_representation_failures(const DensityModuleSpec& f, int max_n, long window) {
    using Vec = std::map<long, Rational>;
    auto act = [&f](long n, const Vec& v) {
        Vec out;
        for (const auto& [j, c] : v)
            if (auto r = density_action(f, n, j)) {
                Rational& slot = out[r->first];
                slot += c * r->second;
                if (slot.is_zero()) out.erase(r->first);
            }
        return out;
    };
    std::size_t failures = 0;
    for (long m = -max_n; m <= max_n; ++m)
        for (long n = -max_n; n <= max_n; ++n)
            for (long j = -window; j <= window; ++j) {
                if (!f.has_index(j)) continue;
                Vec v{{j, Rational(1)}};
                Vec lhs = act(m, act(n, v));
                for (const auto& [k, c] : act(n, act(m, v))) {
                    Rational& slot = lhs[k];
                    slot -= c;
                    if (slot.is_zero()) lhs.erase(k);
                }
                Vec rhs = act(m + n, v);
                for (auto& [k, c] : rhs) c *= Rational(n - m);
                if (n == m) rhs.clear();
                if (lhs != rhs) ++failures;
            }
    return failures;
}

Rational InvariantForm::pair(long i, long j) const {
    const Rational s = Rational(2) * module.mu + Rational(i + j);
    if (symmetry == FormSymmetry::Symmetric) return s == Rational(-1) ? Rational(1) : Rational(0);
    return s.is_zero() ? module.mu + Rational(j) : Rational(0);
}

long InvariantForm::index_sum() const { return to_long(Rational(-2) * (module.mu + module.lambda)); }

FormScan scan_invariant_forms(const DensityModuleSpec& f, long window) {
    FormScan scan;
    scan.window = window;
    const long side = 2 * window + 1;
    auto var = [&](long i, long j) { return static_cast<std::size_t>((i + window) * side + (j + window)); };
    auto inside = [&](long i) { return i >= -window && i <= window; };
    const std::size_t nvars = static_cast<std::size_t>(side * side);

    SpanBasis<std::size_t> invariance;
    for (long i = -window; i <= window; ++i)
        for (long j = -window; j <= window; ++j) {
            if (!f.has_index(i) || !f.has_index(j)) {
                invariance.insert({{var(i, j), Scalar(1)}});
                continue;
            }
            for (long n = -3; n <= 3; ++n) {
                // <e_n phi_i, phi_j> + <phi_i, e_n phi_j> = 0
                auto a = density_action(f, n, i), b = density_action(f, n, j);
                if ((a && !inside(a->first)) || (b && !inside(b->first))) continue;
                std::map<std::size_t, Scalar> row;
                if (a) row[var(a->first, j)] += Scalar(a->second);
                if (b) row[var(i, b->first)] += Scalar(b->second);
                prune(row);
                if (!row.empty()) invariance.insert(row);
            }
        }

    auto solve = [&](int sign, std::size_t& dim, bool& nondegenerate) {
        SpanBasis<std::size_t> rows = invariance;
        for (long i = -window; i <= window; ++i)
            for (long j = i; j <= window; ++j) {
                std::map<std::size_t, Scalar> row;
                row[var(i, j)] += Scalar(1);
                row[var(j, i)] += Scalar(-sign);
                prune(row);
                if (!row.empty()) rows.insert(row);
            }
        auto sols = nullspace(rows, nvars);
        dim = sols.size();
        nondegenerate = !sols.empty();
        for (long i = -window + 3; i <= window - 3 && nondegenerate; ++i) {
            if (!f.has_index(i)) continue;
            bool paired = false;
            for (const auto& s : sols)
                for (long j = -window; j <= window && !paired; ++j) paired = !s[var(i, j)].is_zero();
            nondegenerate = paired;
        }
    };
    solve(1, scan.symmetric_dimension, scan.symmetric_nondegenerate);
    solve(-1, scan.skew_dimension, scan.skew_nondegenerate);
    if (scan.symmetric_nondegenerate && scan.skew_nondegenerate) scan.classification = "symmetric and skew";
    else if (scan.symmetric_nondegenerate) scan.classification = "symmetric";
    else if (scan.skew_nondegenerate) scan.classification = "skew";
    else scan.classification = "no invariant form found on the tested window";
    return scan;
}

InvariantFormResult invariant_form(const DensityModuleSpec& f, long scan_window) {
    InvariantFormResult res;
    res.scan = scan_invariant_forms(f, scan_window);
    const Rational half(1, 2);
    if (f.lambda == half && (f.mu.is_zero() || f.mu == half) && !f.quotient)
        res.form = InvariantForm{f, FormSymmetry::Symmetric};
    else if (f.lambda.is_zero() && ((f.mu == half && !f.quotient) || (f.mu.is_zero() && f.quotient)))
        res.form = InvariantForm{f, FormSymmetry::Skew};
    return res;
}

std::size_t form_invariance_failures(const InvariantForm& b, int max_n, long window) {
    const auto& f = b.module;
    std::size_t failures = 0;
    for (long n = -max_n; n <= max_n; ++n)
        for (long i = -window; i <= window; ++i)
            for (long j = -window; j <= window; ++j) {
                if (!f.has_index(i) || !f.has_index(j)) continue;
                Rational total;
                if (auto a = density_action(f, n, i)) total += a->second * b.pair(a->first, j);
                if (auto c = density_action(f, n, j)) total += c->second * b.pair(i, c->first);
                if (!total.is_zero()) ++failures;
            }
    return failures;
}

std::string Mode::str() const { return (dual ? "phi*" : "phi") + std::to_string(index); }

Rational DoubledModule::form(Mode a, Mode b) const {
    if (a.dual == b.dual || a.index != b.index) return Rational(0);
    // B((v1, v2), (w1, w2)) = v2(w1) +- w2(v1)
    if (a.dual) return Rational(1);
    return sign == DoubleSign::Plus ? Rational(1) : Rational(-1);
}

std::optional<std::pair<Mode, Rational>> DoubledModule::act(long n, Mode m) const {
    if (!base.has_index(m.index)) throw StructuralError("mode " + m.str() + " is divided out");
    if (!m.dual) {
        auto r = density_action(base, n, m.index);
        if (!r) return std::nullopt;
        return std::pair{Mode{false, r->first}, r->second};
    }
    // (e_n phi*_j)(phi_k) = -phi*_j(e_n phi_k), k = j - n
    const long k = m.index - n;
    if (!base.has_index(k)) return std::nullopt;
    Rational c = -density_coefficient(base, n, k);
    if (c.is_zero()) return std::nullopt;
    return std::pair{Mode{true, k}, c};
}

DoubledModule double_module(const DensityModuleSpec& f, DoubleSign sign) { return {f, sign}; }

std::size_t double_invariance_failures(const DoubledModule& w, int max_n, long window) {
    std::vector<Mode> modes;
    for (long j = -window; j <= window; ++j)
        if (w.base.has_index(j)) {
            modes.push_back({false, j});
            modes.push_back({true, j});
        }
    std::size_t failures = 0;
    for (long n = -max_n; n <= max_n; ++n)
        for (Mode u : modes)
            for (Mode v : modes) {
                Rational total;
                if (auto a = w.act(n, u)) total += a->second * w.form(a->first, v);
                if (auto b = w.act(n, v)) total += b->second * w.form(u, b->first);
                if (!total.is_zero()) ++failures;
            }
    return failures;
}

}  // namespace howe
