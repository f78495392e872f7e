#include "howe/operator.hpp"

#include <bit>

namespace howe {

namespace {

Monomial unit_monomial(const GeneratorSet& g) {
    Monomial m;
    m.even.assign(g.even_count(), 0);
    return m;
}

// d_x o (sum c N d_E) = sum c [(d_x N) d_E + (-1)^{p(x)p(N)} N d_x d_E]
NormalOrderedOperator::Terms left_derivative(Generator x, const NormalOrderedOperator::Terms& in) {
    NormalOrderedOperator::Terms out;
    auto add = [&out](Monomial m, DerivMonomial d, const Scalar& c) {
        auto [it, fresh] = out.try_emplace({std::move(m), std::move(d)}, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    };
    for (const auto& [key, c] : in) {
        const auto& [n, e] = key;
        if (x.odd) {
            std::uint64_t bit = std::uint64_t{1} << x.index;
            if (n.odd & bit) {
                Monomial dn = n;
                dn.odd &= ~bit;
                bool neg = std::popcount(n.odd & (bit - 1)) & 1;
                add(dn, e, neg ? -c : c);
            }
            int s = odd_merge_sign(bit, e.odd);
            if (s != 0) {
                if (n.parity()) s = -s;
                DerivMonomial de = e;
                de.odd |= bit;
                add(n, de, s > 0 ? c : -c);
            }
        } else {
            int k = n.even[x.index];
            if (k != 0) {
                Monomial dn = n;
                dn.even[x.index] -= 1;
                add(dn, e, c * Scalar(k));
            }
            DerivMonomial de = e;
            de.even[x.index] += 1;
            add(n, de, c);
        }
    }
    return out;
}

}  // namespace

NormalOrderedOperator::NormalOrderedOperator(GeneratorSetPtr fock) : gens_(std::move(fock)) {
    if (!gens_) throw StructuralError("null generator set");
}

NormalOrderedOperator NormalOrderedOperator::identity(GeneratorSetPtr fock) {
    Monomial u = unit_monomial(*fock);
    return term(std::move(fock), u, u);
}

NormalOrderedOperator NormalOrderedOperator::multiplication(const SuperPolynomial& f) {
    NormalOrderedOperator op(f.generators());
    Monomial u = unit_monomial(*f.generators());
    for (const auto& [m, c] : f.terms()) op.add_term(m, u, c);
    return op;
}

NormalOrderedOperator NormalOrderedOperator::derivative(GeneratorSetPtr fock, std::string_view name) {
    Generator g = fock->at(name);
    Monomial u = unit_monomial(*fock);
    DerivMonomial d = u;
    if (g.odd)
        d.odd = std::uint64_t{1} << g.index;
    else
        d.even[g.index] = 1;
    return term(std::move(fock), u, d);
}

NormalOrderedOperator NormalOrderedOperator::term(GeneratorSetPtr fock, Monomial mult, DerivMonomial deriv,
                                                  const Scalar& c) {
    if (mult.even.size() != fock->even_count() || deriv.even.size() != fock->even_count())
        throw StructuralError("operator term does not match generator set");
    for (int e : deriv.even)
        if (e < 0) throw StructuralError("negative derivative order");
    NormalOrderedOperator op(std::move(fock));
    op.add_term(mult, deriv, c);
    return op;
}

void NormalOrderedOperator::add_term(const Monomial& mult, const DerivMonomial& deriv, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace({mult, deriv}, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> NormalOrderedOperator::parity() const {
    std::optional<int> p;
    for (const auto& [k, c] : terms_) {
        int q = (k.first.parity() + k.second.parity()) & 1;
        if (p && *p != q) return std::nullopt;
        p = q;
    }
    return p;
}

NormalOrderedOperator NormalOrderedOperator::parity_part(int parity) const {
    NormalOrderedOperator out(gens_);
    for (const auto& [k, c] : terms_)
        if (((k.first.parity() + k.second.parity()) & 1) == (parity & 1)) out.terms_.emplace(k, c);
    return out;
}

std::optional<Scalar> NormalOrderedOperator::as_scalar() const {
    if (terms_.empty()) return Scalar();
    if (terms_.size() != 1) return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    if (k.first.total_degree() != 0 || k.second.total_degree() != 0) return std::nullopt;
    for (int e : k.first.even)
        if (e) return std::nullopt;
    return c;
}

NormalOrderedOperator& NormalOrderedOperator::operator+=(const NormalOrderedOperator& o) {
    require_same_generators(gens_, o.gens_);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

NormalOrderedOperator& NormalOrderedOperator::operator-=(const NormalOrderedOperator& o) {
    require_same_generators(gens_, o.gens_);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

NormalOrderedOperator& NormalOrderedOperator::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

NormalOrderedOperator NormalOrderedOperator::operator-() const {
    NormalOrderedOperator out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

bool operator==(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
    require_same_generators(a.gens_, b.gens_);
    return a.terms_ == b.terms_;
}

std::string NormalOrderedOperator::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string d;
        for (std::size_t i = 0; i < k.second.even.size(); ++i) {
            int e = k.second.even[i];
            if (!e) continue;
            if (!d.empty()) d += '*';
            d += "D[" + gens_->even_name(i) + "]";
            if (e > 1) d += "^" + std::to_string(e);
        }
        for (std::size_t i = 0; i < gens_->odd_count(); ++i)
            if (k.second.odd >> i & 1) {
                if (!d.empty()) d += '*';
                d += "D[" + gens_->odd_name(i) + "]";
            }
        if (d.empty()) d = "1";
        std::string coef = c.str();
        bool neg = coef.front() == '-';
        std::string mag = neg ? coef.substr(1) : coef;
        if (mag.find_first_of("+-") != std::string::npos) {
            neg = false;
            mag = "(" + coef + ")";
        }
        if (!out.empty())
            out += neg ? "-" : "+";
        else if (neg)
            out += "-";
        std::string m = monomial_str(*gens_, k.first);
        if (mag != "1") m = (m == "1") ? mag : mag + "*" + m;
        out += m + "|" + d;
    }
    return out;
}

NormalOrderedOperator compose(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
    require_same_generators(a.fock(), b.fock());
    const auto& gens = a.fock();
    NormalOrderedOperator out(gens);
    // group a's terms by derivative part so d_D o b is computed once per D
    std::map<DerivMonomial, std::vector<std::pair<const Monomial*, const Scalar*>>> by_deriv;
    for (const auto& [k, c] : a.terms()) by_deriv[k.second].emplace_back(&k.first, &c);
    for (const auto& [d, mults] : by_deriv) {
        NormalOrderedOperator::Terms t = b.terms();
        // d = d^beta d_{b1} ... d_{bk}; apply the rightmost factor first
        for (int i = static_cast<int>(gens->odd_count()) - 1; i >= 0; --i)
            if (d.odd >> i & 1) t = left_derivative(Generator{true, static_cast<std::size_t>(i)}, t);
        for (std::size_t i = 0; i < d.even.size(); ++i)
            for (int k = 0; k < d.even[i]; ++k) t = left_derivative(Generator{false, i}, t);
        for (const auto& [m, c] : mults)
            for (const auto& [key, x] : t) {
                auto [prod, s] = multiply_monomials(*m, key.first);
                if (s == 0) continue;
                Scalar v = *c * x;
                out.add_term(prod, key.second, s > 0 ? v : -v);
            }
    }
    return out;
}

NormalOrderedOperator commutator(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
    NormalOrderedOperator out(a.fock());
    for (int pa = 0; pa < 2; ++pa) {
        NormalOrderedOperator ap = a.parity_part(pa);
        if (ap.is_zero()) continue;
        for (int pb = 0; pb < 2; ++pb) {
            NormalOrderedOperator bp = b.parity_part(pb);
            if (bp.is_zero()) continue;
            out += compose(ap, bp);
            if (pa & pb)
                out += compose(bp, ap);
            else
                out -= compose(bp, ap);
        }
    }
    return out;
}

SuperPolynomial apply(const NormalOrderedOperator& op, const SuperPolynomial& v) {
    require_same_generators(op.fock(), v.generators());
    const auto& gens = op.fock();
    SuperPolynomial out(gens);
    for (const auto& [k, c] : op.terms()) {
        SuperPolynomial w = v;
        for (int i = static_cast<int>(gens->odd_count()) - 1; i >= 0 && !w.is_zero(); --i)
            if (k.second.odd >> i & 1) w = partial_derivative(w, Generator{true, static_cast<std::size_t>(i)});
        for (std::size_t i = 0; i < k.second.even.size(); ++i)
            for (int j = 0; j < k.second.even[i] && !w.is_zero(); ++j) w = partial_derivative(w, Generator{false, i});
        if (w.is_zero()) continue;
        out += SuperPolynomial::monomial(gens, k.first, c) * w;
    }
    return out;
}

std::map<NormalOrderedOperator::Key, Scalar> as_vector(const NormalOrderedOperator& op) { return op.terms(); }

}  // namespace howe
