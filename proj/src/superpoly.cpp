#include "howe/superpoly.hpp"

#include <bit>
#include <cctype>
#include <sstream>

namespace howe {

std::shared_ptr<const GeneratorSet> GeneratorSet::make(Spec spec) {
    if (spec.odd.size() > 64) throw UnsupportedError("at most 64 odd generators are supported");
    std::vector<std::string> all = spec.even;
    all.insert(all.end(), spec.odd.begin(), spec.odd.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        const std::string& n = all[i];
        if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])) || n == "i" || n == "r2")
            throw StructuralError("invalid generator name '" + n + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (all[j] == n) throw StructuralError("duplicate generator name '" + n + "'");
    }
    if (!spec.laurent.empty() && spec.laurent.size() != spec.even.size())
        throw StructuralError("laurent flags must match even generators");
    if (!spec.even_roles.empty() && spec.even_roles.size() != spec.even.size())
        throw StructuralError("even roles must match even generators");
    if (!spec.odd_roles.empty() && spec.odd_roles.size() != spec.odd.size())
        throw StructuralError("odd roles must match odd generators");
    return std::shared_ptr<const GeneratorSet>(new GeneratorSet(std::move(spec)));
}

std::shared_ptr<const GeneratorSet> GeneratorSet::make(std::vector<std::string> even, std::vector<std::string> odd) {
    Spec s;
    s.even = std::move(even);
    s.odd = std::move(odd);
    return make(std::move(s));
}

bool GeneratorSet::is_laurent(std::size_t even_index) const {
    return !spec_.laurent.empty() && spec_.laurent.at(even_index);
}

GeneratorRole GeneratorSet::role(Generator g) const {
    const auto& roles = g.odd ? spec_.odd_roles : spec_.even_roles;
    return roles.empty() ? GeneratorRole::None : roles.at(g.index);
}

std::optional<Generator> GeneratorSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < spec_.even.size(); ++i)
        if (spec_.even[i] == name) return Generator{false, i};
    for (std::size_t i = 0; i < spec_.odd.size(); ++i)
        if (spec_.odd[i] == name) return Generator{true, i};
    return std::nullopt;
}

Generator GeneratorSet::at(std::string_view name) const {
    auto g = find(name);
    if (!g) throw StructuralError("unknown generator '" + std::string(name) + "'");
    return *g;
}

bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
    return a.spec_.even == b.spec_.even && a.spec_.odd == b.spec_.odd && a.spec_.laurent == b.spec_.laurent;
}

void require_same_generators(const GeneratorSetPtr& a, const GeneratorSetPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw StructuralError("operands use different generator sets");
}

// ---------------------------------------------------------------------------

int Monomial::total_degree() const {
    int d = odd_count();
    for (int e : even) d += e;
    return d;
}

int Monomial::odd_count() const { return std::popcount(odd); }

bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.even.size() && i < b.even.size(); ++i)
        if (a.even[i] != b.even[i]) return a.even[i] > b.even[i];
    if (a.even.size() != b.even.size()) return a.even.size() < b.even.size();
    if (a.odd != b.odd) {
        // first differing odd generator: the monomial containing it comes first
        std::uint64_t diff = a.odd ^ b.odd;
        std::uint64_t low = diff & (~diff + 1);
        return (a.odd & low) != 0;
    }
    return false;
}

int odd_merge_sign(std::uint64_t left, std::uint64_t right) {
    if (left & right) return 0;
    // count pairs (i in left, j in right) with i > j
    int swaps = 0;
    std::uint64_t r = right;
    while (r) {
        int j = std::countr_zero(r);
        r &= r - 1;
        std::uint64_t above = j == 63 ? 0 : (left >> (j + 1));
        swaps += std::popcount(above);
    }
    return (swaps & 1) ? -1 : 1;
}

std::pair<Monomial, int> multiply_monomials(const Monomial& a, const Monomial& b) {
    int s = odd_merge_sign(a.odd, b.odd);
    Monomial m;
    if (s == 0) return {m, 0};
    m.even = a.even;
    for (std::size_t i = 0; i < m.even.size(); ++i) m.even[i] += b.even[i];
    m.odd = a.odd | b.odd;
    return {m, s};
}

std::string monomial_str(const GeneratorSet& gens, const Monomial& m) {
    std::string out;
    auto put = [&out](const std::string& s) {
        if (!out.empty()) out += '*';
        out += s;
    };
    for (std::size_t i = 0; i < m.even.size(); ++i) {
        int e = m.even[i];
        if (e == 0) continue;
        if (e == 1)
            put(gens.even_name(i));
        else
            put(gens.even_name(i) + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e)));
    }
    for (std::size_t i = 0; i < gens.odd_count(); ++i)
        if (m.odd >> i & 1) put(gens.odd_name(i));
    return out.empty() ? "1" : out;
}


// ---------------------------------------------------------------------------

SuperPolynomial::SuperPolynomial(GeneratorSetPtr gens) : gens_(std::move(gens)) {
    if (!gens_) throw StructuralError("null generator set");
}

SuperPolynomial::SuperPolynomial(GeneratorSetPtr gens, Terms terms) : SuperPolynomial(std::move(gens)) {
    for (auto& [m, c] : terms) add_term(m, c);
}

SuperPolynomial SuperPolynomial::constant(GeneratorSetPtr gens, const Scalar& c) {
    Monomial m;
    m.even.assign(gens->even_count(), 0);
    return monomial(std::move(gens), std::move(m), c);
}

SuperPolynomial SuperPolynomial::generator(GeneratorSetPtr gens, std::string_view name) {
    Generator g = gens->at(name);
    Monomial m;
    m.even.assign(gens->even_count(), 0);
    if (g.odd)
        m.odd = std::uint64_t{1} << g.index;
    else
        m.even[g.index] = 1;
    return monomial(std::move(gens), std::move(m));
}

SuperPolynomial SuperPolynomial::monomial(GeneratorSetPtr gens, Monomial m, const Scalar& c) {
    if (m.even.size() != gens->even_count()) throw StructuralError("monomial does not match generator set");
    for (std::size_t i = 0; i < m.even.size(); ++i)
        if (m.even[i] < 0 && !gens->is_laurent(i))
            throw StructuralError("negative exponent on non-Laurent generator " + gens->even_name(i));
    if (gens->odd_count() < 64 && (m.odd >> gens->odd_count()) != 0)
        throw StructuralError("odd mask references unknown generator");
    SuperPolynomial p(std::move(gens));
    p.add_term(m, c);
    return p;
}

void SuperPolynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar SuperPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar SuperPolynomial::constant_term() const {
    Monomial m;
    m.even.assign(gens_->even_count(), 0);
    return coefficient(m);
}

std::optional<int> SuperPolynomial::parity() const {
    std::optional<int> p;
    for (const auto& [m, c] : terms_) {
        if (p && *p != m.parity()) return std::nullopt;
        p = m.parity();
    }
    return p;
}

SuperPolynomial SuperPolynomial::parity_part(int parity) const {
    SuperPolynomial out(gens_);
    for (const auto& [m, c] : terms_)
        if (m.parity() == (parity & 1)) out.terms_.emplace(m, c);
    return out;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
    require_same_generators(gens_, o.gens_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
    require_same_generators(gens_, o.gens_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    require_same_generators(a.gens_, b.gens_);
    SuperPolynomial out(a.gens_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto [m, s] = multiply_monomials(ma, mb);
            if (s == 0) continue;
            Scalar c = ca * cb;
            out.add_term(m, s > 0 ? c : -c);
        }
    return out;
}

SuperPolynomial multiply(const SuperPolynomial& f, const SuperPolynomial& g) { return f * g; }

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
    require_same_generators(a.gens_, b.gens_);
    return a.terms_ == b.terms_;
}

std::string SuperPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono = monomial_str(*gens_, m);
        std::string coef = c.str();
        bool neg = coef.front() == '-';
        std::string mag = neg ? coef.substr(1) : coef;
        bool compound = mag.find_first_of("+-") != std::string::npos;
        if (compound) {
            // several field components: keep the sign inside the parentheses
            neg = false;
            mag = "(" + coef + ")";
        }
        if (!out.empty())
            out += neg ? "-" : "+";
        else if (neg)
            out += "-";
        if (mono == "1")
            out += mag;
        else if (mag == "1")
            out += mono;
        else
            out += mag + "*" + mono;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SuperPolynomial& p) { return os << p.str(); }

SuperPolynomial partial_derivative(const SuperPolynomial& f, Generator x) {
    // derivatives are injective on monomials, so no terms collide
    SuperPolynomial::Terms terms;
    for (const auto& [m, c] : f.terms()) {
        if (x.odd) {
            std::uint64_t bit = std::uint64_t{1} << x.index;
            if (!(m.odd & bit)) continue;
            Monomial r = m;
            r.odd &= ~bit;
            bool neg = std::popcount(m.odd & (bit - 1)) & 1;
            terms.emplace(std::move(r), neg ? -c : c);
        } else {
            int e = m.even[x.index];
            if (e == 0) continue;
            Monomial r = m;
            r.even[x.index] -= 1;
            terms.emplace(std::move(r), c * Scalar(e));
        }
    }
    return SuperPolynomial(f.generators(), std::move(terms));
}

SuperPolynomial partial_derivative(const SuperPolynomial& f, std::string_view name) {
    return partial_derivative(f, f.generators()->at(name));
}

SuperPolynomial substitute(const SuperPolynomial& f, const GeneratorSetPtr& target,
                           const std::vector<SuperPolynomial>& even_images,
                           const std::vector<SuperPolynomial>& odd_images) {
    const auto& gens = *f.generators();
    if (even_images.size() != gens.even_count() || odd_images.size() != gens.odd_count())
        throw StructuralError("substitution needs one image per generator");
    for (const auto& e : even_images)
        if (!e.is_zero() && e.parity() != 0) throw StructuralError("even generator mapped to non-even element");
    for (const auto& o : odd_images)
        if (!o.is_zero() && o.parity() != 1) throw StructuralError("odd generator mapped to non-odd element");
    std::vector<std::vector<SuperPolynomial>> powers(gens.even_count());
    auto power = [&](std::size_t i, int e) -> const SuperPolynomial& {
        if (e < 0) throw UnsupportedError("substitution into a Laurent monomial");
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(SuperPolynomial::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * even_images[i]);
        return cache[e];
    };
    SuperPolynomial out(target);
    for (const auto& [m, c] : f.terms()) {
        SuperPolynomial t = SuperPolynomial::constant(target, c);
        for (std::size_t i = 0; i < m.even.size(); ++i)
            if (m.even[i]) t = t * power(i, m.even[i]);
        for (std::size_t i = 0; i < gens.odd_count() && !t.is_zero(); ++i)
            if (m.odd >> i & 1) t = t * odd_images[i];
        out += t;
    }
    return out;
}

int degree_standard(const SuperPolynomial& f) {
    if (f.is_zero()) throw DegreeError("degree of the zero polynomial");
    int d = f.terms().begin()->first.total_degree();
    for (const auto& [m, c] : f.terms())
        if (m.total_degree() != d) throw DegreeError("polynomial is not homogeneous: " + f.str());
    return d - 2;
}

int degree_rough(const SuperPolynomial& f, OddDimParity m_parity) {
    if (f.is_zero()) throw DegreeError("degree of the zero polynomial");
    const auto& gens = *f.generators();
    int p_weight = m_parity == OddDimParity::Odd ? 2 : 1;
    auto weight = [&](Generator g) {
        switch (gens.role(g)) {
            case GeneratorRole::Q: return 0;
            case GeneratorRole::P: return p_weight;
            case GeneratorRole::Theta:
                if (m_parity == OddDimParity::Even) throw DegreeError("theta present although m is even");
                return 1;
            case GeneratorRole::None: break;
        }
        throw StructuralError("generator " + gens.name(g) + " has no Q/P/theta role");
    };
    std::optional<int> deg;
    for (const auto& [m, c] : f.terms()) {
        int d = 0;
        for (std::size_t i = 0; i < m.even.size(); ++i)
            if (m.even[i]) d += m.even[i] * weight(Generator{false, i});
        for (std::size_t i = 0; i < gens.odd_count(); ++i)
            if (m.odd >> i & 1) d += weight(Generator{true, i});
        if (deg && *deg != d) throw DegreeError("polynomial is not rough-homogeneous: " + f.str());
        deg = d;
    }
    return *deg - p_weight;
}

}  // namespace howe
