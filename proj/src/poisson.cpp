#include "howe/poisson.hpp"

#include <algorithm>

#include "howe/linalg.hpp"
#include "json.hpp"

namespace howe {

namespace {

GeneratorSetPtr make_generators(int n, int m, Coordinates coords) {
    if (n < 0 || m < 0) throw StructuralError("po(2n|m) needs n, m >= 0");
    GeneratorSet::Spec s;
    for (int i = 1; i <= n; ++i) {
        s.even.push_back("q" + std::to_string(i));
        s.even_roles.push_back(GeneratorRole::Q);
    }
    for (int i = 1; i <= n; ++i) {
        s.even.push_back("p" + std::to_string(i));
        s.even_roles.push_back(GeneratorRole::P);
    }
    if (coords == Coordinates::Theta) {
        for (int j = 1; j <= m; ++j) s.odd.push_back("Th" + std::to_string(j));
        s.odd_roles.assign(s.odd.size(), GeneratorRole::None);
    } else {
        int r = m / 2;
        for (int j = 1; j <= r; ++j) {
            s.odd.push_back("xi" + std::to_string(j));
            s.odd_roles.push_back(GeneratorRole::Q);
        }
        for (int j = 1; j <= r; ++j) {
            s.odd.push_back("eta" + std::to_string(j));
            s.odd_roles.push_back(GeneratorRole::P);
        }
        if (m % 2) {
            s.odd.push_back("th");
            s.odd_roles.push_back(GeneratorRole::Theta);
        }
    }
    return GeneratorSet::make(std::move(s));
}

// bracket for homogeneous f of parity pf
SuperPolynomial bracket_homogeneous(const PoissonAlgebra& alg, const SuperPolynomial& f, int pf,
                                    const SuperPolynomial& g) {
    const int n = alg.n();
    SuperPolynomial out(alg.generators());
    for (int i = 0; i < n; ++i) {
        Generator q{false, static_cast<std::size_t>(i)}, p{false, static_cast<std::size_t>(n + i)};
        SuperPolynomial fp = partial_derivative(f, p), fq = partial_derivative(f, q);
        if (!fp.is_zero()) out += fp * partial_derivative(g, q);
        if (!fq.is_zero()) out -= fq * partial_derivative(g, p);
    }
    SuperPolynomial odd(alg.generators());
    auto dd = [&](std::size_t a, std::size_t b) {
        SuperPolynomial fa = partial_derivative(f, Generator{true, a});
        if (fa.is_zero()) return;
        SuperPolynomial gb = partial_derivative(g, Generator{true, b});
        if (!gb.is_zero()) odd += fa * gb;
    };
    const std::size_t m = static_cast<std::size_t>(alg.m());
    if (alg.coordinates() == Coordinates::Theta) {
        for (std::size_t j = 0; j < m; ++j) dd(j, j);
    } else {
        const std::size_t r = static_cast<std::size_t>(alg.r());
        for (std::size_t j = 0; j < r; ++j) {
            dd(j, r + j);
            dd(r + j, j);
        }
        if (alg.has_theta()) dd(2 * r, 2 * r);
    }
    // - (-1)^{p(f)} [...]
    if (pf == 0)
        out -= odd;
    else
        out += odd;
    return out;
}

}  // namespace

PoissonAlgebra::PoissonAlgebra(int n, int m, Coordinates coords)
    : n_(n), m_(m), coords_(coords), gens_(make_generators(n, m, coords)) {}

SuperPolynomial PoissonAlgebra::bracket(const SuperPolynomial& f, const SuperPolynomial& g) const {
    require_same_generators(gens_, f.generators());
    require_same_generators(gens_, g.generators());
    SuperPolynomial out(gens_);
    for (int pf = 0; pf < 2; ++pf) {
        SuperPolynomial part = f.parity_part(pf);
        if (!part.is_zero()) out += bracket_homogeneous(*this, part, pf, g);
    }
    return out;
}

SuperPolynomial poisson_bracket(const PoissonAlgebra& alg, const SuperPolynomial& f, const SuperPolynomial& g) {
    return alg.bracket(f, g);
}

SuperPolynomial change_coordinates(const PoissonAlgebra& from, const SuperPolynomial& f, const PoissonAlgebra& to) {
    if (from.n() != to.n() || from.m() != to.m()) throw StructuralError("coordinate change needs equal (n, m)");
    require_same_generators(from.generators(), f.generators());
    const auto& tg = to.generators();
    std::vector<SuperPolynomial> even;
    for (std::size_t i = 0; i < from.generators()->even_count(); ++i)
        even.push_back(SuperPolynomial::generator(tg, from.generators()->even_name(i)));
    if (from.coordinates() == to.coordinates()) {
        std::vector<SuperPolynomial> odd;
        for (std::size_t j = 0; j < from.generators()->odd_count(); ++j)
            odd.push_back(SuperPolynomial::generator(tg, from.generators()->odd_name(j)));
        return substitute(f, tg, even, odd);
    }
    const int r = from.r();
    const Scalar h = Scalar::sqrt2().inverse(), i = Scalar::imag();
    auto G = [&tg](const std::string& name) { return SuperPolynomial::generator(tg, name); };
    std::vector<SuperPolynomial> odd(static_cast<std::size_t>(from.m()), SuperPolynomial(tg));
    for (int j = 1; j <= r; ++j) {
        std::string s = std::to_string(j), t = std::to_string(r + j);
        if (from.coordinates() == Coordinates::Theta) {
            // Th_j = (xi_j + eta_j)/r2, Th_{r+j} = i (xi_j - eta_j)/r2
            odd[j - 1] = h * (G("xi" + s) + G("eta" + s));
            odd[r + j - 1] = (i * h) * (G("xi" + s) - G("eta" + s));
        } else {
            // xi_j = (Th_j - i Th_{r+j})/r2, eta_j = (Th_j + i Th_{r+j})/r2
            odd[j - 1] = h * (G("Th" + s) - i * G("Th" + t));
            odd[r + j - 1] = h * (G("Th" + s) + i * G("Th" + t));
        }
    }
    if (from.has_theta())
        odd[2 * r] = G(from.coordinates() == Coordinates::Theta ? "th" : "Th" + std::to_string(2 * r + 1));
    return substitute(f, tg, even, odd);
}

std::size_t OspBasis::index(const std::string& label) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == label) return k;
    throw StructuralError("no basis element labeled " + label);
}

OspBasis osp_quadratic_basis(const PoissonAlgebra& alg) {
    const auto& gens = alg.generators();
    const std::size_t ne = gens->even_count(), no = gens->odd_count();
    std::vector<Monomial> monos;
    Monomial u;
    u.even.assign(ne, 0);
    for (std::size_t a = 0; a < ne; ++a)
        for (std::size_t b = a; b < ne; ++b) {
            Monomial m = u;
            ++m.even[a];
            ++m.even[b];
            monos.push_back(m);
        }
    for (std::size_t a = 0; a < ne; ++a)
        for (std::size_t b = 0; b < no; ++b) {
            Monomial m = u;
            ++m.even[a];
            m.odd = std::uint64_t{1} << b;
            monos.push_back(m);
        }
    for (std::size_t a = 0; a < no; ++a)
        for (std::size_t b = a + 1; b < no; ++b) {
            Monomial m = u;
            m.odd = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            monos.push_back(m);
        }
    std::sort(monos.begin(), monos.end());
    OspBasis basis;
    for (const auto& m : monos) {
        basis.elements.push_back(SuperPolynomial::monomial(gens, m));
        basis.labels.push_back(monomial_str(*gens, m));
    }
    return basis;
}

long long osp_dimension(int n, int m) {
    return static_cast<long long>(n) * (2 * n + 1) + static_cast<long long>(m) * (m - 1) / 2 + 2LL * n * m;
}

std::optional<std::vector<Scalar>> basis_coordinates(const OspBasis& basis, const SuperPolynomial& v) {
    std::map<Monomial, std::size_t> rows;
    for (const auto& e : basis.elements)
        for (const auto& [m, c] : e.terms()) rows.try_emplace(m, rows.size());
    for (const auto& [m, c] : v.terms())
        if (!rows.count(m)) return std::nullopt;
    Matrix a(rows.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (const auto& [m, c] : basis.elements[k].terms()) a(rows.at(m), k) = c;
    std::vector<Scalar> b(rows.size());
    for (const auto& [m, c] : v.terms()) b[rows.at(m)] = c;
    return solve(a, b);
}

bool is_bracket_closed(const PoissonAlgebra& alg, const OspBasis& basis) {
    SpanBasis<Monomial> span;
    for (const auto& e : basis.elements) span.insert(e.terms());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b)
            if (!span.contains(alg.bracket(basis.elements[a], basis.elements[b]).terms())) return false;
    return true;
}

std::string structure_constants_json(const PoissonAlgebra& alg, const OspBasis& basis) {
    nlohmann::ordered_json j;
    j["basis"] = basis.labels;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            SuperPolynomial br = alg.bracket(basis.elements[a], basis.elements[b]);
            if (br.is_zero()) continue;
            auto coords = basis_coordinates(basis, br);
            if (!coords) throw InvariantViolation("bracket leaves the span: {" + basis.labels[a] + ", " +
                                                  basis.labels[b] + "} = " + br.str());
            for (std::size_t k = 0; k < coords->size(); ++k)
                if (!(*coords)[k].is_zero())
                    table.push_back({basis.labels[a], basis.labels[b], basis.labels[k], (*coords)[k].str()});
        }
    j["brackets"] = table;
    return j.dump(2);
}

NormalOrderedOperator hamiltonian_quotient_field(const PoissonAlgebra& alg, const SuperPolynomial& f) {
    if (alg.n() != 0 || alg.has_theta() || alg.coordinates() != Coordinates::XiEtaTheta)
        throw UnsupportedError("H_f is implemented for po(0|2k) in xi/eta coordinates only");
    require_same_generators(alg.generators(), f.generators());
    const auto& gens = alg.generators();
    const std::size_t r = static_cast<std::size_t>(alg.r());
    NormalOrderedOperator out(gens);
    Monomial u;
    for (int pf = 0; pf < 2; ++pf) {
        SuperPolynomial part = f.parity_part(pf);
        if (part.is_zero()) continue;
        Scalar sign = pf ? Scalar(-1) : Scalar(1);
        for (std::size_t j = 0; j < r; ++j) {
            for (auto [a, b] : {std::pair{j, r + j}, std::pair{r + j, j}}) {
                SuperPolynomial da = partial_derivative(part, Generator{true, a});
                DerivMonomial d = u;
                d.odd = std::uint64_t{1} << b;
                for (const auto& [m, c] : da.terms()) out.add_term(m, d, sign * c);
            }
        }
    }
    return out;
}

}  // namespace howe
