#include "howe/linalg.hpp"
#include "howe/weyl_clifford.hpp"

namespace howe {

GeneratorSetPtr fock_generators(const PoissonAlgebra& alg) {
    GeneratorSet::Spec s;
    for (int i = 1; i <= alg.n(); ++i) {
        s.even.push_back("q" + std::to_string(i));
        s.even_roles.push_back(GeneratorRole::Q);
    }
    for (int j = 1; j <= alg.r(); ++j) {
        s.odd.push_back("xi" + std::to_string(j));
        s.odd_roles.push_back(GeneratorRole::Q);
    }
    if (alg.has_theta()) {
        s.odd.push_back("th");
        s.odd_roles.push_back(GeneratorRole::Theta);
    }
    return GeneratorSet::make(std::move(s));
}

std::optional<Scalar> rational_sqrt(const Scalar& x) {
    if (!x.is_rational()) return std::nullopt;
    if (x.is_zero()) return Scalar();
    Rational q = x.rational_part();
    bool neg = q.sign() < 0;
    if (neg) q = -q;
    auto exact = [](const Rational& v) -> std::optional<Rational> {
        mpq_class m = v.to_mpq();
        mpz_class n = m.get_num(), d = m.get_den();
        mpz_class rn = sqrt(n), rd = sqrt(d);
        if (rn * rn != n || rd * rd != d) return std::nullopt;
        return Rational(mpq_class(rn, rd));
    };
    std::optional<Scalar> root;
    if (auto a = exact(q))
        root = Scalar(*a);
    else if (auto b = exact(q / Rational(2)))
        root = Scalar(*b) * Scalar::sqrt2();
    if (root && neg) *root *= Scalar::imag();
    return root;
}

NormalOrderedOperator quantize(const PoissonAlgebra& alg, const SuperPolynomial& f, const Scalar& hbar,
                               ThetaRule rule) {
    if (alg.coordinates() != Coordinates::XiEtaTheta)
        throw UnsupportedError("quantize needs xi/eta/theta coordinates; convert with change_coordinates first");
    require_same_generators(alg.generators(), f.generators());
    const auto fock = fock_generators(alg);
    const std::size_t n = static_cast<std::size_t>(alg.n()), r = static_cast<std::size_t>(alg.r());
    const std::uint64_t xi_mask = (std::uint64_t{1} << r) - 1;
    const std::uint64_t theta_bit = std::uint64_t{1} << (2 * r);

    NormalOrderedOperator theta_op(fock);
    if (alg.has_theta()) {
        Scalar c = hbar;
        if (rule == ThetaRule::Balanced) {
            auto root = rational_sqrt(hbar / Scalar(2));
            if (!root) throw UnsupportedError("sqrt(hbar/2) is not in Q(i, sqrt 2) for hbar = " + hbar.str());
            c = *root;
        }
        theta_op = c * (NormalOrderedOperator::multiplication(SuperPolynomial::generator(fock, "th")) +
                        NormalOrderedOperator::derivative(fock, "th"));
    }

    std::vector<Scalar> hbar_pow{Scalar(1)};
    NormalOrderedOperator out(fock);
    for (const auto& [m, c] : f.terms()) {
        Monomial mult, deriv;
        mult.even.assign(n, 0);
        deriv.even.assign(n, 0);
        int order = 0;
        for (std::size_t i = 0; i < n; ++i) {
            mult.even[i] = m.even[i];
            deriv.even[i] = m.even[n + i];
            order += m.even[n + i];
        }
        mult.odd = m.odd & xi_mask;
        deriv.odd = (m.odd >> r) & xi_mask;
        order += deriv.odd_count();
        while (static_cast<int>(hbar_pow.size()) <= order) hbar_pow.push_back(hbar_pow.back() * hbar);
        auto t = NormalOrderedOperator::term(fock, mult, deriv, c * hbar_pow[order]);
        if (m.odd & theta_bit) t = compose(t, theta_op);
        out += t;
    }
    return out;
}

Scalar quantization_defect(const PoissonAlgebra& alg, const SuperPolynomial& f, const SuperPolynomial& g,
                           const Scalar& hbar, ThetaRule rule) {
    auto d = commutator(quantize(alg, f, hbar, rule), quantize(alg, g, hbar, rule)) -
             hbar * quantize(alg, alg.bracket(f, g), hbar, rule);
    auto s = d.as_scalar();
    if (!s) throw InvariantViolation("quantization defect is not scalar: " + d.str());
    return *s;
}

namespace {

std::vector<Monomial> all_odd_monomials(std::size_t even_count, std::size_t odd_count) {
    std::vector<Monomial> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << odd_count); ++mask) {
        Monomial m;
        m.even.assign(even_count, 0);
        m.odd = mask;
        out.push_back(m);
    }
    return out;
}

}  // namespace

ImageDimensionReport image_dimension(int m, const Scalar& hbar) {
    if (m < 1) throw UnsupportedError("image_dimension needs m >= 1");
    PoissonAlgebra alg(0, m, Coordinates::XiEtaTheta);
    const auto fock = fock_generators(alg);
    ImageDimensionReport rep;
    rep.m = m;
    rep.fock_dimension = std::size_t{1} << fock->odd_count();

    std::vector<NormalOrderedOperator> image;
    SpanBasis<NormalOrderedOperator::Key> span;
    for (const auto& mono : all_odd_monomials(0, alg.generators()->odd_count())) {
        image.push_back(quantize(alg, SuperPolynomial::monomial(alg.generators(), mono), hbar));
        span.insert(image.back().terms());
    }
    rep.image_dimension = span.dimension();
    if (!alg.has_theta()) return rep;

    const Scalar i = Scalar::imag();
    auto th = NormalOrderedOperator::multiplication(SuperPolynomial::generator(fock, "th"));
    auto dth = NormalOrderedOperator::derivative(fock, "th");
    NormalOrderedOperator j_printed = i * (th + dth), j_conj = i * (th - dth);
    for (const auto& op : image) {
        if (!commutator(op, j_printed).is_zero()) ++rep.failures_printed_j;
        if (!commutator(op, j_conj).is_zero()) ++rep.failures_conjugate_j;
    }

    // supercommutant of J in End(Fock): normal-ordered words span End(Lambda)
    auto words = all_odd_monomials(0, fock->odd_count());
    std::vector<NormalOrderedOperator::Terms> columns;
    std::map<NormalOrderedOperator::Key, std::size_t> rows;
    for (const auto& a : words)
        for (const auto& b : words) {
            auto c = commutator(NormalOrderedOperator::term(fock, a, b), j_conj);
            for (const auto& [k, x] : c.terms()) rows.try_emplace(k, rows.size());
            columns.push_back(c.terms());
        }
    Matrix mat(rows.size(), columns.size());
    for (std::size_t col = 0; col < columns.size(); ++col)
        for (const auto& [k, x] : columns[col]) mat(rows.at(k), col) = x;
    rep.centralizer_of_j = columns.size() - rank(mat);
    return rep;
}

}  // namespace howe
