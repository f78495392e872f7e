#include "howe/random.hpp"

namespace howe {

Rational RandomSource::rational() { return Rational(uniform(-5, 5), uniform(1, 4)); }

Scalar RandomSource::scalar() {
    auto part = [this] { return coin() ? rational() : Rational(); };
    Rational a = rational();
    Rational b = part(), c = part(), d = part();
    return Scalar(a, b, c, d);
}

Scalar RandomSource::nonzero_scalar() {
    for (;;) {
        Scalar s = scalar();
        if (!s.is_zero()) return s;
    }
}

Monomial RandomSource::monomial(const GeneratorSet& gens, int max_degree, std::optional<int> parity) {
    for (;;) {
        Monomial m;
        m.even.assign(gens.even_count(), 0);
        int budget = uniform(0, max_degree);
        std::size_t total = gens.even_count() + gens.odd_count();
        if (total == 0) return m;
        for (int k = 0; k < budget; ++k) {
            std::size_t g = static_cast<std::size_t>(uniform(0, static_cast<int>(total) - 1));
            if (g < gens.even_count())
                ++m.even[g];
            else
                m.odd |= std::uint64_t{1} << (g - gens.even_count());
        }
        if (!parity || m.parity() == (*parity & 1)) return m;
        if (gens.odd_count() == 0 && (*parity & 1)) throw std::invalid_argument("no odd generators");
    }
}

SuperPolynomial RandomSource::polynomial(const GeneratorSetPtr& gens, int max_degree, int max_terms,
                                         std::optional<int> parity) {
    SuperPolynomial p(gens);
    int n = uniform(1, max_terms);
    for (int k = 0; k < n; ++k) p += SuperPolynomial::monomial(gens, monomial(*gens, max_degree, parity), scalar());
    return p;
}

SuperPolynomial RandomSource::homogeneous(const GeneratorSetPtr& gens, int max_degree, int max_terms) {
    int parity = gens->odd_count() > 0 ? uniform(0, 1) : 0;
    return polynomial(gens, max_degree, max_terms, parity);
}

}  // namespace howe
