#pragma once

#include <cstdint>
#include <random>

#include "howe/superpoly.hpp"

namespace howe {

/// Seeded generator of random exact test data. Deterministic per seed.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    /// Small rational with numerator in [-5,5] and denominator in [1,4].
    Rational rational();
    /// Random element of Q(i, sqrt 2); each component is zero with probability 1/2.
    Scalar scalar();
    Scalar nonzero_scalar();

    Monomial monomial(const GeneratorSet& gens, int max_degree, std::optional<int> parity = std::nullopt);
    /// Sum of up to `max_terms` random monomials, each of degree <= max_degree,
    /// all of the requested parity when given.
    SuperPolynomial polynomial(const GeneratorSetPtr& gens, int max_degree, int max_terms,
                               std::optional<int> parity = std::nullopt);
    /// Homogeneous of a random parity.
    SuperPolynomial homogeneous(const GeneratorSetPtr& gens, int max_degree, int max_terms);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace howe
