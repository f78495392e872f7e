#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "howe/superpoly.hpp"

namespace howe {

/// Exponents of a derivative monomial: `even[i]` is the order of d/dx_i, bit
/// j of `odd` is d/dxi_j. The odd derivatives compose left to right in
/// increasing index order.
using DerivMonomial = Monomial;

/// Differential operator with polynomial coefficients on the Fock space
/// C[x | xi], stored in normal form: sum of c * x^a xi^A o d^b d_B.
class NormalOrderedOperator {
public:
    using Key = std::pair<Monomial, DerivMonomial>;
    using Terms = std::map<Key, Scalar>;

    /// Placeholder without a Fock space; assign before use.
    NormalOrderedOperator() = default;
    explicit NormalOrderedOperator(GeneratorSetPtr fock);

    static NormalOrderedOperator identity(GeneratorSetPtr fock);
    static NormalOrderedOperator multiplication(const SuperPolynomial& f);
    /// d/dx for a single generator x.
    static NormalOrderedOperator derivative(GeneratorSetPtr fock, std::string_view name);
    static NormalOrderedOperator term(GeneratorSetPtr fock, Monomial mult, DerivMonomial deriv, const Scalar& c = 1);

    const GeneratorSetPtr& fock() const { return gens_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::optional<int> parity() const;
    NormalOrderedOperator parity_part(int parity) const;
    /// c if the operator equals c * Id.
    std::optional<Scalar> as_scalar() const;

    NormalOrderedOperator& operator+=(const NormalOrderedOperator& o);
    NormalOrderedOperator& operator-=(const NormalOrderedOperator& o);
    NormalOrderedOperator& operator*=(const Scalar& s);
    NormalOrderedOperator operator-() const;
    friend NormalOrderedOperator operator+(NormalOrderedOperator a, const NormalOrderedOperator& b) { return a += b; }
    friend NormalOrderedOperator operator-(NormalOrderedOperator a, const NormalOrderedOperator& b) { return a -= b; }
    friend NormalOrderedOperator operator*(NormalOrderedOperator a, const Scalar& s) { return a *= s; }
    friend NormalOrderedOperator operator*(const Scalar& s, NormalOrderedOperator a) { return a *= s; }
    friend bool operator==(const NormalOrderedOperator& a, const NormalOrderedOperator& b);
    friend bool operator!=(const NormalOrderedOperator& a, const NormalOrderedOperator& b) { return !(a == b); }

    /// Term list, e.g. "2*q1|D[q1]+xi1|D[xi1]"; "1|1" is the identity.
    std::string str() const;

    void add_term(const Monomial& mult, const DerivMonomial& deriv, const Scalar& c);

private:
    GeneratorSetPtr gens_;
    Terms terms_;
};

/// A o B, renormal-ordered.
NormalOrderedOperator compose(const NormalOrderedOperator& a, const NormalOrderedOperator& b);
inline NormalOrderedOperator operator*(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
    return compose(a, b);
}

/// Supercommutator AB - (-1)^{p(A)p(B)} BA, extended bilinearly to
/// inhomogeneous operators.
NormalOrderedOperator commutator(const NormalOrderedOperator& a, const NormalOrderedOperator& b);

/// Action on a Fock-space vector.
SuperPolynomial apply(const NormalOrderedOperator& op, const SuperPolynomial& v);

/// Coefficient vector of an operator over its (mult, deriv) keys, for span
/// and rank computations.
std::map<NormalOrderedOperator::Key, Scalar> as_vector(const NormalOrderedOperator& op);

}  // namespace howe
