#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "howe/errors.hpp"
#include "howe/scalar.hpp"

namespace howe {

/// Role of a generator in the rough grading: Q = (q, xi), P = (p, eta),
/// Theta = the self-conjugate odd generator theta.
enum class GeneratorRole { None, Q, P, Theta };

struct Generator {
    bool odd = false;
    std::size_t index = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Named even and odd generators of a supercommutative polynomial algebra.
///
/// Odd generators are ordered by declaration; that order is the canonical
/// order of the odd part of every monomial.
class GeneratorSet {
public:
    struct Spec {
        std::vector<std::string> even;
        std::vector<std::string> odd;
        std::vector<bool> laurent;  ///< per even generator; empty = none
        std::vector<GeneratorRole> even_roles;
        std::vector<GeneratorRole> odd_roles;
    };

    static std::shared_ptr<const GeneratorSet> make(Spec spec);
    /// Even generators only, no roles.
    static std::shared_ptr<const GeneratorSet> make(std::vector<std::string> even, std::vector<std::string> odd);

    std::size_t even_count() const { return spec_.even.size(); }
    std::size_t odd_count() const { return spec_.odd.size(); }
    const std::string& even_name(std::size_t i) const { return spec_.even.at(i); }
    const std::string& odd_name(std::size_t i) const { return spec_.odd.at(i); }
    const std::string& name(Generator g) const { return g.odd ? odd_name(g.index) : even_name(g.index); }
    bool is_laurent(std::size_t even_index) const;
    GeneratorRole role(Generator g) const;

    std::optional<Generator> find(std::string_view name) const;
    Generator at(std::string_view name) const;

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b);

private:
    explicit GeneratorSet(Spec spec) : spec_(std::move(spec)) {}
    Spec spec_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

/// Exponent data of a monomial. Odd exponents are a bit mask (xi^2 = 0 is
/// structural). Ordering is (total degree, then exponents lexicographically
/// with larger exponents of earlier generators first).
struct Monomial {
    std::vector<int> even;
    std::uint64_t odd = 0;

    int total_degree() const;
    int odd_count() const;
    int parity() const { return odd_count() & 1; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b);
};

/// Sign of moving odd factors into canonical order when multiplying a
/// monomial with odd mask `left` by one with odd mask `right`; 0 if they share
/// an odd generator.
int odd_merge_sign(std::uint64_t left, std::uint64_t right);

/// Product of two monomials; coefficient is the Koszul sign (0 when an odd
/// generator repeats).
std::pair<Monomial, int> multiply_monomials(const Monomial& a, const Monomial& b);

/// Finite Scalar combination of monomials over a fixed generator set.
class SuperPolynomial {
public:
    using Terms = std::map<Monomial, Scalar>;

    explicit SuperPolynomial(GeneratorSetPtr gens);
    SuperPolynomial(GeneratorSetPtr gens, Terms terms);

    static SuperPolynomial constant(GeneratorSetPtr gens, const Scalar& c);
    static SuperPolynomial generator(GeneratorSetPtr gens, std::string_view name);
    static SuperPolynomial monomial(GeneratorSetPtr gens, Monomial m, const Scalar& c = 1);
    /// Parses the textual form produced by str(); any polynomial expression in
    /// the generator names, rationals, r2, i, + - * / ^ and parentheses.
    static SuperPolynomial parse(GeneratorSetPtr gens, std::string_view text);

    const GeneratorSetPtr& generators() const { return gens_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Monomial& m) const;
    Scalar constant_term() const;

    /// Parity when every term has the same parity; nullopt otherwise (and for zero).
    std::optional<int> parity() const;
    SuperPolynomial parity_part(int parity) const;

    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    SuperPolynomial& operator*=(const Scalar& s);
    SuperPolynomial operator-() const;

    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(SuperPolynomial a, const Scalar& s) { return a *= s; }
    friend SuperPolynomial operator*(const Scalar& s, SuperPolynomial a) { return a *= s; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);
    friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) { return !(a == b); }

    std::string str() const;

private:
    void add_term(const Monomial& m, const Scalar& c);

    GeneratorSetPtr gens_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const SuperPolynomial& p);

SuperPolynomial multiply(const SuperPolynomial& f, const SuperPolynomial& g);

/// Formal derivative; left derivative for odd generators.
SuperPolynomial partial_derivative(const SuperPolynomial& f, Generator x);
SuperPolynomial partial_derivative(const SuperPolynomial& f, std::string_view name);

/// deg f - 2 with every generator of degree 1.
int degree_standard(const SuperPolynomial& f);

enum class OddDimParity { Even, Odd };

/// Rough Lie degree: deg Q = 0, deg theta = 1, deg P = 1 (m even) or 2
/// (m odd), shifted so constants sit in the lowest degree.
int degree_rough(const SuperPolynomial& f, OddDimParity m_parity);

/// Term rendering of a single monomial, e.g. "q1^2*xi1*eta2"; "1" for the unit.
std::string monomial_str(const GeneratorSet& gens, const Monomial& m);

/// Algebra homomorphism determined by images of the generators (even images
/// must be even, odd images odd) into the algebra over `target`.
SuperPolynomial substitute(const SuperPolynomial& f, const GeneratorSetPtr& target,
                           const std::vector<SuperPolynomial>& even_images,
                           const std::vector<SuperPolynomial>& odd_images);

void require_same_generators(const GeneratorSetPtr& a, const GeneratorSetPtr& b);

}  // namespace howe
