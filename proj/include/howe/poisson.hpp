#pragma once

#include <string>
#include <vector>

#include "howe/operator.hpp"
#include "howe/superpoly.hpp"

namespace howe {

enum class Coordinates { Theta, XiEtaTheta };

/// po(2n|m): even generators q1..qn, p1..pn; odd generators Th1..Thm
/// (Theta coordinates) or xi1..xir, eta1..etar[, th] with r = floor(m/2).
class PoissonAlgebra {
public:
    PoissonAlgebra(int n, int m, Coordinates coords);

    int n() const { return n_; }
    int m() const { return m_; }
    int r() const { return m_ / 2; }
    bool has_theta() const { return m_ % 2 == 1; }
    Coordinates coordinates() const { return coords_; }
    OddDimParity odd_parity() const { return has_theta() ? OddDimParity::Odd : OddDimParity::Even; }
    const GeneratorSetPtr& generators() const { return gens_; }

    SuperPolynomial element(std::string_view text) const { return SuperPolynomial::parse(gens_, text); }
    SuperPolynomial gen(std::string_view name) const { return SuperPolynomial::generator(gens_, name); }
    SuperPolynomial constant(const Scalar& c) const { return SuperPolynomial::constant(gens_, c); }

    /// The bracket in the form matching this algebra's coordinates.
    SuperPolynomial bracket(const SuperPolynomial& f, const SuperPolynomial& g) const;

    bool operator==(const PoissonAlgebra& o) const { return n_ == o.n_ && m_ == o.m_ && coords_ == o.coords_; }

private:
    int n_, m_;
    Coordinates coords_;
    GeneratorSetPtr gens_;
};

SuperPolynomial poisson_bracket(const PoissonAlgebra& alg, const SuperPolynomial& f, const SuperPolynomial& g);

/// Rewrites f (an element of `from`) in the coordinates of `to` (same n, m).
SuperPolynomial change_coordinates(const PoissonAlgebra& from, const SuperPolynomial& f, const PoissonAlgebra& to);

/// Labeled list of elements of a Poisson algebra.
struct OspBasis {
    std::vector<SuperPolynomial> elements;
    std::vector<std::string> labels;

    std::size_t size() const { return elements.size(); }
    /// Index of a label; throws StructuralError when absent.
    std::size_t index(const std::string& label) const;
    const SuperPolynomial& operator[](const std::string& label) const { return elements[index(label)]; }
};

/// All quadratic monomials of po(2n|m): the degree-0 part osp(m|2n).
OspBasis osp_quadratic_basis(const PoissonAlgebra& alg);

/// n(2n+1) + m(m-1)/2 + 2nm.
long long osp_dimension(int n, int m);

/// Coordinates of v in the span of the basis elements, if it lies there.
std::optional<std::vector<Scalar>> basis_coordinates(const OspBasis& basis, const SuperPolynomial& v);

/// Bracket table {b_i, b_j} = sum_k c_ijk b_k as JSON text; throws
/// InvariantViolation if some bracket leaves the span.
std::string structure_constants_json(const PoissonAlgebra& alg, const OspBasis& basis);

/// True when every pairwise bracket lies in the span of the basis.
bool is_bracket_closed(const PoissonAlgebra& alg, const OspBasis& basis);

/// H_f = (-1)^{p(f)} sum_j (df/dxi_j d/deta_j + df/deta_j d/dxi_j) acting on
/// Lambda(xi, eta); defined for n = 0, m even, xi/eta coordinates.
NormalOrderedOperator hamiltonian_quotient_field(const PoissonAlgebra& alg, const SuperPolynomial& f);

}  // namespace howe
