#pragma once

#include <functional>
#include <string>
#include <vector>

#include "howe/operator.hpp"

namespace howe {

/// Monomials over `gens` of total degree d (even exponents plus odd count).
std::vector<Monomial> monomials_of_degree(const GeneratorSet& gens, int d);

/// Per-degree list of subspace bases inside C[x | xi].
struct GradedDecomposition {
    GeneratorSetPtr space;
    std::vector<int> degrees;
    std::vector<std::vector<SuperPolynomial>> components;

    std::size_t dimension(int degree) const;
};

/// Exact basis of {v in span(vectors) : op(v) = 0 for every op}. All vectors
/// live over the same generator set.
std::vector<SuperPolynomial> joint_kernel(const std::vector<NormalOrderedOperator>& ops,
                                          const std::vector<SuperPolynomial>& vectors);

/// h-primitive elements: joint kernels of grade-lowering operators, per
/// degree 0..max_degree. Throws StructuralError if some operator term does
/// not lower the total degree.
GradedDecomposition h_primitives(const std::vector<NormalOrderedOperator>& negative_ops, const GeneratorSetPtr& space,
                                 int max_degree);

/// Rank of a family of polynomials.
std::size_t polynomial_rank(const std::vector<SuperPolynomial>& v);

struct SL2Triple {
    GeneratorSetPtr space;
    NormalOrderedOperator xplus, xminus, h;
    /// [H, X+] = 2X+, [H, X-] = -2X-, H = [X+, X-].
    bool relations_hold() const;
};

/// On Lambda(xi1..xin, eta1..etan): X+ = multiplication by omega = sum xi_i eta_i,
/// X- = sum d/deta_i d/dxi_i (so X-(omega) = n). H acts on Lambda^i as (i - n).
SL2Triple lefschetz_triple(int n);

/// P^i = ker X- in Lambda^i.
std::vector<SuperPolynomial> primitive_forms(int n, int i);

/// On C[x1..xd]: X+ = (sum x_j^2)/2, X- = -(sum d^2/dx_j^2)/2, H = Euler + d/2.
SL2Triple harmonic_triple(int d);

/// P^i = ker Laplacian in S^i.
std::vector<SuperPolynomial> spherical_harmonics(int d, int i);

/// Result of checking V_i = sum_j X+^j P^{i-2j} for one degree i.
struct DecompositionCheck {
    int degree = 0;
    std::size_t ambient_dimension = 0;
    std::vector<std::size_t> piece_dimensions;  ///< dim X+^j P^{i-2j}, j = 0, 1, ...
    std::size_t span_rank = 0;
    /// Pieces independent and spanning.
    bool direct_sum = false;
};

/// Checks the Lefschetz / harmonic splitting of degree i, with `primitive(k)`
/// giving the primitive basis of degree k.
DecompositionCheck check_decomposition(const SL2Triple& t, int degree,
                                       const std::function<std::vector<SuperPolynomial>(int)>& primitive);

/// Even derivations sum A_ab x_a d/dx_b (x over all generators, parity
/// preserving) commuting with every operator in `ops`.
std::vector<NormalOrderedOperator> commuting_derivations(const GeneratorSetPtr& space,
                                                         const std::vector<NormalOrderedOperator>& ops);

using LinearMap = std::function<SuperPolynomial(const SuperPolynomial&)>;

/// Dimension of the algebra of linear maps on span(basis) commuting with
/// every map in `gamma`, each of which must preserve the span. Equal to 1 iff
/// the span is irreducible (Schur, over an algebraically closed field).
std::size_t commutant_dimension(const std::vector<LinearMap>& gamma, const std::vector<SuperPolynomial>& basis);

/// The substitution x -> -x for one even generator (a reflection).
LinearMap reflection(const GeneratorSetPtr& space, std::string_view name);

}  // namespace howe
