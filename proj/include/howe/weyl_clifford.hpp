#pragma once

#include <string>
#include <vector>

#include "howe/operator.hpp"
#include "howe/poisson.hpp"

namespace howe {

/// Fock space of a Poisson algebra in xi/eta coordinates: C[q1..qn | xi1..xir, th].
GeneratorSetPtr fock_generators(const PoissonAlgebra& alg);

/// Image of theta. Printed: hbar (th + d/dth). Balanced: sqrt(hbar/2) (th + d/dth),
/// the normalization for which [Q th, Q th] = hbar Q({th, th}).
enum class ThetaRule { Balanced, Printed };

/// QP-quantization: Q -> multiplication, P -> hbar d/dQ, th -> c (th + d/dth),
/// applied to each monomial in its normal form (Q's first). Balanced needs
/// sqrt(hbar/2) in Q(i, sqrt 2); otherwise UnsupportedError.
NormalOrderedOperator quantize(const PoissonAlgebra& alg, const SuperPolynomial& f, const Scalar& hbar = 1,
                               ThetaRule rule = ThetaRule::Balanced);

/// Square root inside Q(i, sqrt 2) of a rational, if it exists there.
std::optional<Scalar> rational_sqrt(const Scalar& x);

/// s with [Q(f), Q(g)] - hbar Q({f, g}) = s Id; throws InvariantViolation if
/// the difference is not a multiple of the identity.
Scalar quantization_defect(const PoissonAlgebra& alg, const SuperPolynomial& f, const SuperPolynomial& g,
                           const Scalar& hbar = 1, ThetaRule rule = ThetaRule::Balanced);

struct ImageDimensionReport {
    int m = 0;
    std::size_t fock_dimension = 0;
    std::size_t image_dimension = 0;
    /// m odd only: image operators failing to supercommute with each J.
    std::size_t failures_printed_j = 0;     ///< J = i(th + d/dth) as printed
    std::size_t failures_conjugate_j = 0;   ///< J = i(th - d/dth)
    std::size_t centralizer_of_j = 0;       ///< dim of {D in End(Fock) : [D, J] = 0}
};

/// Span dimension of Q(po(0|m)) acting on the Fock space.
ImageDimensionReport image_dimension(int m, const Scalar& hbar = 1);

/// Labeled Chevalley-type generating set inside a Poisson algebra. Labels
/// are "X+_i", "X-_i", "H_i" (1-based).
struct ChevalleyBasis {
    std::string type;  ///< "o(2k)", "o(2k+1)", "sp(2k)"
    PoissonAlgebra algebra;
    int rank = 0;
    std::vector<SuperPolynomial> raising, lowering, cartan;
    /// Simple roots in epsilon coordinates, fixing the expected Cartan matrix.
    std::vector<std::vector<Rational>> simple_roots;

    OspBasis as_osp_basis() const;
};

enum class OrthogonalKind { Even, Odd };

/// The printed bases for o(2k) (k >= 2) and o(2k+1) (k >= 1) inside po(0|m).
ChevalleyBasis spinor_basis_o(int k, OrthogonalKind kind);

/// X+_i = q_i p_{i+1}, X-_i = q_{i+1} p_i (i < k), X+_k = q_k^2/2,
/// X-_k = -p_k^2/2, H_i = {X+_i, X-_i} inside po(2k|0).
ChevalleyBasis symplectic_basis(int k);

struct ChevalleyCheck {
    bool ok = false;
    /// s with {X+_i, X-_i} = s H_i for every i (0 when no single s exists).
    int cartan_sign = 0;
    /// alpha_j(H'_i) with H'_i = {X+_i, X-_i}.
    std::vector<std::vector<Scalar>> measured;
    std::vector<std::vector<Scalar>> expected;
    std::string failure;
};

/// Verifies the Chevalley relations of the set under the Poisson bracket.
ChevalleyCheck check_chevalley_relations(const ChevalleyBasis& b);

struct HighestWeightReport {
    std::string algebra;
    std::vector<std::string> cartan_labels;
    /// Eigenvalues of the operator commutators [Q X+_i, Q X-_i] on the vacuum.
    std::vector<Scalar> eigenvalues;
    /// Eigenvalues of the quantized printed H_i on the vacuum (for comparison).
    std::vector<Scalar> quantized_cartan_eigenvalues;
    std::vector<std::string> raising_labels;
    std::vector<bool> raising_annihilates;

    std::string to_json() const;
};

/// Raising operators must kill the vacuum 1 (else NotHighestWeightError);
/// Cartan operators must act diagonally on it (else InvariantViolation).
HighestWeightReport highest_weight_of_vacuum(const ChevalleyBasis& b, const Scalar& hbar = 1,
                                             ThetaRule rule = ThetaRule::Balanced);

struct PrincipalReport {
    int N = 0;
    std::string ambient;
    /// X+ = sum c_i X+_i, X- = sum X-_i with c solved from the Cartan relations.
    std::vector<Scalar> coefficients;
    /// Eigenvalue of [Q X+, Q X-] on the vacuum.
    Scalar highest_weight;
    /// Vacuum eigenvalue of [Q X+_r, Q X-_r] for the last simple root.
    Scalar last_root_vacuum_eigenvalue;
    /// The value printed in the paper: N(N+1) for N odd, -N^2/2 for N even.
    Scalar printed_value;

    std::string to_json() const;
};

/// Principal sl(2) in sp(N+1) (N odd) or o(N+1) (N even) and the vacuum weight
/// of H = [X+, X-] in the oscillator/spinor representation.
PrincipalReport principal_sl2_weight(int N);

}  // namespace howe
