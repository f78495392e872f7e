#pragma once

#include <optional>
#include <string>
#include <vector>

#include "howe/graded.hpp"
#include "howe/operator.hpp"

namespace howe {

/// Span of all iterated supercommutators of a set of operators.
struct LieClosure {
    std::vector<NormalOrderedOperator> even, odd;
    /// Stopped at the dimension cap before closing.
    bool truncated = false;
    /// First bracket whose result left the span once the cap was hit.
    std::string overflow;

    std::size_t even_dim() const { return even.size(); }
    std::size_t odd_dim() const { return odd.size(); }
    std::string superdimension() const;
};

/// Generators are split into parity parts first.
LieClosure lie_closure(const std::vector<NormalOrderedOperator>& generators, std::size_t max_dimension = 200);

/// c with a = c b, if a is a multiple of the nonzero operator b.
std::optional<Scalar> proportionality(const NormalOrderedOperator& a, const NormalOrderedOperator& b);

/// One checked relation [x, y] = c z.
struct Relation {
    std::string lhs, rhs;
    std::optional<Scalar> coefficient;  ///< nullopt when not proportional
};

/// Bernstein's osp(1|2) on twisted forms over the flat model C[q, p | dq, dp]:
/// X+ = omega = sum dp_i dq_i, X- = sum d/ddq_i d/ddp_i, D+ = d + alpha with
/// alpha = hbar sum p_i dq_i (so d alpha = hbar omega), D- = [X-, D+].
struct BernsteinReport {
    int n = 0;
    Scalar hbar;
    GeneratorSetPtr space;
    NormalOrderedOperator xplus, xminus, h, dplus, dminus;
    LieClosure closure;
    std::vector<Relation> relations;
    /// hbar = 0: D+ = d squares to zero and the set is not osp(1|2).
    bool degenerate = false;
    /// Closure is (3|2) and every listed relation holds with a nonzero coefficient.
    bool is_osp12 = false;

    std::string to_json() const;
};

BernsteinReport bernstein_osp12(int n, const Scalar& hbar);

/// Kahler forms omega_I, omega_J (and omega_K with three twists) of the flat
/// hyper-Kahler space H^n = C^{4n}, I, J, K acting by left multiplication;
/// X+_j = omega_j, X-_j the dual contraction, D+_j = d + alpha_j with
/// d alpha_j = hbar_j omega_j, D-_j = [X-_j, D+_j].
struct HyperKahlerReport {
    int n = 0;
    std::vector<Scalar> hbar;
    GeneratorSetPtr space;  ///< x1..x4n | dx1..dx4n
    bool quaternion_relations = false;  ///< I^2 = J^2 = -1, IJ = -JI
    bool forms_nondegenerate = false;
    std::vector<NormalOrderedOperator> xplus, xminus, dplus, dminus;
    bool triples_ok = false;  ///< each (X+_j, X-_j) is an sl(2)-triple
    LieClosure even_closure;
    /// Closure of all D+_j, D-_j (and X+-_j).
    LieClosure super_closure;
    /// Closure of D+_1 and [X-_j, D+_1] for every j: one connection only.
    LieClosure single_connection_closure;
    std::size_t killing_rank = 0;  ///< rank of the Killing form of the even closure
    std::size_t cartan_rank = 0;   ///< centralizer dimension of a regular Cartan element
    /// (HK) primitives: joint kernel of the X-_j on constant-coefficient forms, per degree.
    std::vector<std::size_t> primitive_dimensions;

    std::string to_json() const;
};

HyperKahlerReport hyperkahler_actions(int n, const std::vector<Scalar>& hbar = {1, 1});

}  // namespace howe
