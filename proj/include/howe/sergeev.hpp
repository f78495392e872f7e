#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "howe/supermatrix.hpp"

namespace howe {

/// Homogeneous basis of spe(4) on (4|4): diag(a, -a^t) with tr a = 0, then
/// (0 b; 0 0) with b symmetric, then (0 0; c 0) with c skew (15 | 16).
std::vector<SuperMatrix> spe4_basis();

/// True when every bracket of the list lies in its span.
bool is_closed(const std::vector<SuperMatrix>& basis);

/// c~ for a skew 4x4 matrix c: E_ij - E_ji -> E_kl - E_lk for (i j k l) an
/// even permutation of (1 2 3 4).
Matrix hodge_dual(const Matrix& c);

/// T_lambda(x + d z) = (a, b - lambda c~; c, -a^t) + lambda d 1_{4|4} for x in spe(4).
SuperMatrix sergeev_T(const SuperMatrix& x, const Scalar& d, const Scalar& lambda);

struct SergeevReport {
    Scalar lambda;
    bool spe4_closed = false;            ///< the block form closes under the bracket
    bool spe4_matches_form_algebra = false;  ///< equals the form algebra of the odd form, traceless
    /// [T x_i, T x_j] - T [x_i, x_j] is a multiple of 1 for every basis pair.
    bool representation = false;
    std::string first_failure;
    /// omega(x_i, x_j) (basis order of spe4_basis), from lambda != 0.
    std::vector<std::vector<Scalar>> cocycle;
    std::size_t cocycle_rank = 0;
    std::size_t commutant_dimension = 0;
    bool z_acts_as_lambda = false;

    std::string to_json() const;
};

/// Builds T_lambda on all basis pairs; for lambda = 0 the cocycle is left empty.
SergeevReport sergeev_report(const Scalar& lambda);

/// Sergeev cocycle omega(x, y) defined by [T_1 x, T_1 y] - T_1 [x, y] = omega 1.
Scalar sergeev_cocycle(const SuperMatrix& x, const SuperMatrix& y);

/// Checks omega([x,y],z) = omega(x,[y,z]) - (-1)^{p(x)p(y)} omega(y,[x,z]) on
/// random homogeneous x, y, z in spe(4); returns the number of failing triples.
std::size_t cocycle_identity_failures(std::size_t triples, std::uint64_t seed);

/// g = gl(V1) (x) Lambda(n) semidirect vect(0|n), V1 = (r|s), acting on
/// V = V1 (x) Lambda(n).
class CurrentAlgebra {
public:
    CurrentAlgebra(std::size_t r, std::size_t s, int n);

    /// Basis: E_ab (x) xi^A for all a, b, A, then xi^A d_j.
    std::size_t dimension() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    int parity(std::size_t k) const { return parity_[k]; }
    /// [e_i, e_j] in basis coordinates.
    std::map<std::size_t, Scalar> bracket(std::size_t i, std::size_t j) const;

    /// E_ab (x) xi^mask, or xi^mask d_j when `vect`.
    struct Element {
        bool vect = false;
        std::size_t a = 0, b = 0;
        std::uint64_t mask = 0;
        int j = 0;
    };
    const Element& element(std::size_t k) const { return elements_[k]; }

    std::size_t r() const { return r_; }
    std::size_t s() const { return s_; }
    int n() const { return n_; }
    int index_parity(std::size_t a) const { return a >= r_ ? 1 : 0; }

private:
    std::size_t index_gl(std::size_t a, std::size_t b, std::uint64_t mask) const;
    std::size_t index_vect(std::uint64_t mask, int j) const;

    std::size_t r_, s_;
    int n_;
    std::vector<Element> elements_;
    std::vector<std::string> labels_;
    std::vector<int> parity_;
};

/// Sign conventions for rho: `koszul` uses (-1)^{p(phi)p(v)} instead of
/// (-1)^{p(phi)p(psi)} on X (x) phi; `minus` keeps the leading minus on D.
struct RhoVariant {
    bool koszul = false;
    bool minus = true;
    std::string name() const;
};

/// rho(e_k) as a supermatrix on V1 (x) Lambda(n) (basis v_c (x) xi^B, even first).
std::vector<SuperMatrix> rho_images(const CurrentAlgebra& g, RhoVariant v);

struct RhoReport {
    std::size_t r = 0, s = 0;
    int n = 0;
    std::size_t dimension = 0;
    bool algebra_jacobi = false;  ///< super Jacobi of g on all basis triples
    /// Basis pairs with rho([x, y]) != [rho x, rho y], per variant (printed first).
    std::vector<std::pair<std::string, std::size_t>> failures;
    std::string homomorphic_variant;  ///< first variant with no failure ("" if none)
    std::size_t kernel_dimension = 0;
    SuperDimension commutant;

    std::string to_json() const;
};

RhoReport maximal_rho(std::size_t r, std::size_t s, int n);

}  // namespace howe
