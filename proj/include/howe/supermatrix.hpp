#pragma once

#include <optional>
#include <string>
#include <vector>

#include "howe/linalg.hpp"

namespace howe {

/// Square matrix on a superspace of dimension (r|s); basis vectors
/// 0..r-1 are even, r..r+s-1 odd.
class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(std::size_t r, std::size_t s) : r_(r), s_(s), m_(r + s, r + s) {}

    static SuperMatrix identity(std::size_t r, std::size_t s);
    /// Elementary matrix E_ij.
    static SuperMatrix unit(std::size_t r, std::size_t s, std::size_t i, std::size_t j);

    std::size_t even_dim() const { return r_; }
    std::size_t odd_dim() const { return s_; }
    std::size_t dim() const { return r_ + s_; }
    int index_parity(std::size_t i) const { return i >= r_ ? 1 : 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const { return m_; }

    bool is_zero() const { return m_.is_zero(); }
    /// Parity of a homogeneous matrix (0 for zero); nullopt if mixed.
    std::optional<int> parity() const;
    SuperMatrix parity_part(int p) const;
    Scalar supertrace() const;

    SuperMatrix& operator+=(const SuperMatrix& o);
    SuperMatrix& operator-=(const SuperMatrix& o);
    SuperMatrix& operator*=(const Scalar& c);
    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(SuperMatrix a, const Scalar& c) { return a *= c; }
    friend SuperMatrix operator*(const Scalar& c, SuperMatrix a) { return a *= c; }
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);
    friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

    /// Entries flattened row-major, for span computations.
    std::vector<Scalar> flatten() const;
    /// Nonzero entries as "(i,j)=c" list.
    std::string str() const;

private:
    std::size_t r_ = 0, s_ = 0;
    Matrix m_;
};

/// AB - (-1)^{p(A)p(B)} BA, bilinear over parity parts.
SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b);

/// Rank of a list of matrices as vectors.
std::size_t span_rank(const std::vector<SuperMatrix>& v);

/// Coordinates of x in the span of `basis` (same shape), if it lies there.
std::optional<std::vector<Scalar>> span_coordinates(const std::vector<SuperMatrix>& basis, const SuperMatrix& x);

/// True when both lists span the same subspace.
bool same_span(const std::vector<SuperMatrix>& a, const std::vector<SuperMatrix>& b);

/// Counts of even and odd elements in a homogeneous list.
struct SuperDimension {
    std::size_t even = 0, odd = 0;
    friend bool operator==(const SuperDimension&, const SuperDimension&) = default;
    std::string str() const { return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")"; }
};
SuperDimension superdimension(const std::vector<SuperMatrix>& homogeneous_basis);

enum class Flavor { Orthogonal, Symplectic, Orthosymplectic, Periplectic };
std::string flavor_name(Flavor f);

/// Superspace (r|s) with a nondegenerate bilinear form B (matrix B_ab = B(e_a, e_b)).
struct FormEquippedSpace {
    std::size_t r = 0, s = 0;
    Matrix form;
    int form_parity = 0;
    /// +1: B(u,v) = (-1)^{p(u)p(v)} B(v,u); -1: the opposite sign.
    int symmetry = 1;
    Flavor flavor = Flavor::Orthogonal;

    /// Validates homogeneity, symmetry and nondegeneracy; classifies the flavor.
    static FormEquippedSpace make(std::size_t r, std::size_t s, Matrix form);

    /// Standard forms: o(n), sp(2n), osp(n|2m) and pe(n) on (n|n).
    static FormEquippedSpace orthogonal(std::size_t n);
    static FormEquippedSpace symplectic(std::size_t n);
    static FormEquippedSpace orthosymplectic(std::size_t n, std::size_t m);
    static FormEquippedSpace periplectic(std::size_t n);
};

/// Homogeneous basis of {X : B(Xu, v) + (-1)^{p(X)p(u)} B(u, Xv) = 0}; with
/// `traceless` also str X = 0 (e.g. spe from pe).
std::vector<SuperMatrix> form_algebra(const FormEquippedSpace& v, bool traceless = false);

/// Homogeneous basis of gl(r|s).
std::vector<SuperMatrix> gl_basis(std::size_t r, std::size_t s);

/// Homogeneous basis of {x in span(ambient) : [x, g] = 0 for all g in gamma}.
/// `ambient` must be a homogeneous list.
std::vector<SuperMatrix> centralizer(const std::vector<SuperMatrix>& gamma, const std::vector<SuperMatrix>& ambient);

/// Tensor product V1 (x) V2, reordered so even basis vectors come first.
struct TensorLayout {
    std::size_t r1, s1, r2, s2;
    std::size_t r = 0, s = 0;
    /// position[a * dim2 + b] = index of e_a (x) f_b in the reordered basis.
    std::vector<std::size_t> position;

    TensorLayout(std::size_t r1, std::size_t s1, std::size_t r2, std::size_t s2);
    std::size_t at(std::size_t a, std::size_t b) const { return position[a * (r2 + s2) + b]; }
    int parity1(std::size_t a) const { return a >= r1 ? 1 : 0; }
    int parity2(std::size_t b) const { return b >= r2 ? 1 : 0; }
};

/// X (x) 1 and 1 (x) Y with the Koszul sign (1 (x) Y)(u (x) w) = (-1)^{p(Y)p(u)} u (x) Yw.
SuperMatrix tensor_left(const TensorLayout& t, const SuperMatrix& x);
SuperMatrix tensor_right(const TensorLayout& t, const SuperMatrix& y);

/// (B1 (x) B2)(u1 (x) u2, v1 (x) v2) = (-1)^{p(u2)p(v1)} B1(u1, v1) B2(u2, v2).
/// Both X (x) 1 and 1 (x) Y preserve it when X, Y preserve B1, B2.
FormEquippedSpace tensor_form(const FormEquippedSpace& a, const FormEquippedSpace& b);

}  // namespace howe
