#include "howe/supermatrix.hpp"

#include <algorithm>
#include <sstream>

#include "howe/errors.hpp"

namespace howe {

SuperMatrix SuperMatrix::identity(std::size_t r, std::size_t s) {
    SuperMatrix m(r, s);
    for (std::size_t i = 0; i < r + s; ++i) m(i, i) = 1;
    return m;
}

SuperMatrix SuperMatrix::unit(std::size_t r, std::size_t s, std::size_t i, std::size_t j) {
    SuperMatrix m(r, s);
    m(i, j) = 1;
    return m;
}

std::optional<int> SuperMatrix::parity() const {
    bool even = false, odd = false;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (!m_(i, j).is_zero()) (index_parity(i) == index_parity(j) ? even : odd) = true;
    if (even && odd) return std::nullopt;
    return odd ? 1 : 0;
}

SuperMatrix SuperMatrix::parity_part(int p) const {
    SuperMatrix out(r_, s_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if ((index_parity(i) ^ index_parity(j)) == p) out(i, j) = m_(i, j);
    return out;
}

Scalar SuperMatrix::supertrace() const {
    Scalar t;
    for (std::size_t i = 0; i < dim(); ++i) t += index_parity(i) ? -m_(i, i) : m_(i, i);
    return t;
}

namespace {
void require_shape(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.even_dim() != b.even_dim() || a.odd_dim() != b.odd_dim())
        throw StructuralError("supermatrices of different shapes");
}
}  // namespace

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
    require_shape(*this, o);
    m_ += o.m_;
    return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
    require_shape(*this, o);
    m_ -= o.m_;
    return *this;
}

SuperMatrix& SuperMatrix::operator*=(const Scalar& c) {
    m_ *= c;
    return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    require_shape(a, b);
    SuperMatrix out(a.r_, a.s_);
    out.m_ = a.m_ * b.m_;
    return out;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.m_ == b.m_;
}

std::vector<Scalar> SuperMatrix::flatten() const {
    std::vector<Scalar> v;
    v.reserve(dim() * dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) v.push_back(m_(i, j));
    return v;
}

std::string SuperMatrix::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (!m_(i, j).is_zero()) {
                os << (first ? "" : " ") << "(" << i + 1 << "," << j + 1 << ")=" << m_(i, j).str();
                first = false;
            }
    return first ? "0" : os.str();
}

SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b) {
    SuperMatrix out(a.even_dim(), a.odd_dim());
    for (int p = 0; p < 2; ++p) {
        SuperMatrix x = a.parity_part(p);
        if (x.is_zero()) continue;
        for (int q = 0; q < 2; ++q) {
            SuperMatrix y = b.parity_part(q);
            if (y.is_zero()) continue;
            out += x * y;
            if (p && q)
                out += y * x;
            else
                out -= y * x;
        }
    }
    return out;
}

namespace {

std::map<std::size_t, Scalar> sparse(const SuperMatrix& m) {
    std::map<std::size_t, Scalar> v;
    auto flat = m.flatten();
    for (std::size_t k = 0; k < flat.size(); ++k)
        if (!flat[k].is_zero()) v.emplace(k, flat[k]);
    return v;
}

}  // namespace

std::size_t span_rank(const std::vector<SuperMatrix>& v) {
    SpanBasis<std::size_t> span;
    for (const auto& m : v) span.insert(sparse(m));
    return span.dimension();
}

std::optional<std::vector<Scalar>> span_coordinates(const std::vector<SuperMatrix>& basis, const SuperMatrix& x) {
    if (basis.empty()) return x.is_zero() ? std::optional<std::vector<Scalar>>(std::vector<Scalar>{}) : std::nullopt;
    const std::size_t n = x.dim() * x.dim();
    Matrix a(n, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto flat = basis[k].flatten();
        for (std::size_t i = 0; i < n; ++i) a(i, k) = flat[i];
    }
    return solve(a, x.flatten());
}

bool same_span(const std::vector<SuperMatrix>& a, const std::vector<SuperMatrix>& b) {
    std::vector<SuperMatrix> both = a;
    both.insert(both.end(), b.begin(), b.end());
    std::size_t r = span_rank(both);
    return r == span_rank(a) && r == span_rank(b);
}

SuperDimension superdimension(const std::vector<SuperMatrix>& basis) {
    std::vector<SuperMatrix> ev, od;
    for (const auto& m : basis) {
        auto p = m.parity();
        if (!p) throw StructuralError("superdimension needs homogeneous elements");
        (*p ? od : ev).push_back(m);
    }
    return {span_rank(ev), span_rank(od)};
}

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Orthogonal: return "orthogonal";
        case Flavor::Symplectic: return "symplectic";
        case Flavor::Orthosymplectic: return "orthosymplectic";
        case Flavor::Periplectic: return "periplectic";
    }
    return "?";
}

FormEquippedSpace FormEquippedSpace::make(std::size_t r, std::size_t s, Matrix form) {
    const std::size_t n = r + s;
    if (form.rows() != n || form.cols() != n) throw StructuralError("form matrix has the wrong size");
    auto par = [r](std::size_t i) { return i >= r ? 1 : 0; };
    FormEquippedSpace v;
    v.r = r;
    v.s = s;
    bool even = false, odd = false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!form(a, b).is_zero()) (par(a) == par(b) ? even : odd) = true;
    if (even && odd) throw StructuralError("form is not homogeneous");
    v.form_parity = odd ? 1 : 0;
    bool sym = true, skew = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Scalar swapped = (par(a) & par(b)) ? -form(b, a) : form(b, a);
            if (form(a, b) != swapped) sym = false;
            if (form(a, b) != -swapped) skew = false;
        }
    if (!sym && !skew) throw StructuralError("form is neither supersymmetric nor super-skew");
    if (rank(form) != n) throw StructuralError("form is degenerate");
    v.symmetry = sym ? 1 : -1;
    if (v.form_parity == 1)
        v.flavor = Flavor::Periplectic;
    else if (s == 0)
        v.flavor = sym ? Flavor::Orthogonal : Flavor::Symplectic;
    else if (r == 0)
        v.flavor = sym ? Flavor::Symplectic : Flavor::Orthogonal;
    else
        v.flavor = Flavor::Orthosymplectic;
    v.form = std::move(form);
    return v;
}

FormEquippedSpace FormEquippedSpace::orthogonal(std::size_t n) { return make(n, 0, Matrix::identity(n)); }

FormEquippedSpace FormEquippedSpace::symplectic(std::size_t n) {
    Matrix b(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        b(i, n + i) = 1;
        b(n + i, i) = -1;
    }
    return make(2 * n, 0, std::move(b));
}

FormEquippedSpace FormEquippedSpace::orthosymplectic(std::size_t n, std::size_t m) {
    Matrix b(n + 2 * m, n + 2 * m);
    for (std::size_t i = 0; i < n; ++i) b(i, i) = 1;
    for (std::size_t i = 0; i < m; ++i) {
        b(n + i, n + m + i) = 1;
        b(n + m + i, n + i) = -1;
    }
    return make(n, 2 * m, std::move(b));
}

FormEquippedSpace FormEquippedSpace::periplectic(std::size_t n) {
    Matrix b(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        b(i, n + i) = 1;
        b(n + i, i) = 1;
    }
    return make(n, n, std::move(b));
}

std::vector<SuperMatrix> gl_basis(std::size_t r, std::size_t s) {
    std::vector<SuperMatrix> out;
    for (int p = 0; p < 2; ++p)
        for (std::size_t i = 0; i < r + s; ++i)
            for (std::size_t j = 0; j < r + s; ++j)
                if (((i >= r) ^ (j >= r)) == p) out.push_back(SuperMatrix::unit(r, s, i, j));
    return out;
}

namespace {

// basis of {sum_k c_k basis[k] : every functional in `constraints` vanishes}
std::vector<SuperMatrix> solve_in_span(const std::vector<SuperMatrix>& basis,
                                       const SpanBasis<std::size_t>& constraints) {
    std::vector<SuperMatrix> out;
    for (const auto& v : nullspace(constraints, basis.size())) {
        SuperMatrix x(basis[0].even_dim(), basis[0].odd_dim());
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) x += v[k] * basis[k];
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace

std::vector<SuperMatrix> form_algebra(const FormEquippedSpace& v, bool traceless) {
    const std::size_t n = v.r + v.s;
    auto par = [&v](std::size_t i) { return i >= v.r ? 1 : 0; };
    std::vector<SuperMatrix> out;
    for (int p = 0; p < 2; ++p) {
        // unknowns: entries X_ij with p(i) + p(j) = p
        std::vector<std::pair<std::size_t, std::size_t>> vars;
        std::vector<SuperMatrix> units;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if ((par(i) ^ par(j)) == p) {
                    vars.emplace_back(i, j);
                    units.push_back(SuperMatrix::unit(v.r, v.s, i, j));
                }
        SpanBasis<std::size_t> constraints;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                // sum_c X_ca B_cb + (-1)^{p p(a)} sum_c B_ac X_cb
                std::map<std::size_t, Scalar> row;
                for (std::size_t k = 0; k < vars.size(); ++k) {
                    auto [i, j] = vars[k];
                    Scalar c;
                    if (j == a) c += v.form(i, b);
                    if (j == b) c += (p & par(a)) ? -v.form(a, i) : v.form(a, i);
                    if (!c.is_zero()) row.emplace(k, c);
                }
                if (!row.empty()) constraints.insert(row);
            }
        if (traceless && p == 0) {
            std::map<std::size_t, Scalar> row;
            for (std::size_t k = 0; k < vars.size(); ++k)
                if (vars[k].first == vars[k].second) row.emplace(k, par(vars[k].first) ? Scalar(-1) : Scalar(1));
            constraints.insert(row);
        }
        auto part = solve_in_span(units, constraints);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<SuperMatrix> centralizer(const std::vector<SuperMatrix>& gamma, const std::vector<SuperMatrix>& ambient) {
    std::vector<SuperMatrix> out;
    std::vector<SuperMatrix> homogeneous_gamma;
    for (const auto& g : gamma)
        for (int q = 0; q < 2; ++q) {
            auto part = g.parity_part(q);
            if (!part.is_zero()) homogeneous_gamma.push_back(std::move(part));
        }
    for (int p = 0; p < 2; ++p) {
        std::vector<SuperMatrix> basis;
        for (const auto& a : ambient) {
            auto ap = a.parity();
            if (!ap) throw StructuralError("centralizer needs a homogeneous ambient basis");
            if (*ap == p && !a.is_zero()) basis.push_back(a);
        }
        if (basis.empty()) continue;
        const std::size_t n2 = basis[0].dim() * basis[0].dim();
        SpanBasis<std::size_t> constraints;
        for (const auto& g : homogeneous_gamma) {
            std::vector<std::vector<Scalar>> cols;
            for (const auto& b : basis) cols.push_back(supercommutator(b, g).flatten());
            for (std::size_t e = 0; e < n2; ++e) {
                std::map<std::size_t, Scalar> row;
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (!cols[k][e].is_zero()) row.emplace(k, cols[k][e]);
                if (!row.empty()) constraints.insert(row);
            }
        }
        auto part = solve_in_span(basis, constraints);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

TensorLayout::TensorLayout(std::size_t r1_, std::size_t s1_, std::size_t r2_, std::size_t s2_)
    : r1(r1_), s1(s1_), r2(r2_), s2(s2_) {
    const std::size_t d1 = r1 + s1, d2 = r2 + s2;
    position.assign(d1 * d2, 0);
    std::size_t next = 0;
    for (int p = 0; p < 2; ++p)
        for (std::size_t a = 0; a < d1; ++a)
            for (std::size_t b = 0; b < d2; ++b)
                if ((parity1(a) ^ parity2(b)) == p) position[a * d2 + b] = next++;
    r = r1 * r2 + s1 * s2;
    s = r1 * s2 + s1 * r2;
}

SuperMatrix tensor_left(const TensorLayout& t, const SuperMatrix& x) {
    SuperMatrix out(t.r, t.s);
    const std::size_t d1 = t.r1 + t.s1, d2 = t.r2 + t.s2;
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t c = 0; c < d1; ++c)
            if (!x(c, a).is_zero())
                for (std::size_t b = 0; b < d2; ++b) out(t.at(c, b), t.at(a, b)) = x(c, a);
    return out;
}

SuperMatrix tensor_right(const TensorLayout& t, const SuperMatrix& y) {
    SuperMatrix out(t.r, t.s);
    const std::size_t d1 = t.r1 + t.s1, d2 = t.r2 + t.s2;
    for (int q = 0; q < 2; ++q) {
        SuperMatrix part = y.parity_part(q);
        for (std::size_t a = 0; a < d1; ++a) {
            const bool flip = q & t.parity1(a);
            for (std::size_t b = 0; b < d2; ++b)
                for (std::size_t d = 0; d < d2; ++d)
                    if (!part(d, b).is_zero()) out(t.at(a, d), t.at(a, b)) += flip ? -part(d, b) : part(d, b);
        }
    }
    return out;
}

FormEquippedSpace tensor_form(const FormEquippedSpace& x, const FormEquippedSpace& y) {
    TensorLayout t(x.r, x.s, y.r, y.s);
    const std::size_t d1 = x.r + x.s, d2 = y.r + y.s;
    Matrix b(d1 * d2, d1 * d2);
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t c = 0; c < d1; ++c) {
            if (x.form(a, c).is_zero()) continue;
            for (std::size_t u = 0; u < d2; ++u)
                for (std::size_t w = 0; w < d2; ++w) {
                    if (y.form(u, w).is_zero()) continue;
                    int sign = t.parity2(u) & t.parity1(c);
                    Scalar v = x.form(a, c) * y.form(u, w);
                    b(t.at(a, u), t.at(c, w)) = sign ? -v : v;
                }
        }
    return FormEquippedSpace::make(t.r, t.s, std::move(b));
}

}  // namespace howe
