#include "howe/graded.hpp"

#include <algorithm>
#include <bit>

#include "howe/errors.hpp"
#include "howe/linalg.hpp"

namespace howe {

namespace {

void compositions(std::vector<int>& cur, std::size_t pos, int left, const std::uint64_t mask,
                  std::vector<Monomial>& out) {
    if (pos + 1 >= cur.size()) {
        if (!cur.empty()) cur[pos] = left;
        if (cur.empty() && left != 0) return;
        out.push_back(Monomial{cur, mask});
        return;
    }
    for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        compositions(cur, pos + 1, left - e, mask, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const GeneratorSet& gens, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    const std::size_t no = gens.odd_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << no); ++mask) {
        int k = std::popcount(mask);
        if (k > d) continue;
        std::vector<int> cur(gens.even_count(), 0);
        compositions(cur, 0, d - k, mask, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t GradedDecomposition::dimension(int degree) const {
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (degrees[k] == degree) return components[k].size();
    return 0;
}

std::size_t polynomial_rank(const std::vector<SuperPolynomial>& v) {
    SpanBasis<Monomial> span;
    for (const auto& p : v) span.insert(p.terms());
    return span.dimension();
}

std::vector<SuperPolynomial> joint_kernel(const std::vector<NormalOrderedOperator>& ops,
                                          const std::vector<SuperPolynomial>& vectors) {
    std::vector<SuperPolynomial> out;
    if (vectors.empty()) return out;
    std::map<std::pair<std::size_t, Monomial>, std::map<std::size_t, Scalar>> rows;
    for (std::size_t o = 0; o < ops.size(); ++o)
        for (std::size_t k = 0; k < vectors.size(); ++k) {
            auto image = apply(ops[o], vectors[k]);
            for (const auto& [m, c] : image.terms()) rows[{o, m}][k] = c;
        }
    SpanBasis<std::size_t> constraints;
    for (const auto& [key, row] : rows) constraints.insert(row);
    SpanBasis<Monomial> seen;
    for (const auto& v : nullspace(constraints, vectors.size())) {
        SuperPolynomial p(vectors[0].generators());
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) p += v[k] * vectors[k];
        if (seen.insert(p.terms())) out.push_back(std::move(p));
    }
    return out;
}

GradedDecomposition h_primitives(const std::vector<NormalOrderedOperator>& negative_ops, const GeneratorSetPtr& space,
                                 int max_degree) {
    for (const auto& op : negative_ops) {
        require_same_generators(space, op.fock());
        for (const auto& [key, c] : op.terms())
            if (key.first.total_degree() >= key.second.total_degree())
                throw StructuralError("h_primitives: operator term " + op.str() + " does not lower the degree");
    }
    GradedDecomposition g;
    g.space = space;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<SuperPolynomial> basis;
        for (const auto& m : monomials_of_degree(*space, d)) basis.push_back(SuperPolynomial::monomial(space, m));
        g.degrees.push_back(d);
        g.components.push_back(joint_kernel(negative_ops, basis));
    }
    return g;
}

bool SL2Triple::relations_hold() const {
    return h == commutator(xplus, xminus) && commutator(h, xplus) == Scalar(2) * xplus &&
           commutator(h, xminus) == Scalar(-2) * xminus;
}

SL2Triple lefschetz_triple(int n) {
    if (n < 1) throw UnsupportedError("lefschetz_triple needs n >= 1");
    std::vector<std::string> odd;
    for (int i = 1; i <= n; ++i) odd.push_back("xi" + std::to_string(i));
    for (int i = 1; i <= n; ++i) odd.push_back("eta" + std::to_string(i));
    auto gens = GeneratorSet::make({}, odd);
    SuperPolynomial omega(gens);
    NormalOrderedOperator xm(gens);
    for (int i = 1; i <= n; ++i) {
        std::string s = std::to_string(i);
        omega += SuperPolynomial::generator(gens, "xi" + s) * SuperPolynomial::generator(gens, "eta" + s);
        xm += compose(NormalOrderedOperator::derivative(gens, "eta" + s), NormalOrderedOperator::derivative(gens, "xi" + s));
    }
    auto xp = NormalOrderedOperator::multiplication(omega);
    return {gens, xp, xm, commutator(xp, xm)};
}

std::vector<SuperPolynomial> primitive_forms(int n, int i) {
    auto t = lefschetz_triple(n);
    return h_primitives({t.xminus}, t.space, i).components.back();
}

SL2Triple harmonic_triple(int d) {
    if (d < 1) throw UnsupportedError("harmonic_triple needs d >= 1");
    std::vector<std::string> even;
    for (int i = 1; i <= d; ++i) even.push_back("x" + std::to_string(i));
    auto gens = GeneratorSet::make(even, {});
    SuperPolynomial g(gens);
    NormalOrderedOperator lap(gens);
    for (const auto& x : even) {
        auto v = SuperPolynomial::generator(gens, x);
        g += v * v;
        auto dx = NormalOrderedOperator::derivative(gens, x);
        lap += compose(dx, dx);
    }
    auto xp = NormalOrderedOperator::multiplication(g) * Scalar::frac(1, 2);
    auto xm = lap * Scalar::frac(-1, 2);
    return {gens, xp, xm, commutator(xp, xm)};
}

std::vector<SuperPolynomial> spherical_harmonics(int d, int i) {
    auto t = harmonic_triple(d);
    return h_primitives({t.xminus}, t.space, i).components.back();
}

DecompositionCheck check_decomposition(const SL2Triple& t, int degree,
                                       const std::function<std::vector<SuperPolynomial>(int)>& primitive) {
    DecompositionCheck c;
    c.degree = degree;
    c.ambient_dimension = monomials_of_degree(*t.space, degree).size();
    std::vector<SuperPolynomial> all;
    for (int j = 0; degree - 2 * j >= 0; ++j) {
        std::vector<SuperPolynomial> piece;
        for (auto v : primitive(degree - 2 * j)) {
            for (int k = 0; k < j; ++k) v = apply(t.xplus, v);
            piece.push_back(std::move(v));
        }
        c.piece_dimensions.push_back(polynomial_rank(piece));
        all.insert(all.end(), piece.begin(), piece.end());
    }
    c.span_rank = polynomial_rank(all);
    std::size_t sum = 0;
    for (auto d : c.piece_dimensions) sum += d;
    c.direct_sum = sum == c.span_rank && c.span_rank == c.ambient_dimension;
    return c;
}

std::vector<NormalOrderedOperator> commuting_derivations(const GeneratorSetPtr& space,
                                                         const std::vector<NormalOrderedOperator>& ops) {
    std::vector<std::pair<Generator, Generator>> pairs;
    for (int odd = 0; odd < 2; ++odd) {
        std::size_t count = odd ? space->odd_count() : space->even_count();
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = 0; b < count; ++b) pairs.push_back({Generator{bool(odd), a}, Generator{bool(odd), b}});
    }
    std::vector<NormalOrderedOperator> ders;
    for (auto [a, b] : pairs)
        ders.push_back(compose(NormalOrderedOperator::multiplication(SuperPolynomial::generator(space, space->name(a))),
                               NormalOrderedOperator::derivative(space, space->name(b))));
    std::map<std::pair<std::size_t, NormalOrderedOperator::Key>, std::map<std::size_t, Scalar>> rows;
    for (std::size_t o = 0; o < ops.size(); ++o)
        for (std::size_t k = 0; k < ders.size(); ++k) {
            auto br = commutator(ders[k], ops[o]);
            for (const auto& [key, c] : br.terms()) rows[{o, key}][k] = c;
        }
    SpanBasis<std::size_t> constraints;
    for (const auto& [key, row] : rows) constraints.insert(row);
    std::vector<NormalOrderedOperator> out;
    for (const auto& v : nullspace(constraints, ders.size())) {
        NormalOrderedOperator d(space);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) d += v[k] * ders[k];
        out.push_back(std::move(d));
    }
    return out;
}

std::size_t commutant_dimension(const std::vector<LinearMap>& gamma, const std::vector<SuperPolynomial>& basis) {
    const std::size_t k = basis.size();
    if (k == 0) return 0;
    std::map<Monomial, std::size_t> index;
    for (const auto& b : basis)
        for (const auto& [m, c] : b.terms()) index.try_emplace(m, index.size());
    Matrix bm(index.size(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& [m, c] : basis[j].terms()) bm(index.at(m), j) = c;
    SpanBasis<std::size_t> constraints;
    for (const auto& g : gamma) {
        Matrix mg(k, k);
        for (std::size_t j = 0; j < k; ++j) {
            auto image = g(basis[j]);
            std::vector<Scalar> rhs(index.size());
            for (const auto& [m, c] : image.terms()) {
                auto hit = index.find(m);
                if (hit == index.end()) throw StructuralError("commutant_dimension: map leaves the subspace");
                rhs[hit->second] = c;
            }
            auto x = solve(bm, rhs);
            if (!x) throw StructuralError("commutant_dimension: map leaves the subspace");
            for (std::size_t i = 0; i < k; ++i) mg(i, j) = (*x)[i];
        }
        // (C M - M C)_ij = sum_l C_il M_lj - M_il C_lj
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                std::map<std::size_t, Scalar> row;
                for (std::size_t l = 0; l < k; ++l) {
                    if (!mg(l, j).is_zero()) row[i * k + l] += mg(l, j);
                    if (!mg(i, l).is_zero()) row[l * k + j] -= mg(i, l);
                }
                prune(row);
                if (!row.empty()) constraints.insert(row);
            }
    }
    return k * k - constraints.dimension();
}

LinearMap reflection(const GeneratorSetPtr& space, std::string_view name) {
    Generator g = space->at(name);
    if (g.odd) throw UnsupportedError("reflection is defined for even generators");
    return [g](const SuperPolynomial& f) {
        SuperPolynomial out(f.generators());
        for (const auto& [m, c] : f.terms())
            out += SuperPolynomial::monomial(f.generators(), m, (m.even[g.index] % 2) ? -c : c);
        return out;
    };
}

}  // namespace howe
