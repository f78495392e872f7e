#include "howe/sergeev.hpp"

#include "howe/errors.hpp"
#include "howe/random.hpp"
#include "json.hpp"

namespace howe {

namespace {

std::map<std::size_t, Scalar> sparse(const SuperMatrix& m) {
    std::map<std::size_t, Scalar> v;
    auto flat = m.flatten();
    for (std::size_t k = 0; k < flat.size(); ++k)
        if (!flat[k].is_zero()) v.emplace(k, flat[k]);
    return v;
}

bool is_scalar_matrix(const SuperMatrix& m) {
    return m == SuperMatrix::identity(m.even_dim(), m.odd_dim()) * m(0, 0);
}

}  // namespace

std::vector<SuperMatrix> spe4_basis() {
    std::vector<SuperMatrix> out;
    auto a_type = [](const Matrix& a) {
        SuperMatrix x(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                x(i, j) = a(i, j);
                x(4 + i, 4 + j) = -a(j, i);
            }
        return x;
    };
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            Matrix a(4, 4);
            a(i, j) = 1;
            out.push_back(a_type(a));
        }
    for (std::size_t i = 0; i + 1 < 4; ++i) {
        Matrix a(4, 4);
        a(i, i) = 1;
        a(i + 1, i + 1) = -1;
        out.push_back(a_type(a));
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
            SuperMatrix x(4, 4);
            x(i, 4 + j) = 1;
            x(j, 4 + i) = 1;
            out.push_back(x);
        }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            SuperMatrix x(4, 4);
            x(4 + i, j) = 1;
            x(4 + j, i) = -1;
            out.push_back(x);
        }
    return out;
}

bool is_closed(const std::vector<SuperMatrix>& basis) {
    SpanBasis<std::size_t> span;
    for (const auto& b : basis) span.insert(sparse(b));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (!span.contains(sparse(supercommutator(basis[i], basis[j])))) return false;
    return true;
}

Matrix hodge_dual(const Matrix& c) {
    if (c.rows() != 4 || c.cols() != 4) throw StructuralError("hodge_dual needs a 4x4 matrix");
    if (c.transpose() != c * Scalar(-1)) throw StructuralError("hodge_dual needs a skew matrix");
    Matrix out(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (c(i, j).is_zero()) continue;
            std::size_t rest[2], n = 0;
            for (std::size_t k = 0; k < 4; ++k)
                if (k != i && k != j) rest[n++] = k;
            // (i j k l) with k < l: even iff the number of inversions is even
            std::size_t p[4] = {i, j, rest[0], rest[1]};
            int inversions = 0;
            for (int x = 0; x < 4; ++x)
                for (int y = x + 1; y < 4; ++y)
                    if (p[x] > p[y]) ++inversions;
            auto [k, l] = inversions % 2 == 0 ? std::pair{rest[0], rest[1]} : std::pair{rest[1], rest[0]};
            out(k, l) += c(i, j);
            out(l, k) -= c(i, j);
        }
    return out;
}

SuperMatrix sergeev_T(const SuperMatrix& x, const Scalar& d, const Scalar& lambda) {
    if (x.even_dim() != 4 || x.odd_dim() != 4) throw StructuralError("sergeev_T acts on (4|4)");
    Matrix c(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) c(i, j) = x(4 + i, j);
    Matrix ct = hodge_dual(c);
    SuperMatrix out = x;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, 4 + j) -= lambda * ct(i, j);
    return out + SuperMatrix::identity(4, 4) * (lambda * d);
}

Scalar sergeev_cocycle(const SuperMatrix& x, const SuperMatrix& y) {
    SuperMatrix d = supercommutator(sergeev_T(x, 0, 1), sergeev_T(y, 0, 1)) -
                    sergeev_T(supercommutator(x, y), 0, 1);
    if (!is_scalar_matrix(d)) throw InvariantViolation("T_1 defect is not a multiple of 1: " + d.str());
    return d(0, 0);
}

std::size_t cocycle_identity_failures(std::size_t triples, std::uint64_t seed) {
    auto basis = spe4_basis();
    RandomSource rng(seed);
    auto element = [&](int& p) {
        p = rng.uniform(0, 1);
        SuperMatrix x(4, 4);
        for (const auto& b : basis)
            if (b.parity() == p) x += Scalar(rng.rational()) * b;
        return x;
    };
    std::size_t failures = 0;
    for (std::size_t t = 0; t < triples; ++t) {
        int px, py, pz;
        SuperMatrix x = element(px), y = element(py), z = element(pz);
        Scalar sign(px * py % 2 ? -1 : 1);
        Scalar lhs = sergeev_cocycle(supercommutator(x, y), z);
        Scalar rhs = sergeev_cocycle(x, supercommutator(y, z)) -
                     sign * sergeev_cocycle(y, supercommutator(x, z));
        if (lhs != rhs) ++failures;
    }
    return failures;
}

SergeevReport sergeev_report(const Scalar& lambda) {
    SergeevReport rep;
    rep.lambda = lambda;
    auto basis = spe4_basis();
    rep.spe4_closed = is_closed(basis);
    rep.spe4_matches_form_algebra = same_span(basis, form_algebra(FormEquippedSpace::periplectic(4), true));
    std::vector<SuperMatrix> images;
    for (const auto& b : basis) images.push_back(sergeev_T(b, 0, lambda));
    rep.representation = true;
    const std::size_t n = basis.size();
    if (!lambda.is_zero()) rep.cocycle.assign(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SuperMatrix d = supercommutator(images[i], images[j]) -
                            sergeev_T(supercommutator(basis[i], basis[j]), 0, lambda);
            if (!is_scalar_matrix(d)) {
                if (rep.representation)
                    rep.first_failure = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + d.str();
                rep.representation = false;
                continue;
            }
            if (!lambda.is_zero()) rep.cocycle[i][j] = d(0, 0) / lambda;
        }
    if (!rep.cocycle.empty()) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rep.cocycle[i][j];
        rep.cocycle_rank = rank(m);
    }
    auto z = sergeev_T(SuperMatrix(4, 4), 1, lambda);
    rep.z_acts_as_lambda = z == SuperMatrix::identity(4, 4) * lambda;
    images.push_back(z);
    auto comm = centralizer(images, gl_basis(4, 4));
    rep.commutant_dimension = comm.size();
    return rep;
}

std::string SergeevReport::to_json() const {
    nlohmann::ordered_json j;
    j["lambda"] = lambda.str();
    j["spe4_closed"] = spe4_closed;
    j["spe4_matches_odd_form_algebra"] = spe4_matches_form_algebra;
    j["representation"] = representation;
    if (!first_failure.empty()) j["first_failure"] = first_failure;
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < cocycle.size(); ++a)
        for (std::size_t b = 0; b < cocycle.size(); ++b)
            if (!cocycle[a][b].is_zero()) arr.push_back({a, b, cocycle[a][b].str()});
    j["cocycle_nonzero"] = arr;
    j["cocycle_rank"] = cocycle_rank;
    j["commutant_dimension"] = commutant_dimension;
    j["z_acts_as_lambda"] = z_acts_as_lambda;
    return j.dump(2);
}

}  // namespace howe
