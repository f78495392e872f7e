#include <bit>

#include "howe/errors.hpp"
#include "howe/sergeev.hpp"
#include "howe/superpoly.hpp"
#include "json.hpp"

namespace howe {

namespace {

// xi^A xi^B = sign xi^{A|B}
std::pair<std::uint64_t, int> gmul(std::uint64_t a, std::uint64_t b) { return {a | b, odd_merge_sign(a, b)}; }

// d/dxi_j xi^B (left derivative)
std::pair<std::uint64_t, int> gder(int j, std::uint64_t b) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (!(b & bit)) return {0, 0};
    return {b & ~bit, std::popcount(b & (bit - 1)) % 2 ? -1 : 1};
}

int sgn(int exponent) { return exponent % 2 ? -1 : 1; }

std::string mask_str(std::uint64_t m) {
    std::string s;
    for (int j = 0; m >> j; ++j)
        if ((m >> j) & 1) s += (s.empty() ? "xi" : "*xi") + std::to_string(j + 1);
    return s;
}

}  // namespace

CurrentAlgebra::CurrentAlgebra(std::size_t r, std::size_t s, int n) : r_(r), s_(s), n_(n) {
    if (n < 1 || n > 16) throw UnsupportedError("CurrentAlgebra needs 1 <= n <= 16");
    if (r + s == 0) throw StructuralError("V1 must be nonzero");
    const std::size_t d1 = r + s;
    const std::uint64_t masks = std::uint64_t{1} << n;
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t b = 0; b < d1; ++b)
            for (std::uint64_t m = 0; m < masks; ++m) {
                elements_.push_back({false, a, b, m, 0});
                parity_.push_back((index_parity(a) + index_parity(b) + std::popcount(m)) % 2);
                std::string x = mask_str(m);
                labels_.push_back("E" + std::to_string(a + 1) + "," + std::to_string(b + 1) + (x.empty() ? "" : "*" + x));
            }
    for (std::uint64_t m = 0; m < masks; ++m)
        for (int j = 0; j < n; ++j) {
            elements_.push_back({true, 0, 0, m, j});
            parity_.push_back((std::popcount(m) + 1) % 2);
            std::string x = mask_str(m);
            labels_.push_back((x.empty() ? "" : x + "*") + "d" + std::to_string(j + 1));
        }
}

std::size_t CurrentAlgebra::index_gl(std::size_t a, std::size_t b, std::uint64_t mask) const {
    return (a * (r_ + s_) + b) * (std::size_t{1} << n_) + mask;
}

std::size_t CurrentAlgebra::index_vect(std::uint64_t mask, int j) const {
    return (r_ + s_) * (r_ + s_) * (std::size_t{1} << n_) + mask * static_cast<std::size_t>(n_) + j;
}

std::map<std::size_t, Scalar> CurrentAlgebra::bracket(std::size_t i, std::size_t j) const {
    std::map<std::size_t, Scalar> out;
    auto add = [&out](std::size_t k, int c) {
        if (c == 0) return;
        Scalar& slot = out[k];
        slot += Scalar(c);
        if (slot.is_zero()) out.erase(k);
    };
    const Element& x = elements_[i];
    const Element& y = elements_[j];
    if (!x.vect && !y.vect) {
        const int pX = (index_parity(x.a) + index_parity(x.b)) % 2, pphi = std::popcount(x.mask) % 2;
        const int pY = (index_parity(y.a) + index_parity(y.b)) % 2, ppsi = std::popcount(y.mask) % 2;
        if (x.b == y.a) {
            auto [m, s] = gmul(x.mask, y.mask);
            add(index_gl(x.a, y.b, m), sgn(pphi * pY) * s);
        }
        if (y.b == x.a) {
            auto [m, s] = gmul(y.mask, x.mask);
            add(index_gl(y.a, x.b, m), -sgn((pX + pphi) * (pY + ppsi) + ppsi * pX) * s);
        }
    } else if (x.vect && !y.vect) {
        const int pD = parity_[i], pX = (index_parity(y.a) + index_parity(y.b)) % 2;
        auto [m1, s1] = gder(x.j, y.mask);
        if (s1) {
            auto [m2, s2] = gmul(x.mask, m1);
            add(index_gl(y.a, y.b, m2), sgn(pD * pX) * s1 * s2);
        }
    } else if (!x.vect && y.vect) {
        for (auto& [k, c] : bracket(j, i)) out[k] = c * Scalar(-sgn(parity_[i] * parity_[j]));
    } else {
        auto [m1, s1] = gder(x.j, y.mask);
        if (s1) {
            auto [m2, s2] = gmul(x.mask, m1);
            add(index_vect(m2, y.j), s1 * s2);
        }
        auto [m3, s3] = gder(y.j, x.mask);
        if (s3) {
            auto [m4, s4] = gmul(y.mask, m3);
            add(index_vect(m4, x.j), -sgn(parity_[i] * parity_[j]) * s3 * s4);
        }
    }
    return out;
}

std::string RhoVariant::name() const {
    return std::string(koszul ? "koszul-sign" : "printed-sign") + (minus ? "+minus" : "+no-minus");
}

std::vector<SuperMatrix> rho_images(const CurrentAlgebra& g, RhoVariant v) {
    const std::size_t d1 = g.r() + g.s();
    const std::uint64_t masks = std::uint64_t{1} << g.n();
    // basis v_c (x) xi^B, even vectors first
    std::vector<std::size_t> pos(d1 * masks);
    std::size_t next = 0, even = 0;
    for (int p = 0; p < 2; ++p)
        for (std::size_t c = 0; c < d1; ++c)
            for (std::uint64_t b = 0; b < masks; ++b)
                if ((g.index_parity(c) + std::popcount(b)) % 2 == p) {
                    pos[c * masks + b] = next++;
                    if (p == 0) ++even;
                }
    const std::size_t odd = next - even;
    std::vector<SuperMatrix> out;
    for (std::size_t k = 0; k < g.dimension(); ++k) {
        const auto& e = g.element(k);
        SuperMatrix m(even, odd);
        for (std::size_t c = 0; c < d1; ++c)
            for (std::uint64_t b = 0; b < masks; ++b) {
                const std::size_t col = pos[c * masks + b];
                if (!e.vect) {
                    if (e.b != c) continue;
                    auto [mm, s] = gmul(e.mask, b);
                    if (!s) continue;
                    int pphi = std::popcount(e.mask);
                    int sign = v.koszul ? sgn(pphi * g.index_parity(c)) : sgn(pphi * std::popcount(b));
                    m(pos[e.a * masks + mm], col) += Scalar(sign * s);
                } else {
                    auto [m1, s1] = gder(e.j, b);
                    if (!s1) continue;
                    auto [m2, s2] = gmul(e.mask, m1);
                    if (!s2) continue;
                    int sign = sgn(g.parity(k) * g.index_parity(c)) * (v.minus ? -1 : 1);
                    m(pos[c * masks + m2], col) += Scalar(sign * s1 * s2);
                }
            }
        out.push_back(std::move(m));
    }
    return out;
}

RhoReport maximal_rho(std::size_t r, std::size_t s, int n) {
    CurrentAlgebra g(r, s, n);
    RhoReport rep;
    rep.r = r;
    rep.s = s;
    rep.n = n;
    rep.dimension = g.dimension();
    const std::size_t N = g.dimension();
    std::vector<std::vector<std::map<std::size_t, Scalar>>> table(N, std::vector<std::map<std::size_t, Scalar>>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) table[i][j] = g.bracket(i, j);

    auto bracket_with = [&](std::size_t i, const std::map<std::size_t, Scalar>& v, bool left) {
        std::map<std::size_t, Scalar> out;
        for (const auto& [m, c] : v)
            for (const auto& [k, x] : left ? table[i][m] : table[m][i]) out[k] += c * x;
        prune(out);
        return out;
    };
    rep.algebra_jacobi = true;
    for (std::size_t i = 0; i < N && rep.algebra_jacobi; ++i)
        for (std::size_t j = 0; j < N && rep.algebra_jacobi; ++j)
            for (std::size_t k = 0; k < N; ++k) {
                // [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]
                auto lhs = bracket_with(i, table[j][k], true);
                auto rhs = bracket_with(k, table[i][j], false);
                auto third = bracket_with(j, table[i][k], true);
                Scalar sign(sgn(g.parity(i) * g.parity(j)));
                for (const auto& [m, c] : third) rhs[m] += sign * c;
                prune(rhs);
                if (lhs != rhs) {
                    rep.algebra_jacobi = false;
                    break;
                }
            }

    const RhoVariant variants[4] = {{false, true}, {true, true}, {false, false}, {true, false}};
    std::vector<SuperMatrix> chosen;
    for (const auto& v : variants) {
        auto images = rho_images(g, v);
        std::size_t failures = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                SuperMatrix lhs(images[0].even_dim(), images[0].odd_dim());
                for (const auto& [k, c] : table[i][j]) lhs += c * images[k];
                if (lhs != supercommutator(images[i], images[j])) ++failures;
            }
        rep.failures.emplace_back(v.name(), failures);
        if (failures == 0 && rep.homomorphic_variant.empty()) {
            rep.homomorphic_variant = v.name();
            chosen = images;
        }
    }
    if (chosen.empty()) chosen = rho_images(g, variants[0]);
    rep.kernel_dimension = N - span_rank(chosen);
    rep.commutant = superdimension(centralizer(chosen, gl_basis(chosen[0].even_dim(), chosen[0].odd_dim())));
    return rep;
}

std::string RhoReport::to_json() const {
    nlohmann::ordered_json j;
    j["V1"] = "(" + std::to_string(r) + "|" + std::to_string(s) + ")";
    j["n"] = n;
    j["dimension"] = dimension;
    j["algebra_jacobi"] = algebra_jacobi;
    auto f = nlohmann::ordered_json::object();
    for (const auto& [name, count] : failures) f[name] = count;
    j["failing_pairs"] = f;
    j["homomorphic_variant"] = homomorphic_variant;
    j["kernel_dimension"] = kernel_dimension;
    j["commutant"] = commutant.str();
    return j.dump(2);
}

}  // namespace howe
