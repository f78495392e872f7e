#include "howe/linalg.hpp"
#include "howe/weyl_clifford.hpp"
#include "json.hpp"

namespace howe {

namespace {

std::string idx(int i) { return std::to_string(i); }

std::vector<Rational> epsilon(int rank, std::initializer_list<std::pair<int, int>> coeffs) {
    std::vector<Rational> v(static_cast<std::size_t>(rank));
    for (auto [i, c] : coeffs) v[static_cast<std::size_t>(i - 1)] = Rational(c);
    return v;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// a with {h, x} = a x, if it exists
std::optional<Scalar> eigen_coefficient(const SuperPolynomial& image, const SuperPolynomial& x) {
    if (x.is_zero()) return std::nullopt;
    const auto& [m, c] = *x.terms().begin();
    Scalar a = image.coefficient(m) / c;
    if (image == x * a) return a;
    return std::nullopt;
}

// lambda with v = lambda * 1
std::optional<Scalar> vacuum_eigenvalue(const SuperPolynomial& v) {
    Scalar c = v.constant_term();
    if (v == SuperPolynomial::constant(v.generators(), c)) return c;
    return std::nullopt;
}

nlohmann::ordered_json scalars(const std::vector<Scalar>& v) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& s : v) a.push_back(s.str());
    return a;
}

}  // namespace

OspBasis ChevalleyBasis::as_osp_basis() const {
    OspBasis b;
    for (int i = 0; i < rank; ++i) {
        b.elements.push_back(raising[i]);
        b.labels.push_back("X+_" + idx(i + 1));
        b.elements.push_back(lowering[i]);
        b.labels.push_back("X-_" + idx(i + 1));
        b.elements.push_back(cartan[i]);
        b.labels.push_back("H_" + idx(i + 1));
    }
    return b;
}

ChevalleyBasis spinor_basis_o(int k, OrthogonalKind kind) {
    const bool odd = kind == OrthogonalKind::Odd;
    if (k < (odd ? 1 : 2)) throw UnsupportedError("spinor_basis_o needs k >= 2 (o(2k)) or k >= 1 (o(2k+1))");
    ChevalleyBasis b{odd ? "o(2k+1)" : "o(2k)", PoissonAlgebra(0, odd ? 2 * k + 1 : 2 * k, Coordinates::XiEtaTheta),
                     k, {}, {}, {}, {}};
    const auto& A = b.algebra;
    for (int i = 1; i < k; ++i) {
        b.raising.push_back(A.element("xi" + idx(i + 1) + "*eta" + idx(i)));
        b.lowering.push_back(A.element("xi" + idx(i) + "*eta" + idx(i + 1)));
        b.cartan.push_back(A.element("xi" + idx(i) + "*eta" + idx(i) + "-xi" + idx(i + 1) + "*eta" + idx(i + 1)));
        b.simple_roots.push_back(epsilon(k, {{i, 1}, {i + 1, -1}}));
    }
    const std::string K = idx(k), K1 = idx(k - 1);
    if (odd) {
        b.raising.push_back(A.element("r2*eta" + K + "*th"));
        b.lowering.push_back(A.element("r2*th*xi" + K));
        b.cartan.push_back(A.element("2*xi" + K + "*eta" + K));
        b.simple_roots.push_back(epsilon(k, {{k, 1}}));
    } else {
        b.raising.push_back(A.element("eta" + K + "*eta" + K1));
        b.lowering.push_back(A.element("xi" + K1 + "*xi" + K));
        b.cartan.push_back(A.element("xi" + K1 + "*eta" + K1 + "+xi" + K + "*eta" + K));
        b.simple_roots.push_back(epsilon(k, {{k - 1, 1}, {k, 1}}));
    }
    return b;
}

ChevalleyBasis symplectic_basis(int k) {
    if (k < 1) throw UnsupportedError("symplectic_basis needs k >= 1");
    ChevalleyBasis b{"sp(2k)", PoissonAlgebra(k, 0, Coordinates::XiEtaTheta), k, {}, {}, {}, {}};
    const auto& A = b.algebra;
    for (int i = 1; i < k; ++i) {
        b.raising.push_back(A.element("q" + idx(i) + "*p" + idx(i + 1)));
        b.lowering.push_back(A.element("q" + idx(i + 1) + "*p" + idx(i)));
        b.simple_roots.push_back(epsilon(k, {{i, 1}, {i + 1, -1}}));
    }
    b.raising.push_back(A.element("q" + idx(k) + "^2/2"));
    b.lowering.push_back(A.element("-p" + idx(k) + "^2/2"));
    b.simple_roots.push_back(epsilon(k, {{k, 2}}));
    for (int i = 0; i < k; ++i) b.cartan.push_back(A.bracket(b.raising[i], b.lowering[i]));
    return b;
}

ChevalleyCheck check_chevalley_relations(const ChevalleyBasis& b) {
    ChevalleyCheck out;
    const auto& A = b.algebra;
    const auto r = static_cast<std::size_t>(b.rank);
    auto fail = [&out](std::string why) {
        out.ok = false;
        if (out.failure.empty()) out.failure = std::move(why);
    };
    out.ok = true;
    std::vector<SuperPolynomial> h;
    for (std::size_t i = 0; i < r; ++i) {
        h.push_back(A.bracket(b.raising[i], b.lowering[i]));
        int s = h[i] == b.cartan[i] ? 1 : (h[i] == -b.cartan[i] ? -1 : 0);
        if (s == 0) fail("{X+_" + idx(int(i) + 1) + ", X-_" + idx(int(i) + 1) + "} is not +-H");
        if (i == 0) out.cartan_sign = s;
        if (s != out.cartan_sign) out.cartan_sign = 0;
    }
    if (out.cartan_sign == 0) fail("no common sign between {X+_i, X-_i} and H_i");
    out.measured.assign(r, std::vector<Scalar>(r));
    out.expected.assign(r, std::vector<Scalar>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const auto& ai = b.simple_roots[i];
            const auto& aj = b.simple_roots[j];
            out.expected[i][j] = Scalar(Rational(2) * dot(ai, aj) / dot(ai, ai));
            if (i != j && !A.bracket(b.raising[i], b.lowering[j]).is_zero())
                fail("{X+_" + idx(int(i) + 1) + ", X-_" + idx(int(j) + 1) + "} != 0");
            if (!A.bracket(h[i], h[j]).is_zero()) fail("Cartan elements do not commute");
            auto up = eigen_coefficient(A.bracket(h[i], b.raising[j]), b.raising[j]);
            auto down = eigen_coefficient(A.bracket(h[i], b.lowering[j]), b.lowering[j]);
            if (!up || !down || *up != -*down) {
                fail("X+-_" + idx(int(j) + 1) + " is not a weight vector for H'_" + idx(int(i) + 1));
                continue;
            }
            out.measured[i][j] = *up;
            if (*up != out.expected[i][j]) fail("Cartan matrix entry (" + idx(int(i) + 1) + "," + idx(int(j) + 1) + ")");
        }
    return out;
}

std::string HighestWeightReport::to_json() const {
    nlohmann::ordered_json j;
    j["algebra"] = algebra;
    j["cartan"] = cartan_labels;
    j["vacuum_eigenvalues"] = scalars(eigenvalues);
    j["quantized_cartan_eigenvalues"] = scalars(quantized_cartan_eigenvalues);
    auto ann = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < raising_labels.size(); ++i) ann[raising_labels[i]] = bool(raising_annihilates[i]);
    j["raising_annihilates_vacuum"] = ann;
    return j.dump(2);
}

HighestWeightReport highest_weight_of_vacuum(const ChevalleyBasis& b, const Scalar& hbar, ThetaRule rule) {
    const auto& A = b.algebra;
    const auto fock = fock_generators(A);
    const auto vac = SuperPolynomial::constant(fock, 1);
    HighestWeightReport rep;
    rep.algebra = b.type + " k=" + idx(b.rank);
    for (int i = 0; i < b.rank; ++i) {
        std::string label = "X+_" + idx(i + 1);
        auto xp = quantize(A, b.raising[i], hbar, rule), xm = quantize(A, b.lowering[i], hbar, rule);
        auto image = apply(xp, vac);
        rep.raising_labels.push_back(label);
        rep.raising_annihilates.push_back(image.is_zero());
        if (!image.is_zero()) throw NotHighestWeightError(label, image.str());
        auto lam = vacuum_eigenvalue(apply(commutator(xp, xm), vac));
        auto lam_q = vacuum_eigenvalue(apply(quantize(A, b.cartan[i], hbar, rule), vac));
        if (!lam || !lam_q) throw InvariantViolation("H_" + idx(i + 1) + " does not act diagonally on the vacuum");
        rep.cartan_labels.push_back("H_" + idx(i + 1));
        rep.eigenvalues.push_back(*lam);
        rep.quantized_cartan_eigenvalues.push_back(*lam_q);
    }
    return rep;
}

std::string PrincipalReport::to_json() const {
    nlohmann::ordered_json j;
    j["N"] = N;
    j["ambient"] = ambient;
    j["coefficients"] = scalars(coefficients);
    j["highest_weight"] = highest_weight.str();
    j["last_root_vacuum_eigenvalue"] = last_root_vacuum_eigenvalue.str();
    j["printed_value"] = printed_value.str();
    return j.dump(2);
}

PrincipalReport principal_sl2_weight(int N) {
    if (N < 1) throw UnsupportedError("principal_sl2_weight needs N >= 1");
    ChevalleyBasis b = (N % 2) ? symplectic_basis((N + 1) / 2) : spinor_basis_o(N / 2, OrthogonalKind::Odd);
    auto check = check_chevalley_relations(b);
    if (!check.ok) throw InvariantViolation("ambient Chevalley set fails its relations: " + check.failure);
    const auto r = static_cast<std::size_t>(b.rank);
    const auto& A = b.algebra;

    // sum_i c_i alpha_j(H'_i) = 2 for every j
    Matrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) m(j, i) = check.measured[i][j];
    auto c = solve(m, std::vector<Scalar>(r, Scalar(2)));
    if (!c) throw InvariantViolation("no principal coefficients");

    SuperPolynomial xp(A.generators()), xm(A.generators());
    for (std::size_t i = 0; i < r; ++i) {
        xp += (*c)[i] * b.raising[i];
        xm += b.lowering[i];
    }
    auto h = A.bracket(xp, xm);
    if (A.bracket(h, xp) != Scalar(2) * xp || A.bracket(h, xm) != Scalar(-2) * xm)
        throw InvariantViolation("principal images do not satisfy sl(2) relations");

    const auto fock = fock_generators(A);
    const auto vac = SuperPolynomial::constant(fock, 1);
    PrincipalReport rep;
    rep.N = N;
    rep.ambient = (N % 2 ? "sp(" : "o(") + idx(N + 1) + ")";
    rep.coefficients = *c;
    auto lam = vacuum_eigenvalue(apply(commutator(quantize(A, xp), quantize(A, xm)), vac));
    auto last = vacuum_eigenvalue(
        apply(commutator(quantize(A, b.raising[r - 1]), quantize(A, b.lowering[r - 1])), vac));
    if (!lam || !last) throw InvariantViolation("vacuum is not an eigenvector of H");
    rep.highest_weight = *lam;
    rep.last_root_vacuum_eigenvalue = *last;
    rep.printed_value = (N % 2) ? Scalar(N * (N + 1)) : Scalar::frac(-N * N, 2);
    return rep;
}

}  // namespace howe
