#include "howe/closure.hpp"

#include "howe/errors.hpp"
#include "howe/linalg.hpp"
#include "howe/random.hpp"
#include "json.hpp"

namespace howe {

std::string LieClosure::superdimension() const {
    return "(" + std::to_string(even.size()) + "|" + std::to_string(odd.size()) + ")";
}

namespace {

using Key = NormalOrderedOperator::Key;

NormalOrderedOperator from_vector(const GeneratorSetPtr& fock, const std::map<Key, Scalar>& v) {
    NormalOrderedOperator op(fock);
    for (const auto& [k, c] : v) op.add_term(k.first, k.second, c);
    return op;
}

std::vector<NormalOrderedOperator> rows_as_operators(const GeneratorSetPtr& fock, const SpanBasis<Key>& span) {
    std::vector<NormalOrderedOperator> out;
    for (const auto& [pivot, row] : span.rows()) out.push_back(from_vector(fock, row));
    return out;
}

}  // namespace

LieClosure lie_closure(const std::vector<NormalOrderedOperator>& generators, std::size_t max_dimension) {
    LieClosure out;
    if (generators.empty()) return out;
    const auto& fock = generators[0].fock();
    SpanBasis<Key> span[2];
    std::vector<std::pair<NormalOrderedOperator, int>> all;
    auto add = [&](const NormalOrderedOperator& op, int p) {
        if (op.is_zero() || !span[p].insert(op.terms())) return true;
        all.emplace_back(op, p);
        return span[0].dimension() + span[1].dimension() <= max_dimension;
    };
    for (const auto& g : generators)
        for (int p = 0; p < 2; ++p)
            if (!add(g.parity_part(p), p)) out.truncated = true;
    for (std::size_t j = 0; j < all.size() && !out.truncated; ++j)
        for (std::size_t i = 0; i <= j && !out.truncated; ++i) {
            auto br = commutator(all[i].first, all[j].first);
            if (!add(br, all[i].second ^ all[j].second)) {
                out.truncated = true;
                out.overflow = "[" + all[i].first.str() + ", " + all[j].first.str() + "] = " + br.str();
            }
        }
    out.even = rows_as_operators(fock, span[0]);
    out.odd = rows_as_operators(fock, span[1]);
    return out;
}

std::optional<Scalar> proportionality(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
    if (b.is_zero()) return a.is_zero() ? std::optional<Scalar>(Scalar()) : std::nullopt;
    const auto& [k, c] = *b.terms().begin();
    auto hit = a.terms().find(k);
    Scalar ratio = hit == a.terms().end() ? Scalar() : hit->second / c;
    if (a == b * ratio) return ratio;
    return std::nullopt;
}

namespace {

Relation relation(std::string lhs, const NormalOrderedOperator& value, std::string rhs,
                  const NormalOrderedOperator& target) {
    return {std::move(lhs), std::move(rhs), proportionality(value, target)};
}

nlohmann::ordered_json relations_json(const std::vector<Relation>& rs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rs)
        arr.push_back({{"bracket", r.lhs},
                       {"target", r.rhs},
                       {"coefficient", r.coefficient ? nlohmann::ordered_json(r.coefficient->str()) : nullptr}});
    return arr;
}

}  // namespace

BernsteinReport bernstein_osp12(int n, const Scalar& hbar) {
    if (n < 1) throw UnsupportedError("bernstein_osp12 needs n >= 1");
    std::vector<std::string> even, odd;
    for (int i = 1; i <= n; ++i) even.push_back("q" + std::to_string(i));
    for (int i = 1; i <= n; ++i) even.push_back("p" + std::to_string(i));
    for (int i = 1; i <= n; ++i) odd.push_back("dq" + std::to_string(i));
    for (int i = 1; i <= n; ++i) odd.push_back("dp" + std::to_string(i));
    BernsteinReport r;
    r.n = n;
    r.hbar = hbar;
    r.space = GeneratorSet::make(even, odd);
    const auto& F = r.space;
    auto gen = [&F](const std::string& s) { return SuperPolynomial::generator(F, s); };
    auto mult = [](const SuperPolynomial& f) { return NormalOrderedOperator::multiplication(f); };
    auto der = [&F](const std::string& s) { return NormalOrderedOperator::derivative(F, s); };

    SuperPolynomial omega(F), alpha(F);
    NormalOrderedOperator xm(F), d(F);
    for (int i = 1; i <= n; ++i) {
        std::string s = std::to_string(i);
        omega += gen("dp" + s) * gen("dq" + s);
        alpha += gen("p" + s) * gen("dq" + s);
        xm += compose(der("dq" + s), der("dp" + s));
        d += compose(mult(gen("dq" + s)), der("q" + s)) + compose(mult(gen("dp" + s)), der("p" + s));
    }
    r.xplus = mult(omega);
    r.xminus = xm;
    r.h = commutator(r.xplus, r.xminus);
    r.dplus = d + mult(alpha * hbar);
    r.dminus = commutator(r.xminus, r.dplus);
    r.degenerate = commutator(r.dplus, r.dplus).is_zero();

    const NormalOrderedOperator zero(F);
    r.relations = {
        relation("[X+,X-]", r.h, "H", r.h),
        relation("[H,X+]", commutator(r.h, r.xplus), "X+", r.xplus),
        relation("[H,X-]", commutator(r.h, r.xminus), "X-", r.xminus),
        relation("[H,D+]", commutator(r.h, r.dplus), "D+", r.dplus),
        relation("[H,D-]", commutator(r.h, r.dminus), "D-", r.dminus),
        relation("[X-,D+]", commutator(r.xminus, r.dplus), "D-", r.dminus),
        relation("[X+,D-]", commutator(r.xplus, r.dminus), "D+", r.dplus),
        relation("[X+,D+]", commutator(r.xplus, r.dplus), "0", zero),
        relation("[X-,D-]", commutator(r.xminus, r.dminus), "0", zero),
        relation("[D+,D+]", commutator(r.dplus, r.dplus), "X+", r.xplus),
        relation("[D-,D-]", commutator(r.dminus, r.dminus), "X-", r.xminus),
        relation("[D+,D-]", commutator(r.dplus, r.dminus), "H", r.h),
    };
    r.closure = lie_closure({r.xplus, r.xminus, r.dplus, r.dminus}, 40);
    bool ok = !r.degenerate && r.closure.even_dim() == 3 && r.closure.odd_dim() == 2 && !r.closure.truncated;
    for (const auto& rel : r.relations)
        if (!rel.coefficient || (rel.rhs != "0" && rel.coefficient->is_zero())) ok = false;
    r.is_osp12 = ok;
    return r;
}

std::string BernsteinReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["hbar"] = hbar.str();
    j["degenerate"] = degenerate;
    j["closure_superdimension"] = closure.superdimension();
    j["closure_truncated"] = closure.truncated;
    j["relations"] = relations_json(relations);
    j["is_osp_1_2"] = is_osp12;
    j["operators"] = {{"X+", xplus.str()}, {"X-", xminus.str()}, {"H", h.str()}, {"D+", dplus.str()},
                      {"D-", dminus.str()}};
    return j.dump(2);
}

namespace {

// left multiplication by i and j on H = span(1, i, j, k), block diagonal on H^n
std::pair<Matrix, Matrix> quaternion_units(int n) {
    const std::size_t N = 4 * static_cast<std::size_t>(n);
    Matrix I(N, N), J(N, N);
    for (std::size_t b = 0; b < N; b += 4) {
        // I: 1 -> i, i -> -1, j -> k, k -> -j  (columns are images)
        I(b + 1, b + 0) = 1;
        I(b + 0, b + 1) = -1;
        I(b + 3, b + 2) = 1;
        I(b + 2, b + 3) = -1;
        // J: 1 -> j, i -> -k, j -> -1, k -> i
        J(b + 2, b + 0) = 1;
        J(b + 3, b + 1) = -1;
        J(b + 0, b + 2) = -1;
        J(b + 1, b + 3) = 1;
    }
    return {I, J};
}

// ad-matrices in the coordinates of the reduced rows spanning `basis`
std::vector<Matrix> adjoint_matrices(const std::vector<NormalOrderedOperator>& basis) {
    if (basis.empty()) return {};
    SpanBasis<Key> span;
    for (const auto& b : basis) span.insert(b.terms());
    auto rows = rows_as_operators(basis[0].fock(), span);
    std::map<Key, std::size_t> pos;
    for (const auto& [pivot, row] : span.rows()) pos.emplace(pivot, pos.size());
    std::vector<Matrix> ads;
    for (const auto& x : rows) {
        Matrix ad(rows.size(), rows.size());
        for (std::size_t j = 0; j < rows.size(); ++j) {
            auto c = span.coordinates(commutator(x, rows[j]).terms());
            if (!c) throw InvariantViolation("closure basis is not closed under the bracket");
            for (const auto& [pivot, v] : *c) ad(pos.at(pivot), j) = v;
        }
        ads.push_back(std::move(ad));
    }
    return ads;
}

Scalar trace(const Matrix& m) {
    Scalar t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace

HyperKahlerReport hyperkahler_actions(int n, const std::vector<Scalar>& hbar) {
    if (n < 1) throw UnsupportedError("hyperkahler_actions needs n >= 1");
    if (hbar.size() != 2 && hbar.size() != 3) throw UnsupportedError("hyperkahler_actions uses 2 or 3 Kahler forms");
    const std::size_t N = 4 * static_cast<std::size_t>(n);
    HyperKahlerReport r;
    r.n = n;
    r.hbar = hbar;
    std::vector<std::string> even, odd;
    for (std::size_t a = 1; a <= N; ++a) {
        even.push_back("x" + std::to_string(a));
        odd.push_back("dx" + std::to_string(a));
    }
    r.space = GeneratorSet::make(even, odd);
    const auto& F = r.space;

    auto [I, J] = quaternion_units(n);
    Matrix minus_one = Matrix::identity(N) * Scalar(-1);
    r.quaternion_relations = I * I == minus_one && J * J == minus_one && I * J == (J * I) * Scalar(-1);

    auto gx = [&F](std::size_t a) { return SuperPolynomial::generator(F, "x" + std::to_string(a + 1)); };
    auto gdx = [&F](std::size_t a) { return SuperPolynomial::generator(F, "dx" + std::to_string(a + 1)); };
    auto ddx = [&F](std::size_t a) { return NormalOrderedOperator::derivative(F, "dx" + std::to_string(a + 1)); };
    NormalOrderedOperator d(F);
    for (std::size_t a = 0; a < N; ++a)
        d += compose(NormalOrderedOperator::multiplication(gdx(a)), NormalOrderedOperator::derivative(F, even[a]));

    r.forms_nondegenerate = true;
    r.triples_ok = true;
    const Matrix K = I * J;
    const Matrix* units[3] = {&I, &J, &K};
    for (std::size_t k = 0; k < hbar.size(); ++k) {
        // Omega_ab = g(U e_a, e_b) = U_ba
        Matrix omega = units[k]->transpose();
        if (rank(omega) != N) r.forms_nondegenerate = false;
        SuperPolynomial form(F), alpha(F);
        NormalOrderedOperator xm(F);
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) {
                if (omega(a, b).is_zero()) continue;
                if (a < b) {
                    form += omega(a, b) * (gdx(a) * gdx(b));
                    xm += omega(a, b) * compose(ddx(b), ddx(a));
                }
                alpha += (hbar[k] * omega(a, b) * Scalar::frac(1, 2)) * (gx(a) * gdx(b));
            }
        auto xp = NormalOrderedOperator::multiplication(form);
        // normalize X- so that [H, X+] = 2 X+
        auto scale = proportionality(commutator(commutator(xp, xm), xp), xp);
        if (!scale || scale->is_zero()) throw InvariantViolation("Kahler form does not give an sl(2)-triple");
        xm *= Scalar(2) / *scale;
        SL2Triple t{F, xp, xm, commutator(xp, xm)};
        if (!t.relations_hold()) r.triples_ok = false;
        r.xplus.push_back(xp);
        r.xminus.push_back(xm);
        r.dplus.push_back(d + NormalOrderedOperator::multiplication(alpha));
        r.dminus.push_back(commutator(xm, r.dplus.back()));
    }

    std::vector<NormalOrderedOperator> even_gens = r.xplus, super_gens = r.dplus;
    even_gens.insert(even_gens.end(), r.xminus.begin(), r.xminus.end());
    super_gens.insert(super_gens.end(), r.dminus.begin(), r.dminus.end());
    super_gens.insert(super_gens.end(), even_gens.begin(), even_gens.end());
    r.even_closure = lie_closure(even_gens, 60);
    r.super_closure = lie_closure(super_gens, 120);
    std::vector<NormalOrderedOperator> single{r.dplus[0]};
    for (const auto& xm : r.xminus) single.push_back(commutator(xm, r.dplus[0]));
    r.single_connection_closure = lie_closure(single, 120);

    const auto& basis = r.even_closure.even;
    auto ads = adjoint_matrices(basis);
    Matrix killing(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) killing(i, j) = trace(ads[i] * ads[j]);
    r.killing_rank = rank(killing);

    // rank = dim of the centralizer of a generic element
    RandomSource rng(20240611);
    r.cartan_rank = basis.size();
    for (int trial = 0; trial < 3; ++trial) {
        Matrix ad(basis.size(), basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) ad += ads[k] * Scalar(rng.uniform(-5, 5));
        r.cartan_rank = std::min(r.cartan_rank, basis.size() - rank(ad));
    }

    for (std::size_t i = 0; i <= N; ++i) {
        std::vector<SuperPolynomial> forms;
        for (const auto& m : monomials_of_degree(*F, static_cast<int>(i)))
            if (m.odd_count() == static_cast<int>(i)) forms.push_back(SuperPolynomial::monomial(F, m));
        r.primitive_dimensions.push_back(joint_kernel(r.xminus, forms).size());
    }
    return r;
}

std::string HyperKahlerReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["forms"] = hbar.size();
    auto h = nlohmann::ordered_json::array();
    for (const auto& x : hbar) h.push_back(x.str());
    j["hbar"] = h;
    j["quaternion_relations"] = quaternion_relations;
    j["forms_nondegenerate"] = forms_nondegenerate;
    j["sl2_triples"] = triples_ok;
    j["even_closure_dimension"] = even_closure.even_dim();
    j["even_closure_truncated"] = even_closure.truncated;
    j["killing_form_rank"] = killing_rank;
    j["cartan_rank"] = cartan_rank;
    j["super_closure_superdimension"] = super_closure.superdimension();
    j["super_closure_truncated"] = super_closure.truncated;
    j["single_connection_superdimension"] = single_connection_closure.superdimension();
    j["hk_primitive_dimensions"] = primitive_dimensions;
    return j.dump(2);
}

}  // namespace howe
