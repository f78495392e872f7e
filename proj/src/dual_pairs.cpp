#include "howe/dual_pairs.hpp"

#include "howe/errors.hpp"
#include "json.hpp"

namespace howe {

std::vector<std::string> dual_pair_row_ids() { return {"sp2-sp2-o4", "o3-osp12", "sp2-pe3", "osp22-pe2"}; }

DualPairRow dual_pair_row(const std::string& id) {
    using F = FormEquippedSpace;
    if (id == "sp2-sp2-o4") return {id, "sp(2)", "sp(2)", "o(4)", F::symplectic(1), F::symplectic(1), false};
    if (id == "o3-osp12") return {id, "o(3)", "osp(1|2)", "osp(3|6)", F::orthogonal(3), F::orthosymplectic(1, 1), false};
    if (id == "sp2-pe3") return {id, "sp(2)", "pe(3)", "pe(6)", F::symplectic(1), F::periplectic(3), false};
    if (id == "osp22-pe2") return {id, "osp(2|2)", "pe(2)", "spe(8)", F::orthosymplectic(2, 1), F::periplectic(2), true};
    throw StructuralError("unknown dual pair row " + id);
}

namespace {

// elements of `c` outside span(partner)
std::vector<std::string> outside(const std::vector<SuperMatrix>& c, const std::vector<SuperMatrix>& partner) {
    std::vector<std::string> out;
    std::vector<SuperMatrix> acc = partner;
    std::size_t r = span_rank(acc);
    for (const auto& x : c) {
        acc.push_back(x);
        std::size_t r2 = span_rank(acc);
        if (r2 > r) out.push_back(x.str());
        r = r2;
    }
    return out;
}

}  // namespace

DualPairCertificate dual_pair_table_check(const DualPairRow& row) {
    DualPairCertificate c;
    c.id = row.id;
    c.g1 = row.g1;
    c.g2 = row.g2;
    c.ambient = row.ambient;
    TensorLayout t(row.v1.r, row.v1.s, row.v2.r, row.v2.s);
    FormEquippedSpace form = tensor_form(row.v1, row.v2);
    c.ambient_flavor = form.flavor;
    auto ambient = form_algebra(form, row.traceless);
    std::vector<SuperMatrix> g1, g2;
    for (const auto& x : form_algebra(row.v1)) g1.push_back(tensor_left(t, x));
    for (const auto& y : form_algebra(row.v2)) g2.push_back(tensor_right(t, y));
    c.ambient_dim = superdimension(ambient);
    c.g1_dim = superdimension(g1);
    c.g2_dim = superdimension(g2);

    std::vector<SuperMatrix> all = ambient;
    all.insert(all.end(), g1.begin(), g1.end());
    all.insert(all.end(), g2.begin(), g2.end());
    c.embedded = span_rank(all) == span_rank(ambient);

    auto c1 = centralizer(g1, ambient), c2 = centralizer(g2, ambient);
    c.centralizer_of_g1_dim = superdimension(c1);
    c.centralizer_of_g2_dim = superdimension(c2);
    c.centralizer_of_g1_is_g2 = same_span(c1, g2);
    c.centralizer_of_g2_is_g1 = same_span(c2, g1);
    c.double_centralizer = same_span(centralizer(c1, ambient), g1) && same_span(centralizer(c2, ambient), g2);
    for (auto& s : outside(c1, g2)) c.extra.push_back("C(g1): " + s);
    for (auto& s : outside(c2, g1)) c.extra.push_back("C(g2): " + s);
    return c;
}

std::string DualPairCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["row"] = id;
    j["g1"] = g1;
    j["g2"] = g2;
    j["ambient"] = ambient;
    j["ambient_form"] = flavor_name(ambient_flavor);
    j["ambient_superdimension"] = ambient_dim.str();
    j["g1_superdimension"] = g1_dim.str();
    j["g2_superdimension"] = g2_dim.str();
    j["embedded"] = embedded;
    j["centralizer_of_g1"] = centralizer_of_g1_dim.str();
    j["centralizer_of_g2"] = centralizer_of_g2_dim.str();
    j["centralizer_of_g1_is_g2"] = centralizer_of_g1_is_g2;
    j["centralizer_of_g2_is_g1"] = centralizer_of_g2_is_g1;
    j["double_centralizer"] = double_centralizer;
    j["extra"] = extra;
    j["ok"] = ok();
    return j.dump(2);
}

}  // namespace howe
