#pragma once

#include <string>
#include <vector>

#include "howe/supermatrix.hpp"

namespace howe {

/// A pair g1(V1) + g2(V2) inside the form algebra of V1 (x) V2.
struct DualPairRow {
    std::string id;
    std::string g1, g2, ambient;  ///< display names
    FormEquippedSpace v1, v2;
    /// Ambient cut down to supertrace zero (spe instead of pe).
    bool traceless = false;
};

/// Rows checked at minimal parameters: "sp2-sp2-o4" (sp(2) + sp(2) in o(4)),
/// "o3-osp12" (o(3) + osp(1|2) in osp(3|6)), "sp2-pe3" (sp(2) + pe(3) in
/// pe(6)), "osp22-pe2" (osp(2|2) + pe(2) in spe(8)).
std::vector<std::string> dual_pair_row_ids();
DualPairRow dual_pair_row(const std::string& id);

struct DualPairCertificate {
    std::string id, g1, g2, ambient;
    Flavor ambient_flavor = Flavor::Orthogonal;
    SuperDimension ambient_dim, g1_dim, g2_dim, centralizer_of_g1_dim, centralizer_of_g2_dim;
    bool embedded = false;              ///< g1 (x) 1 and 1 (x) g2 lie in the ambient
    bool centralizer_of_g1_is_g2 = false;
    bool centralizer_of_g2_is_g1 = false;
    bool double_centralizer = false;    ///< C(C(g1)) = g1 and C(C(g2)) = g2
    /// Elements of a centralizer outside the partner, if any.
    std::vector<std::string> extra;

    bool ok() const {
        return embedded && centralizer_of_g1_is_g2 && centralizer_of_g2_is_g1 && double_centralizer;
    }
    std::string to_json() const;
};

DualPairCertificate dual_pair_table_check(const DualPairRow& row);

}  // namespace howe
