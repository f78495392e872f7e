#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "howe/rational.hpp"
#include "howe/scalar.hpp"

namespace howe {

/// sum c_i e_i + c z in vir, e_i = t^{i+1} d/dt.
struct VirElement {
    std::map<long, Scalar> e;
    Scalar z;

    static VirElement basis(long i);
    static VirElement central();

    bool is_zero() const { return e.empty() && z.is_zero(); }
    VirElement& operator+=(const VirElement& o);
    VirElement& operator-=(const VirElement& o);
    VirElement& operator*=(const Scalar& c);
    friend VirElement operator+(VirElement a, const VirElement& b) { return a += b; }
    friend VirElement operator-(VirElement a, const VirElement& b) { return a -= b; }
    friend VirElement operator*(const Scalar& c, VirElement a) { return a *= c; }
    friend bool operator==(const VirElement& a, const VirElement& b) = default;
    std::string str() const;
};

/// [e_i, e_j] = (j - i) e_{i+j} - (1/12) delta_{i+j,0} (i^3 - i) z, z central.
VirElement vir_bracket(const VirElement& x, const VirElement& y);

/// F_{lambda,mu} with basis phi_j = t^{mu+j} (dt)^lambda; with `quotient`
/// (lambda = 0, mu integer) the constant phi_{-mu} is divided out (dF).
struct DensityModuleSpec {
    Rational lambda, mu;
    bool quotient = false;

    static DensityModuleSpec make(Rational lambda, Rational mu, bool quotient = false);
    bool has_index(long j) const;
    std::string name() const;
};

/// Coefficient of phi_{j+n} in e_n phi_j: mu + j + lambda (n + 1).
Rational density_coefficient(const DensityModuleSpec& f, long n, long j);

/// e_n phi_j as (index, coefficient); nullopt when it vanishes in the module.
std::optional<std::pair<long, Rational>> density_action(const DensityModuleSpec& f, long n, long j);

/// Number of (m, n, j), |m|, |n| <= max_n, |j| <= window, violating
/// e_m e_n phi_j - e_n e_m phi_j = (n - m) e_{m+n} phi_j.
std::size_t density_representation_failures(const DensityModuleSpec& f, int max_n, long window);

enum class FormSymmetry { Symmetric, Skew };

/// Invariant pairing on F_{lambda,mu}: symmetric (f, g) = int f g dt on
/// half-densities, skew (f, g) = int f dg on functions.
struct InvariantForm {
    DensityModuleSpec module;
    FormSymmetry symmetry = FormSymmetry::Symmetric;

    /// <phi_i, phi_j>: symmetric: 1 iff 2mu + i + j = -1; skew: mu + j iff 2mu + i + j = 0.
    Rational pair(long i, long j) const;
    /// i + j on the support of the pairing, -2mu - 2lambda.
    long index_sum() const;
};

/// Linear scan for invariant pairings on |i|, |j| <= window (|n| <= 3).
struct FormScan {
    long window = 0;
    std::size_t symmetric_dimension = 0, skew_dimension = 0;
    /// Some solution pairs every index at distance >= 3 from the window edge.
    bool symmetric_nondegenerate = false, skew_nondegenerate = false;
    std::string classification;
};
FormScan scan_invariant_forms(const DensityModuleSpec& f, long window = 8);

struct InvariantFormResult {
    std::optional<InvariantForm> form;
    FormScan scan;
};

/// The closed-form pairing for F_{1/2,0}, F_{1/2,1/2} (symmetric), F_{0,1/2}
/// and dF (skew); otherwise no form, with the scan's classification.
InvariantFormResult invariant_form(const DensityModuleSpec& f, long scan_window = 8);

/// Failures of <e_n u, v> + <u, e_n v> = 0 over |n| <= max_n, |i|, |j| <= window.
std::size_t form_invariance_failures(const InvariantForm& b, int max_n, long window);

/// Basis vector of W = F + F*: phi_j (dual = false) or the dual functional phi*_j.
struct Mode {
    bool dual = false;
    long index = 0;

    friend auto operator<=>(const Mode&, const Mode&) = default;
    std::string str() const;
};

enum class DoubleSign { Plus, Minus };

/// W = F + F* with B((v1,v2),(w1,w2)) = v2(w1) +- w2(v1) (F is even);
/// Plus is symmetric (Spin), Minus skew (Osc). vir acts on F* dually.
struct DoubledModule {
    DensityModuleSpec base;
    DoubleSign sign = DoubleSign::Plus;

    Rational form(Mode a, Mode b) const;
    /// e_n on a basis vector of W.
    std::optional<std::pair<Mode, Rational>> act(long n, Mode m) const;
};

DoubledModule double_module(const DensityModuleSpec& f, DoubleSign sign);

/// Failures of B(e_n u, w) + B(u, e_n w) = 0 over |n| <= max_n and modes with |index| <= window.
std::size_t double_invariance_failures(const DoubledModule& w, int max_n, long window);

enum class Statistics { Fermionic, Bosonic };

/// Finite combination of Fock basis vectors gamma(m1) ... gamma(mk) |0>
/// (modes sorted; repeated modes only for bosons).
struct FockState {
    std::map<std::vector<Mode>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<Mode>& key, const Rational& c);
    FockState& operator-=(const FockState& o);
    friend bool operator==(const FockState& a, const FockState& b) = default;
    /// c with state = c |0>, if it is a multiple of the vacuum.
    std::optional<Rational> vacuum_multiple() const;
    std::string str() const;
};

/// Quadratic realization rho(e_n) = (1/2) sum_a :gamma(e_n a) gamma(a^dual):
/// of vir on the Fock space of a polarized module with an invariant form:
/// Clifford for symmetric forms, Weyl for skew ones.
class FockRealization {
public:
    /// Half construction on F with its own form; creation modes phi_i, i < 0.
    static FockRealization half(const InvariantForm& form, long window);
    /// Doubled construction on F + F*; creation modes phi_j (j < k) and
    /// phi*_j (j >= k), k the vacuum charge.
    static FockRealization doubled(const DoubledModule& w, long vacuum_charge, long window);

    Statistics statistics() const { return statistics_; }
    long window() const { return window_; }
    long vacuum_charge() const { return vacuum_charge_; }
    bool is_doubled() const { return doubled_; }
    FockRealization with_window(long window) const;
    /// Convention record: construction, statistics, polarization.
    std::string construction() const;
    std::string polarization() const;

    bool is_creation(Mode m) const;
    FockState vacuum() const;
    /// gamma(m) for a creation mode m.
    FockState create(Mode m, const FockState& s) const;
    /// rho(e_n) s. Throws WindowError when a nonzero term touches an index
    /// outside [-window, window).
    FockState apply(long n, const FockState& s) const;

private:
    FockRealization() = default;
    bool in_module(Mode m) const;
    Rational form(Mode a, Mode b) const;
    std::optional<std::pair<Mode, Rational>> act(long n, Mode m) const;
    /// (x, s) with B(s x, m) = 1.
    std::pair<Mode, Rational> dual_of(Mode m) const;
    void validate() const;
    void gamma(Mode m, const std::vector<Mode>& key, const Rational& c, FockState& out) const;

    bool doubled_ = false;
    InvariantForm half_;
    DoubledModule double_;
    long vacuum_charge_ = 0;
    long window_ = 0;
    Statistics statistics_ = Statistics::Fermionic;
};

/// How h is read off the vacuum: E0 is the e_0 eigenvalue from
/// [e_1, e_{-1}] = -2 e_0; Bracket is the vacuum value of [e_1, e_{-1}] itself.
enum class HReadout { E0, Bracket };
std::string readout_name(HReadout r);

struct CentralChargeReport {
    Rational c, h;
    Rational bracket_1, bracket_2;  ///< vacuum values of [e_1, e_-1], [e_2, e_-2]
    HReadout readout = HReadout::E0;
    std::string construction, statistics, polarization;
    long vacuum_charge = 0;
    long window = 0;
    bool window_stable = false;  ///< identical (c, h) at window + 4

    std::string to_json() const;
};

/// (c, h) from [e_1, e_-1] |0> = -2 h |0> and [e_2, e_-2] |0> = (-4 h - c/2) |0>.
/// Throws ConventionError if e_1, e_2 do not kill the vacuum or a bracket
/// leaves the vacuum line.
CentralChargeReport central_charge(const FockRealization& r, HReadout readout = HReadout::E0);

/// osc(sqrt Vol) on F_{1/2,0}, spin(sqrt t F) on F_{0,1/2}, spin(dF), with the printed (c, h).
struct HalfConstruction {
    std::string name;
    InvariantForm form;
    Rational printed_c, printed_h;
};
std::vector<HalfConstruction> half_constructions();

/// Convention for Spin(F_{lambda,mu}) fixed at the anchor (lambda, mu) = (1, 0).
struct TableCalibration {
    long vacuum_charge = 0;
    HReadout readout = HReadout::E0;
    long window = 0;
    /// Every (readout, charge) tried, with the anchor value obtained.
    std::vector<std::string> attempts;
};

/// Tries readouts E0 then Bracket, charges 0, 1, -1, 2, -2, 3, -3, until the
/// anchor gives (c, h) = (2, 2); ConventionError if none does.
TableCalibration calibrate_table_n0(long window = 12);

struct TablePoint {
    Rational lambda, mu;
    Rational c, h;              ///< Spin(F_{lambda,mu}) under the calibration
    Rational c_osc, h_osc;      ///< Osc(F_{lambda,mu}) = Spin(Pi F) at the same polarization
    Rational c_formula, h_formula;  ///< 12 lambda^2 - 12 lambda + 2, (mu + 2 lambda)(mu + 1)
    bool window_stable = false;

    bool matches() const { return c == c_formula && h == h_formula; }
    bool osc_flips_c() const { return c_osc == -c; }
};

TablePoint table_n0(const Rational& lambda, const Rational& mu, const TableCalibration& cal);

/// The 12 verification points (the anchor excluded).
std::vector<std::pair<Rational, Rational>> table_grid();

std::string table_csv(const std::vector<TablePoint>& points);
std::string table_json(const std::vector<TablePoint>& points, const TableCalibration& cal);

}  // namespace howe
