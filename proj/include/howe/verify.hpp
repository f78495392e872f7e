#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "howe/rational.hpp"

namespace howe {

/// One expected-vs-measured comparison inside a job. Informational checks
/// are reported but never fail the job.
struct Check {
    std::string name;
    std::string expected;
    std::string measured;
    std::string provenance;
    bool ok = false;
    bool informational = false;
};

enum class JobStatus { Pass, Fail, Measured };
std::string status_name(JobStatus s);

struct JobResult {
    std::string id;
    int criterion = 0;
    std::string target;
    std::map<std::string, std::string> params;
    std::vector<Check> checks;
    /// Sign/normalization choices the numbers depend on.
    std::map<std::string, std::string> conventions;
    /// Raw JSON text with the underlying report (empty when none).
    std::string details;
    /// Extra files for the report directory (name -> content), e.g. CSV tables.
    std::map<std::string, std::string> artifacts;
    std::string error;  ///< exception text when the job threw
    double wall_ms = 0;

    JobStatus status() const;
    void check(std::string name, std::string expected, std::string measured, std::string provenance = "");
    void measure(std::string name, std::string measured, std::string note = "");
    void require(std::string name, bool ok, std::string measured = "", std::string provenance = "");
};

struct VerificationJob {
    std::string id;
    int criterion = 0;
    std::string target;
    std::map<std::string, std::string> params;
    std::function<void(JobResult&)> body;

    /// Runs the body, catching exceptions into JobResult::error.
    JobResult run() const;
};

struct VerifyOptions {
    long window = 12;
    std::vector<std::pair<Rational, Rational>> table_grid;  ///< empty: the built-in 12 points
};

/// Every job of the full verification, sorted by id.
std::vector<VerificationJob> verification_jobs(const VerifyOptions& opt = {});

// Single jobs behind the CLI subcommands.
VerificationJob bracket_job(int n, int m, bool theta_coords, const std::string& f, const std::string& g,
                            const std::string& expect);
VerificationJob quantize_job(int n, int m, const std::string& f, const Rational& hbar, bool printed_theta,
                             const std::string& expect);
VerificationJob spinor_job(int k, bool odd);
VerificationJob principal_job(int N);
VerificationJob lefschetz_job(int n);
VerificationJob harmonics_job(int d, int imax);
VerificationJob bernstein_job(int n, const Rational& hbar);
VerificationJob hyperkahler_job(int n);
VerificationJob dualpair_job(const std::string& row);
VerificationJob sergeev_job(const Rational& lambda);
VerificationJob rho_job(int r, int s, int n);
VerificationJob vir_weights_job(const Rational& lambda, const Rational& mu, bool fermi, bool doubled, long window);
VerificationJob table43_job(const std::vector<std::pair<Rational, Rational>>& grid, long window);

/// Runs jobs on `threads` workers; results come back in input order.
std::vector<JobResult> run_jobs(const std::vector<VerificationJob>& jobs, unsigned threads = 1);

/// Deterministic JSON report (no wall times).
std::string report_json(const std::vector<JobResult>& results);
/// Human-readable report, wall times included.
std::string report_markdown(const std::vector<JobResult>& results);
/// One "expected vs measured" line per failing check.
std::string report_diff(const std::vector<JobResult>& results);

}  // namespace howe
