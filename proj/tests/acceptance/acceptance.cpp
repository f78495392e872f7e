// One PASS/FAIL line per acceptance criterion. With a criterion number as
// argument only that criterion is run and the exit code reflects it alone.

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "howe/verify.hpp"

using namespace howe;

namespace {

const std::map<int, std::string> kTitles = {
    {1, "algebraic property suites"},
    {2, "osp(m|2n) dimensions and closure"},
    {3, "quantization image dimensions"},
    {4, "spinor highest weights"},
    {5, "principal sl(2) highest weights"},
    {6, "Lefschetz and harmonic decompositions"},
    {7, "Bernstein osp(1|2) closure"},
    {8, "hyper-Kahler closures"},
    {9, "dual pair certificates"},
    {10, "Sergeev representation"},
    {11, "maximal rho homomorphism"},
    {12, "Virasoro central charges"},
    {13, "determinism of verify-all"},
};

/// First failing check of a job, as "name: expected E, measured M".
std::string first_failure(const JobResult& r) {
    if (!r.error.empty()) return "error: " + r.error;
    for (const auto& c : r.checks)
        if (!c.ok && !c.informational) return c.name + ": expected " + c.expected + ", measured " + c.measured;
    return "";
}

bool report_criterion(int criterion, const std::vector<JobResult>& results) {
    std::size_t total = 0, passed = 0;
    std::vector<std::string> notes;
    for (const auto& r : results) {
        if (r.criterion != criterion) continue;
        ++total;
        if (r.status() != JobStatus::Fail) ++passed;
        else notes.push_back(r.id + " (" + first_failure(r) + ")");
    }
    const bool ok = total > 0 && passed == total;
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << "  " << kTitles.at(criterion) << " ["
              << passed << "/" << total << " jobs]\n";
    for (const auto& n : notes) std::cout << "    " << n << "\n";
    return ok;
}

bool report_determinism(const std::vector<JobResult>& first) {
    auto second = run_jobs(verification_jobs(), 4);
    const bool ok = report_json(first) == report_json(second);
    std::cout << "criterion 13: " << (ok ? "PASS" : "FAIL") << "  " << kTitles.at(13)
              << " [sequential vs 4 threads, JSON " << (ok ? "byte-identical" : "differs") << "]\n";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) {
        int c = std::atoi(argv[i]);
        if (!kTitles.count(c)) {
            std::cerr << "usage: acceptance [criterion 1..13 ...]\n";
            return 2;
        }
        wanted.insert(c);
    }
    if (wanted.empty())
        for (const auto& [c, title] : kTitles) wanted.insert(c);

    auto results = run_jobs(verification_jobs());
    bool all = true;
    for (int c : wanted) all = (c == 13 ? report_determinism(results) : report_criterion(c, results)) && all;
    return all ? 0 : 1;
}
