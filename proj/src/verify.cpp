#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "howe/verify.hpp"

namespace howe {

std::string status_name(JobStatus s) {
    switch (s) {
        case JobStatus::Pass: return "pass";
        case JobStatus::Fail: return "fail";
        case JobStatus::Measured: return "measured";
    }
    return "?";
}

JobStatus JobResult::status() const {
    if (!error.empty()) return JobStatus::Fail;
    bool asserted = false;
    for (const auto& c : checks) {
        if (c.informational) continue;
        asserted = true;
        if (!c.ok) return JobStatus::Fail;
    }
    return asserted ? JobStatus::Pass : JobStatus::Measured;
}

void JobResult::check(std::string name, std::string expected, std::string measured, std::string provenance) {
    bool ok = expected == measured;
    checks.push_back({std::move(name), std::move(expected), std::move(measured), std::move(provenance), ok, false});
}

void JobResult::measure(std::string name, std::string measured, std::string note) {
    checks.push_back({std::move(name), "", std::move(measured), std::move(note), true, true});
}

void JobResult::require(std::string name, bool ok, std::string measured, std::string provenance) {
    if (measured.empty()) measured = ok ? "true" : "false";
    checks.push_back({std::move(name), ok ? measured : "true", std::move(measured), std::move(provenance), ok, false});
}

JobResult VerificationJob::run() const {
    JobResult r;
    r.id = id;
    r.criterion = criterion;
    r.target = target;
    r.params = params;
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<JobResult> run_jobs(const std::vector<VerificationJob>& jobs, unsigned threads) {
    std::vector<JobResult> out(jobs.size());
    if (threads <= 1 || jobs.size() <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i].run();
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = jobs[i].run();
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

namespace {

nlohmann::json job_json(const JobResult& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["criterion"] = r.criterion;
    j["target"] = r.target;
    j["params"] = r.params;
    j["status"] = status_name(r.status());
    j["conventions"] = r.conventions;
    auto& checks = j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json cj{{"name", c.name}, {"measured", c.measured}, {"ok", c.ok}};
        if (c.informational) cj["informational"] = true;
        else cj["expected"] = c.expected;
        if (!c.provenance.empty()) cj["provenance"] = c.provenance;
        checks.push_back(std::move(cj));
    }
    if (!r.details.empty()) j["details"] = nlohmann::json::parse(r.details);
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

std::string cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

}  // namespace

std::string report_json(const std::vector<JobResult>& results) {
    nlohmann::json j;
    std::size_t pass = 0, fail = 0, measured = 0;
    auto& jobs = j["jobs"] = nlohmann::json::array();
    for (const auto& r : results) {
        switch (r.status()) {
            case JobStatus::Pass: ++pass; break;
            case JobStatus::Fail: ++fail; break;
            case JobStatus::Measured: ++measured; break;
        }
        jobs.push_back(job_json(r));
    }
    j["summary"] = {{"jobs", results.size()}, {"pass", pass}, {"fail", fail}, {"measured", measured}};
    return j.dump(2) + "\n";
}

std::string report_markdown(const std::vector<JobResult>& results) {
    std::ostringstream out;
    out << "# Verification report\n\n";
    out << "| job | criterion | status | wall (ms) |\n|---|---|---|---|\n";
    for (const auto& r : results)
        out << "| " << r.id << " | " << r.criterion << " | " << status_name(r.status()) << " | "
            << static_cast<long>(r.wall_ms) << " |\n";
    for (const auto& r : results) {
        out << "\n## " << r.id << "\n\n" << r.target << "\n\n";
        if (!r.params.empty()) {
            out << "Parameters:";
            for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
            out << "\n\n";
        }
        if (!r.checks.empty()) {
            out << "| check | expected | measured | ok | source |\n|---|---|---|---|---|\n";
            for (const auto& c : r.checks)
                out << "| " << cell(c.name) << " | " << (c.informational ? "-" : cell(c.expected)) << " | "
                    << cell(c.measured) << " | " << (c.informational ? "info" : c.ok ? "yes" : "NO") << " | "
                    << cell(c.provenance) << " |\n";
        }
        if (!r.conventions.empty()) {
            out << "\nConventions:\n\n";
            for (const auto& [k, v] : r.conventions) out << "- " << k << ": " << v << "\n";
        }
        if (!r.error.empty()) out << "\nError: " << r.error << "\n";
    }
    return out.str();
}

std::string report_diff(const std::vector<JobResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        if (!r.error.empty()) out << r.id << ": error: " << r.error << "\n";
        for (const auto& c : r.checks)
            if (!c.ok && !c.informational)
                out << r.id << ": " << c.name << "\n  - expected: " << c.expected << "\n  + measured: " << c.measured
                    << "\n";
    }
    return out.str();
}

}  // namespace howe
