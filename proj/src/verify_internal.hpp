#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "howe/verify.hpp"

namespace howe::detail {

using Params = std::map<std::string, std::string>;

inline VerificationJob make_job(std::string id, int criterion, std::string target, Params params,
                                std::function<void(JobResult&)> body) {
    return {std::move(id), criterion, std::move(target), std::move(params), std::move(body)};
}

inline std::string num(std::size_t n) { return std::to_string(n); }

/// Job groups of the full run, one per source file.
std::vector<VerificationJob> algebra_jobs();
std::vector<VerificationJob> howe_jobs();
std::vector<VerificationJob> stringy_jobs(const VerifyOptions& opt);

}  // namespace howe::detail
