#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace lgrexc {

enum class Status { pass, fail, necessary_condition_pass };

std::string status_name(Status s);

/// Structured verification report. FAIL certificates always carry at
/// least one witness; PASS certificates may list confirming cells.
/// NECESSARY-CONDITION PASS marks checks that verify a necessary but not
/// sufficient consequence of the claim (Euler-probe exactness, chi-level
/// semiorthogonality).
struct Certificate {
    std::string claim;
    std::map<std::string, nlohmann::json> parameters;
    Status status = Status::pass;
    std::vector<nlohmann::json> witnesses;
    std::int64_t elapsed_ms = 0;

    bool ok() const { return status != Status::fail; }
};

nlohmann::json to_json(const Certificate& cert);

/// Stopwatch helper: runs fn, stores elapsed wall time into the
/// certificate it returns.
template <typename Fn>
Certificate timed_certificate(Fn&& fn);

namespace detail {
std::int64_t now_ms();
}

template <typename Fn>
Certificate timed_certificate(Fn&& fn) {
    const std::int64_t start = detail::now_ms();
    Certificate cert = fn();
    cert.elapsed_ms = detail::now_ms() - start;
    return cert;
}

}  // namespace lgrexc
