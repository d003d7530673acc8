#include "lgrexc/certificate.hpp"

#include <chrono>
#include <stdexcept>

namespace lgrexc {

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::necessary_condition_pass: return "NECESSARY-CONDITION PASS";
    }
    throw std::logic_error("status_name: unknown status");
}

nlohmann::json to_json(const Certificate& cert) {
    if (cert.status == Status::fail && cert.witnesses.empty())
        throw std::logic_error("Certificate: FAIL requires witnesses");
    nlohmann::json j;
    j["claim"] = cert.claim;
    j["parameters"] = cert.parameters;
    j["status"] = status_name(cert.status);
    j["witnesses"] = cert.witnesses;
    j["elapsed_ms"] = cert.elapsed_ms;
    return j;
}

std::int64_t detail::now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace lgrexc
