#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qrr/series.hpp"

namespace qrr {

struct VerificationReport {
    std::string id;
    int order = 0;
    std::string status;  // "pass" | "fail" | "error"
    long elapsed_ms = 0;
    std::optional<Mismatch> mismatch;  // present iff status == "fail"
    std::string error_message;         // present iff status == "error"
};

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j{
        {"id", r.id}, {"order", r.order}, {"status", r.status}, {"elapsed_ms", r.elapsed_ms}};
    if (r.mismatch) {
        j["mismatch"] = {{"exponent", r.mismatch->exponent},
                         {"lhs", rational_str(r.mismatch->lhs)},
                         {"rhs", rational_str(r.mismatch->rhs)}};
    }
    if (!r.error_message.empty()) j["error"] = r.error_message;
    return j;
}

}  // namespace qrr
