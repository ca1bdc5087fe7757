#include "colorlie/report.hpp"

#include <sstream>

namespace colorlie {

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_of(const std::string& bytes) {
    std::ostringstream os;
    os << "fnv1a:" << std::hex << fnv1a64(bytes);
    return os.str();
}

Json Report::to_json() const {
    Json checks_json = Json::object();
    for (const auto& [name, outcome] : checks) {
        Json c{{"verdict", status_str(outcome.status)}};
        if (outcome.witness) {
            c["witness"] = Json{{"tuple", outcome.witness->tuple},
                                {"lhs", outcome.witness->lhs},
                                {"rhs", outcome.witness->rhs}};
        }
        checks_json[name] = std::move(c);
    }
    Json out{{"command", command},
             {"input_digest", input_digest},
             {"checks", checks_json},
             {"exit", exit_code()}};
    if (seed) out["seed"] = *seed;
    if (!payload.is_null()) out["result"] = payload;
    if (timing_ms) out["timing_ms"] = *timing_ms;
    return out;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "# " << command << "  (input " << input_digest << ")";
    if (seed) os << "  seed=" << *seed;
    os << "\n";
    for (const auto& [name, outcome] : checks) {
        const char* tag = outcome.status == CheckOutcome::Status::pass   ? "PASS"
                          : outcome.status == CheckOutcome::Status::fail ? "FAIL"
                                                                         : "SKIP";
        os << "[" << tag << "] " << name;
        if (outcome.witness) {
            os << "  witness (";
            for (size_t i = 0; i < outcome.witness->tuple.size(); ++i)
                os << (i ? ", " : "") << outcome.witness->tuple[i];
            os << "): " << outcome.witness->lhs << "  vs  " << outcome.witness->rhs;
        }
        os << "\n";
    }
    if (!payload.is_null()) os << "result: " << payload.dump() << "\n";
    if (timing_ms) os << "timing_ms: " << *timing_ms << "\n";
    return os.str();
}

} // namespace colorlie
