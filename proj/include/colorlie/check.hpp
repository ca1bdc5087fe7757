#pragma once

#include <optional>
#include <string>
#include <vector>

namespace colorlie {

/// First failing basis tuple of a swept identity, with both evaluated sides
/// rendered as canonical literals so the failure can be rechecked by hand.
struct Witness {
    std::vector<std::string> tuple;
    std::string lhs;
    std::string rhs;
};

struct CheckOutcome {
    enum class Status { pass, fail, skipped };

    Status status = Status::pass;
    std::optional<Witness> witness;

    bool ok() const { return status == Status::pass; }

    static CheckOutcome passed() { return {}; }
    static CheckOutcome failed(Witness w) {
        return CheckOutcome{Status::fail, std::move(w)};
    }
    static CheckOutcome skip() { return CheckOutcome{Status::skipped, std::nullopt}; }
};

inline const char* status_str(CheckOutcome::Status s) {
    switch (s) {
    case CheckOutcome::Status::pass: return "pass";
    case CheckOutcome::Status::fail: return "fail";
    default: return "skipped";
    }
}

} // namespace colorlie
