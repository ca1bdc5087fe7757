#pragma once

#include <map>
#include <optional>

#include "colorlie/algfile.hpp"
#include "colorlie/check.hpp"

namespace colorlie {

/// Keyed verdicts plus optional payload; renders identically (up to layout)
/// as JSON and text, and is byte-deterministic for a fixed input and seed.
struct Report {
    std::string command;
    std::string input_digest;
    std::optional<uint64_t> seed;
    std::map<std::string, CheckOutcome> checks;
    Json payload; // constructed artifacts, omitted when null
    std::optional<double> timing_ms;

    void add(const std::string& name, CheckOutcome outcome) {
        checks[name] = std::move(outcome);
    }

    bool all_passed() const {
        for (const auto& [k, v] : checks)
            if (v.status == CheckOutcome::Status::fail) return false;
        return true;
    }
    int exit_code() const { return all_passed() ? 0 : 1; }

    Json to_json() const;
    std::string to_text() const;
};

uint64_t fnv1a64(const std::string& bytes);
std::string digest_of(const std::string& bytes);

} // namespace colorlie
