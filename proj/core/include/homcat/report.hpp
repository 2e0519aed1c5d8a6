#pragma once

#include <nlohmann/json_fwd.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace homcat::cli {

// Batch verification record: one report per command, deterministic except for
// the wall-clock field.
struct VerificationReport {
    std::string command;
    std::string inputs_digest;
    std::string statement_tag; // which statement the command checks, e.g. "SF1-SF4"
    struct Verdict {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Verdict> verdicts;
    std::vector<std::string> witness_files;
    long long wall_ms = 0;

    bool all_pass() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");

    nlohmann::json to_json() const;
    std::string to_markdown() const;
};

// FNV-1a over the canonicalized inputs.
std::string digest(const std::string& data);

} // namespace homcat::cli
