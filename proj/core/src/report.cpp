#include "homcat/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace homcat::cli {

using nlohmann::json;

bool VerificationReport::all_pass() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

void VerificationReport::add(const std::string& name, bool pass, const std::string& detail) {
    verdicts.push_back({name, pass, detail});
}

json VerificationReport::to_json() const {
    json j;
    j["command"] = command;
    j["inputs_digest"] = inputs_digest;
    j["statement_tag"] = statement_tag;
    j["all_pass"] = all_pass();
    json vs = json::array();
    for (const auto& v : verdicts) {
        json e;
        e["name"] = v.name;
        e["pass"] = v.pass;
        if (!v.detail.empty()) e["detail"] = v.detail;
        vs.push_back(std::move(e));
    }
    j["verdicts"] = std::move(vs);
    j["witness_files"] = witness_files;
    j["wall_ms"] = wall_ms; // timing field, excluded from the determinism contract
    return j;
}

std::string VerificationReport::to_markdown() const {
    std::ostringstream os;
    os << "# " << command << "\n\n";
    os << "- statement: `" << statement_tag << "`\n";
    os << "- inputs digest: `" << inputs_digest << "`\n";
    os << "- result: **" << (all_pass() ? "PASS" : "FAIL") << "** (" << wall_ms << " ms)\n\n";
    os << "| check | verdict | detail |\n|---|---|---|\n";
    for (const auto& v : verdicts)
        os << "| " << v.name << " | " << (v.pass ? "pass" : "FAIL") << " | " << v.detail << " |\n";
    if (!witness_files.empty()) {
        os << "\nWitnesses:\n";
        for (const auto& w : witness_files) os << "- `" << w << "`\n";
    }
    return os.str();
}

std::string digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace homcat::cli
