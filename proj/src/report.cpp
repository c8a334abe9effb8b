#include "spk/report.hpp"

namespace spk::io {

using nlohmann::ordered_json;

void Report::add(const CheckResult& r, long long elapsed_ms) {
    entries.push_back({r, elapsed_ms});
}

bool Report::overall() const {
    for (const auto& e : entries)
        if (!e.result.pass) return false;
    return true;
}

ordered_json Report::to_json() const {
    ordered_json checks = ordered_json::array();
    for (const auto& e : entries) {
        checks.push_back(ordered_json{{"name", e.result.name},
                                      {"status", e.result.pass ? "pass" : "fail"},
                                      {"details", e.result.details},
                                      {"elapsed_ms", e.elapsed_ms}});
    }
    return ordered_json{{"artifact", "superplactic-kit"},
                        {"parameters", parameters},
                        {"checks", checks},
                        {"overall", overall() ? "pass" : "fail"}};
}

void Report::print_text(std::ostream& out) const {
    for (const auto& e : entries)
        out << "check " << e.result.name << ": " << (e.result.pass ? "pass" : "FAIL") << " - "
            << e.result.details << "\n";
    out << "overall: " << (overall() ? "pass" : "fail") << "\n";
}

} // namespace spk::io
