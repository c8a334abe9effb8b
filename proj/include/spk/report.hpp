#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spk/check.hpp"

namespace spk::io {

// Aggregated verification run, serializable for the report command.
struct Report {
    nlohmann::ordered_json parameters;
    struct Entry {
        CheckResult result;
        long long elapsed_ms = 0;
    };
    std::vector<Entry> entries;

    void add(const CheckResult& r, long long elapsed_ms);
    bool overall() const;
    nlohmann::ordered_json to_json() const;
    void print_text(std::ostream& out) const;
};

} // namespace spk::io
