#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cremona/maps.hpp"

namespace cremona {

/// Outcome of one CLI invocation: the command echo, one pass/fail line per
/// check that ran, named artifacts in canonical text, and wall time. All
/// content except the timing is deterministic for a fixed seed.
struct Report {
    std::string command;
    struct Check {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> artifacts;
    double elapsed_ms = 0.0;

    void check(const std::string& name, bool pass, const std::string& detail = "");
    void artifact(const std::string& name, const std::string& text);
    bool all_pass() const;

    std::string to_text() const;  // timing excluded; it goes to stderr
    nlohmann::json to_json() const;
};

nlohmann::json to_json(const RationalMap& m);
nlohmann::json to_json(const CremonaPair& p);
nlohmann::json to_json(const Parametrization& p);

}  // namespace cremona
