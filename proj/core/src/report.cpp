#include "cremona/report.hpp"

#include <sstream>

#include "cremona/text_io.hpp"

namespace cremona {

void Report::check(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
}

void Report::artifact(const std::string& name, const std::string& text) {
    artifacts.emplace_back(name, text);
}

bool Report::all_pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (auto& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << " — " << c.detail;
        os << "\n";
    }
    for (auto& [name, text] : artifacts) os << name << ": " << text << "\n";
    return os.str();
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["checks"] = nlohmann::json::array();
    for (auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["artifacts"] = nlohmann::json::object();
    for (auto& [name, text] : artifacts) j["artifacts"][name] = text;
    j["pass"] = all_pass();
    return j;
}

nlohmann::json to_json(const RationalMap& m) {
    nlohmann::json j;
    j["chart"] = {{"source", m.source_chart}, {"target", m.target_chart}};
    auto names = [&](const std::vector<VarId>& vs) {
        nlohmann::json a = nlohmann::json::array();
        for (VarId v : vs) a.push_back(m.reg->name_of(v));
        return a;
    };
    j["source_vars"] = names(m.source_vars);
    j["target_vars"] = names(m.target_vars);
    j["coords"] = nlohmann::json::array();
    for (auto& c : m.coords) j["coords"].push_back(to_text(c));
    return j;
}

nlohmann::json to_json(const CremonaPair& p) {
    nlohmann::json j;
    j["forward"] = to_json(p.forward);
    j["inverse"] = to_json(p.inverse);
    j["verified"] = p.verified;
    if (p.delta) j["delta"] = *p.delta;
    if (p.delta_prime) j["delta_prime"] = *p.delta_prime;
    if (p.fundamental_factor) j["fundamental_factor"] = to_text(*p.fundamental_factor);
    return j;
}

nlohmann::json to_json(const Parametrization& p) {
    nlohmann::json j;
    nlohmann::json params = nlohmann::json::array();
    for (VarId v : p.params) params.push_back(p.reg->name_of(v));
    j["params"] = params;
    j["normal_form"] = p.normal_form;
    j["coords"] = nlohmann::json::object();
    for (auto& [v, f] : p.coords) j["coords"][p.reg->name_of(v)] = to_text(f);
    return j;
}

}  // namespace cremona
