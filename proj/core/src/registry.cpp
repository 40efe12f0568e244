#include "cremona/registry.hpp"

#include <atomic>

namespace cremona {

VarId VariableRegistry::declare(const std::string& name) {
    if (index_.count(name))
        throw error("variable '" + name + "' already declared");
    uint32_t idx = static_cast<uint32_t>(names_.size());
    names_.push_back(name);
    index_.emplace(name, idx);
    return VarId{idx};
}

VarId VariableRegistry::ensure(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return VarId{it->second};
    return declare(name);
}

bool VariableRegistry::contains(const std::string& name) const { return index_.count(name) != 0; }

VarId VariableRegistry::id_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw error("unknown variable '" + name + "'");
    return VarId{it->second};
}

const std::string& VariableRegistry::name_of(VarId v) const {
    if (v.index >= names_.size()) throw error("variable index out of range");
    return names_[v.index];
}

namespace {
std::atomic<uint32_t> g_max_total_degree{64};
}

void set_max_total_degree(uint32_t limit) { g_max_total_degree.store(limit); }
uint32_t max_total_degree() { return g_max_total_degree.load(); }

}  // namespace cremona
