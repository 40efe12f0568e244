#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

/// Index of a variable inside a VariableRegistry. The index is a dense
/// ordinal assigned in declaration order; it never changes once assigned,
/// and it is the sole input to the monomial order.
struct VarId {
    uint32_t index = 0;
    friend bool operator==(VarId a, VarId b) { return a.index == b.index; }
    friend bool operator!=(VarId a, VarId b) { return a.index != b.index; }
    friend bool operator<(VarId a, VarId b) { return a.index < b.index; }
};

/// Append-only registry of variable names. Polynomials built over the same
/// registry are compatible; mixing registries is an error. Declaration order
/// fixes the graded-lexicographic monomial order, so constructions declare
/// variables in the order they want them ranked.
class VariableRegistry {
public:
    VarId declare(const std::string& name);
    /// Declares the name if it is new, otherwise returns the existing id.
    VarId ensure(const std::string& name);
    bool contains(const std::string& name) const;
    VarId id_of(const std::string& name) const;
    const std::string& name_of(VarId v) const;
    size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, uint32_t> index_;
};

using RegistryPtr = std::shared_ptr<VariableRegistry>;

inline RegistryPtr make_registry() { return std::make_shared<VariableRegistry>(); }

/// Total-degree guard. Any arithmetic whose result would exceed the limit
/// throws degree_limit_error instead of silently blowing up. Set once at
/// startup (the CLI wires --max-degree here); not synchronized.
void set_max_total_degree(uint32_t limit);
uint32_t max_total_degree();

}  // namespace cremona
