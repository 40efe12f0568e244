#pragma once

#include <map>
#include <string>
#include <vector>

#include "cremona/rational_function.hpp"

namespace cremona {

/// Affine parametrization of a variety: named coordinates as rational
/// functions of the parameters. Normal form means the first coordinates are
/// the parameters themselves (x_i = t_i), which is what the triangular
/// constructions require. Parameter blocks can carry names ("t", "s", ...)
/// so that downstream checks can tell translation directions from base
/// points.
struct Parametrization {
    RegistryPtr reg;
    std::vector<VarId> params;
    std::vector<std::pair<VarId, RationalFunction>> coords;
    bool normal_form = false;
    std::map<std::string, std::vector<VarId>> groups;

    const RationalFunction& coord_of(VarId v) const;
    bool has_coord(VarId v) const;
};

/// Reparametrization: substitutes bindings into every coordinate function.
/// The caller supplies the new parameter list and groups.
Parametrization substitute_params(const Parametrization& p, const Bindings& b,
                                  std::vector<VarId> new_params,
                                  std::map<std::string, std::vector<VarId>> new_groups = {});

}  // namespace cremona
