#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/parametrization.hpp"
#include "cremona/rational_function.hpp"

namespace cremona {

/// Rational map between affine charts of projective spaces: one coordinate
/// function per target variable, written in the source variables. The chart
/// fields name the homogeneous coordinate set to 1 on each side; they drive
/// homogenization.
struct RationalMap {
    RegistryPtr reg;
    std::vector<VarId> source_vars;
    std::vector<VarId> target_vars;
    std::vector<RationalFunction> coords;
    std::string source_chart;
    std::string target_chart;

    void validate() const;
};

/// Map in homogeneous coordinates: coords[0] is the image of the chart
/// coordinate, coords[i] of target i-1. Coordinates are coprime forms of a
/// common degree.
struct ProjectiveMap {
    RegistryPtr reg;
    std::vector<VarId> source_vars;  // chart first when it exists
    std::vector<Polynomial> coords;

    uint32_t degree() const;
};

/// A Cremona transformation bundled with its inverse. `verified` records
/// that inverse∘forward reduced to the identity on the chart. The degree
/// pair and fundamental factor are filled in by verify_cremona.
struct CremonaPair {
    RationalMap forward;
    RationalMap inverse;
    bool verified = false;
    std::optional<uint32_t> delta;
    std::optional<uint32_t> delta_prime;
    std::optional<Polynomial> fundamental_factor;  // in homogeneous source coordinates
};

/// Monoid hypersurface f_{d-1}(x_0..x_{r-1}) x_r + f_d(x_0..x_{r-1}) = 0
/// with vertex [0,...,0,1].
struct Monoid {
    RegistryPtr reg;
    std::vector<VarId> base_vars;  // x_0 .. x_{r-1}
    VarId vertex_var;              // x_r
    Polynomial f_d;
    Polynomial f_dm1;
    uint32_t d = 0;
    bool coprime = false;  // iff irreducible

    static Monoid make(RegistryPtr reg, std::vector<VarId> base_vars, VarId vertex_var,
                       Polynomial f_d, Polynomial f_dm1);
    Polynomial equation() const;  // f_dm1 * x_r + f_d
};

RationalMap identity_map(const RegistryPtr& reg, const std::vector<VarId>& vars,
                         const std::string& chart);

/// Coordinate-wise substitution of f into g; requires f's target variables
/// to equal g's source variables.
RationalMap compose(const RationalMap& g, const RationalMap& f);

bool is_identity(const RationalMap& m);

/// Syntactic triangularity: coordinate i has degree <= 1 in source variable
/// i, involves no later source variable, and its denominator is free of
/// variable i and later ones.
bool is_triangular(const RationalMap& m);

/// Stepwise inversion of a triangular map. Error naming the first
/// coordinate that is not linear in its leading variable.
RationalMap invert_triangular(const RationalMap& f);

/// The linearizing Cremona of a normal-form parametrization: parameters map
/// to themselves and every other coordinate x_j becomes x_j - f_j(params).
/// target_vars supplies names for the image coordinates (same count and
/// order as the source). The pair is verified by composition.
CremonaPair triangular_from_parametrization(const Parametrization& param,
                                            const std::vector<VarId>& source_vars,
                                            const std::vector<VarId>& target_vars,
                                            const std::string& source_chart,
                                            const std::string& target_chart);

/// Variant with per-coordinate twist data: the j-th non-parameter coordinate
/// becomes h_j (x_j - f_j) + g_j, where h_j and g_j only involve earlier
/// source variables and every h_j is nonzero. h/g may be empty for the
/// defaults h = 1, g = 0.
CremonaPair generalized_triangular(const Parametrization& param,
                                   const std::vector<VarId>& source_vars,
                                   const std::vector<VarId>& target_vars,
                                   const std::vector<RationalFunction>& h,
                                   const std::vector<RationalFunction>& g,
                                   const std::string& source_chart,
                                   const std::string& target_chart);

/// True iff every g_j vanishes identically on the parametrized variety, in
/// which case (and only then) the generalized map sends the variety onto the
/// coordinate subspace where the non-parameter image coordinates vanish.
bool maps_to_linear_subspace(const Parametrization& param, const std::vector<RationalFunction>& g);

/// Clears chart denominators and removes common polynomial content, yielding
/// coprime homogeneous coordinates of one degree. The chart variables are
/// taken from the map's chart names (declared in the registry on demand).
ProjectiveMap homogenize(const RationalMap& m);

/// Full verification: homogenizes both maps, back-substitutes, extracts the
/// fundamental factor Phi with G_i(F) = Phi * x_i, records the degree pair
/// and checks deg Phi = delta*delta' - 1. Also verifies the chart-form
/// composition. Errors name the first offending coordinate.
CremonaPair verify_cremona(const RationalMap& f, const RationalMap& g);

/// Extends a homogeneous self-map omega of P^r by a monoid of degree
/// d = deg(omega) + deg(h) with vertex above P^r: the new map is
/// [h F_0, ..., h F_r, f_monoid]. The projection identity pi∘Omega =
/// omega∘pi holds by construction and is checked structurally.
ProjectiveMap monoidal_extension(const ProjectiveMap& omega, const Polynomial& h,
                                 const Monoid& monoid);

struct StereographicProjection {
    ProjectiveMap projection;  // [x_0, ..., x_{r-1}], restriction of the linear projection
    ProjectiveMap inverse;     // [f_{d-1} x_0, ..., f_{d-1} x_{r-1}, -f_d]
};

StereographicProjection stereographic_projection(const Monoid& monoid);

/// The double projection of a bimonoid
///   f_d + x_{r-1} g_{d-1} + x_r h_{d-1} + x_r x_{r-1} f_{d-2} = 0
/// from its two vertices, as a map H_1 -> H_2:
///   [(f_{d-2} x_{r-1} + h_{d-1}) x_0, ..., (f_{d-2} x_{r-1} + h_{d-1}) x_{r-2},
///    -f_d - x_{r-1} g_{d-1}].
ProjectiveMap double_projection(const Polynomial& f_d, const Polynomial& g_dm1,
                                const Polynomial& h_dm1, const Polynomial& f_dm2,
                                const std::vector<VarId>& base_vars, VarId last_var);

/// Coordinate-wise substitution of the parametrization into the map. Error
/// naming any denominator of m that vanishes identically on the variety.
Parametrization apply_to_parametrization(const RationalMap& m, const Parametrization& param);

/// Equality of projective coordinate vectors up to a common factor, checked
/// by cross-multiplication.
bool projectively_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

/// Divides a coordinate vector by the gcd of its entries.
std::vector<Polynomial> projective_reduce(std::vector<Polynomial> coords);

}  // namespace cremona
