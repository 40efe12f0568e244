#pragma once

#include <string>
#include <vector>

#include "cremona/maps.hpp"
#include "cremona/posets.hpp"

namespace cremona {

/// Coordinates on P^(2^n - 1) indexed by subsets of [n], one x- and one
/// y-variable per subset, declared in (popcount, bitmask) order so that
/// cumulant maps are manifestly triangular. Mask 0 names the chart
/// variables x_{} and y_{}.
struct CumulantCoordinates {
    RegistryPtr reg;
    int n = 0;
    std::vector<uint32_t> masks;  // nonempty subsets in declaration order
    std::vector<VarId> x;         // by position in `masks`
    std::vector<VarId> y;
    std::string x_chart, y_chart;

    VarId x_of(uint32_t mask) const;
    VarId y_of(uint32_t mask) const;
};

CumulantCoordinates make_cumulant_coordinates(int n);

std::string subset_var_name(const std::string& side, uint32_t mask);

/// The binary cumulant change of coordinates on the chart x_{} = 1:
///   y_I = sum over partitions of I of (-1)^(|pi|-1)(|pi|-1)! prod x_B,
/// with the inverse given directly by Möbius inversion:
///   x_I = sum over partitions of I of prod y_B.
/// The pair is verified by composition.
CremonaPair binary_cumulant_map(int n);

/// The poset-weighted generalization: coefficients mu(pi, 1-hat) over the
/// restriction L(I), for any subposet L containing the extremes. Inverse by
/// triangular inversion. L = full lattice recovers the binary map.
CremonaPair l_cumulant_map(const PartitionPoset& L);

/// Coordinates on the Segre product of shape (r_1,...,r_k), one variable
/// per tuple in prod {0..r_j}, ordered by (support size, tuple).
struct MultiIndexCoordinates {
    RegistryPtr reg;
    std::vector<int> shape;
    std::vector<std::vector<int>> tuples;  // nonzero tuples in declaration order
    std::vector<VarId> x, y;
    std::string x_chart, y_chart;
};

MultiIndexCoordinates make_multi_index_coordinates(const std::vector<int>& shape);

/// All nonzero tuples of prod {0..r_j} in (support size, tuple) order, and
/// the support of one tuple as a bitmask over the factor positions.
std::vector<std::vector<int>> multi_index_tuples(const std::vector<int>& shape);
uint32_t tuple_support(const std::vector<int>& t);

/// Cumulant transformation for Seg(r_1,...,r_k): the binary formula applied
/// over partitions of the support S(i), with blocks truncating the tuple.
/// Shape (1,...,1) coincides with binary_cumulant_map(k).
CremonaPair multi_segre_cumulant_map(const std::vector<int>& shape);

/// Substitutes the Segre parametrization a_I = prod_{i in I} t_i into the
/// forward map; true iff every coordinate with |I| >= 2 reduces to zero.
bool linearization_check(const CremonaPair& pair, int n);

/// Same check for a multi-Segre cumulant map: image coordinates with
/// |S(i)| >= 2 must vanish on the Segre parametrization.
bool multi_segre_linearization_check(const CremonaPair& pair, const std::vector<int>& shape);

struct SecantCumulantResult {
    Parametrization image;       // the secant parametrization pushed through psi2∘psi1
    RationalMap composite;       // psi2 ∘ psi1 as a single (triangular) map
    bool identity_verified;      // z_I = s(1-s)(1-2s)^(|I|-2) prod (b_i - a_i) for |I| >= 2
    std::vector<std::string> checked;  // one entry per verified coordinate
};

/// The two-step cumulant pipeline on Sec(Sigma_n): first the one-cluster
/// map y_I = sum_{A subset I} (-1)^(|I \ A|) x_A prod_{i in I\A} x_i, then
/// the interval transform z_I = sum (-1)^(|pi|-1) prod y_B taken over
/// interval partitions whose blocks all have size >= 2 (the singleton-block
/// terms belong to the centered convention and vanish there; keeping them
/// would break the closed form already at |I| = 2). The closed form of the
/// image is verified symbolically coordinate by coordinate.
SecantCumulantResult secant_cumulant_pipeline(int n);

}  // namespace cremona
