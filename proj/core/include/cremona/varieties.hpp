#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/maps.hpp"
#include "cremona/matrix.hpp"

namespace cremona {

/// A catalog variety: normal-form affine parametrization, the implicit
/// equations the classical sources supply (possibly none), the expected
/// linear image of its linearizing map, and the per-coordinate twist data
/// (h, g) realizing that map when the plain triangular construction is not
/// the classical one.
struct CatalogEntry {
    std::string name;
    RegistryPtr reg;
    int ambient_dim = 0;  // projective dimension r
    Parametrization param;
    std::vector<VarId> x_vars;  // affine ambient coordinates, map source order
    std::vector<VarId> y_vars;  // image coordinates, same order
    std::string x_chart, y_chart;
    std::vector<Polynomial> implicit_eqs;       // affine chart form
    std::vector<VarId> expected_linear_image;   // y-coordinates that vanish
    std::vector<RationalFunction> lin_h, lin_g;  // empty = plain triangular

    int dim() const { return static_cast<int>(param.params.size()); }
};

CatalogEntry segre(int m, int n);                       // caps m, n <= 4
CatalogEntry segre_multi(const std::vector<int>& shape);
CatalogEntry veronese2(int n);                          // cap n <= 6
CatalogEntry rnc(int n);                                // cap n <= 12
CatalogEntry grass2(int n);                             // cap n <= 8
CatalogEntry tpn(int n);                                // cap n <= 4
CatalogEntry g36();

/// Parses "segre:2,2", "veronese2:3", "rnc:6", "grass2:6", "g36", "tp:2",
/// "segre-multi:2,2,2".
CatalogEntry make_entry(const std::string& name);
std::vector<std::string> catalog_families();

/// The entry's linearizing Cremona (its h/g data when present, the plain
/// triangular map otherwise), verified.
CremonaPair linearizing_pair(const CatalogEntry& entry);

/// k-secant parametrization: k+1 copies of the parameter block and affine
/// weights s_1..s_k with s_0 = 1 - sum s_j. k = 0 returns the entry's own
/// parametrization. Parameter groups: "t0".."tk" and "s".
Parametrization secant_parametrization(const CatalogEntry& entry, int k);

/// Tangential parametrization: x_i = t_i + s_i on the parameter block and
/// f_j(t) + sum_i s_i df_j/dt_i elsewhere. Groups: "t" (base point) and "s"
/// (tangent direction).
Parametrization tangential_parametrization(const CatalogEntry& entry);

/// The k = 1 secant in the coordinates (t, u, s) with t_0 = t, t_1 = t + u.
/// Groups: "t" (translation), "u" (difference), "s".
Parametrization secant_difference_form(const CatalogEntry& entry);

/// True iff eq pulls back to zero along the parametrization.
bool membership_check(const Parametrization& param, const Polynomial& eq);

/// min(r, n(k+1)+k) - dim Sec_k, with the dimension taken as the generic
/// Jacobian rank of the affine secant parametrization.
int secant_defect(const CatalogEntry& entry, int k, const RankSampling& cfg = {});

/// True iff no coordinate outside vertex_vars involves any of the
/// translation parameters. The overload reads the translation block from the
/// parametrization's "t" group.
bool cone_structure_check(const Parametrization& param, const std::vector<VarId>& vertex_vars,
                          const std::vector<VarId>& translation_params);
bool cone_structure_check(const Parametrization& param, const std::vector<VarId>& vertex_vars);

/// Pullback of an equation through the pair's inverse: substitute, clear
/// denominators, strip monomial content and normalize the leading
/// coefficient to 1 (the proper transform up to a unit).
Polynomial transform_equation(const CremonaPair& pair, const Polynomial& eq);

/// p = c q for a nonzero rational c.
bool equal_up_to_unit(const Polynomial& p, const Polynomial& q);

/// Pfaffian of an antisymmetric matrix of even order, by expansion along
/// the first row.
Polynomial pfaffian(const std::vector<std::vector<Polynomial>>& m);

/// Determinant by cofactor expansion (the matrices here are tiny).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

/// All k x k minors of a polynomial matrix.
std::vector<Polynomial> matrix_minors(const std::vector<std::vector<Polynomial>>& m, int k);

// ---- classical equations used by the examples ----

/// det of the (m+1)x(n+1) matrix of coordinates on the segre(m,n) chart
/// (m = n required for a determinant).
Polynomial segre_matrix_determinant(const CatalogEntry& segre_entry);

/// det of the traceless matrix on the tpn chart (the secant/tangent
/// hypersurface of TP^n for n = 2).
Polynomial tpn_matrix_determinant(const CatalogEntry& tpn_entry);

/// The Pfaffian cubic cutting Sec(G(2,6)) on the grass2(6) chart.
Polynomial grass2_pfaffian_cubic(const CatalogEntry& grass_entry);

/// 2x2 minors of the catalecticant [[y_, ...],[...]] built on the given
/// variables with leading entry `lead` (used for the rnc secant checks).
std::vector<Polynomial> hankel_minors(const RegistryPtr& reg, const std::vector<VarId>& vars);

/// The 2x2x2 hyperdeterminant on the cumulant-style chart x_{} = 1 of Sigma_3.
/// Variables in the order [v1, v2, v3, v12, v13, v23, v123].
Polynomial hyperdeterminant222(const RegistryPtr& reg, const std::vector<VarId>& subset_vars);

/// The quartic equation of the tangential variety of Sigma_3 after the plain
/// triangular linearization, same variable convention as above.
Polynomial sigma3_triangular_tangent_quartic(const RegistryPtr& reg,
                                             const std::vector<VarId>& subset_vars);

/// Its counterpart after the cumulant linearization: v123^2 + 4 v12 v13 v23.
Polynomial sigma3_cumulant_tangent_quartic(const RegistryPtr& reg,
                                           const std::vector<VarId>& subset_vars);

/// The quartic equation of T(G(3,6)) on the chart x_0 = 1, in the chart's
/// own coordinate convention (second block = plain minor matrix). The
/// classical display (y0 - tr(XY))^2 + 4 det Y + 4 y0 det X
/// - 4 sum det(X_ij) det(Y_ji) takes Y in the adjugate convention; the two
/// differ by the linear change Y -> D Y^T D, D = diag(1,-1,1), which this
/// function applies so that membership holds on the chart.
Polynomial g36_tangent_quartic(const CatalogEntry& g36_entry);

/// The classical quartic exactly as displayed (adjugate-convention second
/// block). It does NOT vanish on this chart's tangential parametrization.
Polynomial g36_tangent_quartic_classical_form(const CatalogEntry& g36_entry);

/// The quadro-cubic and cubo-cubic linearizations of G(3,6), both verified,
/// built over the entry's registry. The overload makes a fresh entry.
std::pair<CremonaPair, CremonaPair> g36_maps(const CatalogEntry& entry);
std::pair<CremonaPair, CremonaPair> g36_maps();

struct G36TangentImage {
    /// The inverse substituted into the classical quartic as displayed (the
    /// computation the ~600-term sextics come from).
    Polynomial equation;
    uint32_t degree = 0;       // 6
    size_t term_count = 0;     // 448 and 435
    /// Its two leading terms in the reverse-lexicographic convention of the
    /// classical display, and under the library's own canonical order.
    std::string leading_terms;
    std::string leading_terms_canonical;
    /// The inverse substituted into the chart-convention quartic: the actual
    /// equation of the transformed tangential variety. Degree 4; every term
    /// meets the image subspace {W = 0, w0 = 0}.
    Polynomial image_equation;
};

/// The images of the T(G(3,6)) quartic under the two linearizations.
std::pair<G36TangentImage, G36TangentImage> g36_tangential_images();

}  // namespace cremona
