#ifndef CYCLIDE_CONDUCTOR_HPP
#define CYCLIDE_CONDUCTOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyclide/contour.hpp"
#include "cyclide/ideal.hpp"

namespace cyclide {

/// C_q for nodes and cusps of B1 that are genuine contour singularities:
/// the maximal ideal, represented cluster-wide by the radical ideal.
Ideal maximal_ideal_contribution(const SpecialPointCluster& cluster);

/// C_q where the fiber holds two distinct points (crossing of B1 with the
/// multiple conic): <U1> + <A^k>, the multiple-component ideal being the
/// square of the conic ideal in the nodal case and the cube in the cuspidal.
Ideal cross_contribution(const ContourInput& input);

/// Ideal generated by F*G and dF*G + lambda*F*dG over all ring variables.
Ideal mixed_derivative_ideal(const Polynomial& F, const Polynomial& G, const Rational& lambda);

/// Ideal generated by FG*Jac(K), K*mixed_derivative_ideal(F,G,lambda), and
/// Jac(F,H)G + lambda*F*Jac(G,H) for generators H of K over all coordinate
/// pairs.
Ideal mixed_jacobian_ideal(const Polynomial& F, const Polynomial& G, const Rational& lambda,
                           const Ideal& K);

/// Largest homogeneous ideal whose localization at the cluster matches the
/// candidate: stabilized irrelevant-saturation of candidate + radical^N.
/// Nullopt when no N below the cap stabilizes.
std::optional<Ideal> localize(const Ideal& candidate, const SpecialPointCluster& cluster,
                              int degree_cap = 7);

struct ConductorPair {
    Polynomial G0;   // the unique sextic, primitive
    Polynomial G1;   // canonical degree-7 element independent of {x,y,z}*G0
    Ideal conductor; // the assembled intersection
    int dim6 = 0, dim7 = 0;
};

struct AssembleResult {
    std::optional<ConductorPair> pair;
    int failed_line = 0;  // 14 or 15 when the degree assertions fail
    std::string message;
    int dim6 = 0, dim7 = 0;
};

/// Intersect the local contributions and extract G0 (degree 6, unique up to
/// scalar) and G1 (degree 7 modulo multiples of G0).
AssembleResult assemble(const RingPtr& ring, const std::vector<Ideal>& contributions);

}  // namespace cyclide

#endif
