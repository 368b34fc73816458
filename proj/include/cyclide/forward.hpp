#ifndef CYCLIDE_FORWARD_HPP
#define CYCLIDE_FORWARD_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "cyclide/polynomial.hpp"

namespace cyclide {

/// The ambient ring Q[x,y,z,w] and the image-plane ring Q[x,y,z].
RingPtr surface_ring();
RingPtr plane_ring();

/// A = x^2 + y^2 + z^2 over the given ring.
Polynomial absolute_quadric(const RingPtr& r);

struct CyclideSpec {
    Polynomial L;  // linear in x,y,z
    Polynomial Q;  // homogeneous quadratic in x,y,z,w
    bool cuspidal = false;
};

/// F = A^2 + 2*A*L*w + Q*w^2.  Throws on degenerate specs (wrong degrees,
/// cuspidal condition violated).
Polynomial make_cyclide(const CyclideSpec& spec);

/// F(x + p1 w, y + p2 w, z + p3 w, w): moves the camera point (p:1) to
/// (0:0:0:1).  The camera must not lie on the surface.
Polynomial translate_camera(const Polynomial& F, const std::array<Rational, 3>& p);

/// Discriminant of F with respect to w, content- and sign-normalized.
/// Degree 12 for a valid instance; rejects non-generic cameras (deg_w < 4).
Polynomial apparent_contour(const Polynomial& F);

struct ScalingWitness {
    bool equal = false;
    Rational d = 1;   // w-axis rescaling
    Rational mu = 1;  // global scalar
};

/// Is G == mu * F(x, y, z, d*w) for rational d != 0, mu != 0?
ScalingWitness equal_up_to_scaling(const Polynomial& F, const Polynomial& G);

/// Computable check behind the no-triple-or-quadruple-point fact: the ideal
/// of F and all its second partials has empty projective zero set.
bool has_no_triple_points(const Polynomial& F);

struct ForwardInstance {
    CyclideSpec spec;
    Polynomial surface;             // F before the camera move
    std::array<Rational, 3> camera; // translation applied
    Polynomial translated;          // equation used for projection
    Polynomial contour;             // U in Q[x,y,z], degree 12
    Polynomial contour_core;        // U1 = U / A^k
    int a_multiplicity = 0;         // k, 2 nodal / 3 cuspidal
};

/// Seeded random instance of the requested family; resamples until the
/// basic degree facts hold (A-multiplicity, deg U1).  Throws after the retry
/// budget is exhausted.
ForwardInstance random_instance(std::uint64_t seed, bool cuspidal);

}  // namespace cyclide

#endif
