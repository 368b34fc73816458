#ifndef CYCLIDE_CONTOUR_HPP
#define CYCLIDE_CONTOUR_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclide/ideal.hpp"
#include "cyclide/polynomial.hpp"

namespace cyclide {

/// Raised when the input violates the generic-position assumptions; the
/// analysis retries with a fresh rotation before giving up.
struct GenericityError : AlgebraError {
    explicit GenericityError(const std::string& what) : AlgebraError(what) {}
};

/// Raised when the contour is not of Darboux type at all (wrong degree,
/// wrong absolute-conic multiplicity).
struct NotDarbouxContour : AlgebraError {
    explicit NotDarbouxContour(const std::string& what) : AlgebraError(what) {}
};

struct ContourInput {
    Polynomial U;   // full degree-12 contour equation
    Polynomial U1;  // U / A^k, primitive
    int k = 0;      // multiplicity of A: 2 nodal, 3 cuspidal
    bool cuspidal() const { return k == 3; }
};

/// Split off the absolute-conic factor; rejects multiplicities other than 2, 3.
ContourInput strip_absolute(const Polynomial& U);

/// Rational orthogonal 3x3 matrices (Cayley transforms of skew matrices).
struct Mat3 {
    std::array<std::array<Rational, 3>, 3> m;

    static Mat3 identity();
    static Mat3 cayley(const Rational& s1, const Rational& s2, const Rational& s3);
    Mat3 times(const Mat3& o) const;
    Mat3 transposed() const;
    bool is_identity() const;
    bool orthogonal() const;
};

/// Substitute (x,y,z) -> M * (x,y,z) into p (w, if present, is fixed).
Polynomial rotate_xyz(const Polynomial& p, const Mat3& M);

enum class ClusterKind { CuspOffCE, NodeOffCE, NodeOnCE, TransversalCE, TangentialCE };

const char* cluster_kind_name(ClusterKind k);

struct SpecialPointCluster {
    int id = 0;
    ClusterKind kind = ClusterKind::NodeOffCE;
    Polynomial resolvent;  // irreducible binary form in (y,z)
    Ideal radical;         // radical ideal of the point set, basis cached
    int size = 0;          // number of geometric points = deg resolvent
    bool guessable = false;
};

struct ContourAnalysis {
    ContourInput input;                        // in rotated coordinates
    Mat3 rotation = Mat3::identity();          // input.U = rotate_xyz(original U, rotation)
    std::vector<SpecialPointCluster> clusters; // singular clusters then CE clusters
};

/// strip_absolute + generic-position enforcement + cluster detection and
/// classification.  Retries with seeded rotations on genericity failures.
ContourAnalysis analyze_contour(const Polynomial& U, std::uint64_t seed,
                                int max_rotations = 12);

/// One binary choice per guessable cluster: true = the cluster contributes
/// its conductor term, false = it is the image of singular/special surface
/// points and contributes nothing.
struct GuessVector {
    std::vector<int> cluster_ids;  // guessable clusters, by id
    std::vector<bool> contribute;
};

/// Cartesian product of the binary choices, pruned by the isolated-point
/// budget (total size of singular clusters guessed as isolated-double-point
/// images).  Throws when the guessable-cluster count exceeds guess_limit.
std::vector<GuessVector> enumerate_guesses(const std::vector<SpecialPointCluster>& clusters,
                                           int guess_limit = 16, int isolated_bound = 4);

}  // namespace cyclide

#endif
