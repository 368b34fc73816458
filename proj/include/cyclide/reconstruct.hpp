#ifndef CYCLIDE_RECONSTRUCT_HPP
#define CYCLIDE_RECONSTRUCT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclide/conductor.hpp"
#include "cyclide/contour.hpp"

namespace cyclide {

struct ContourIdeal {
    Polynomial H0;  // the unique cubic of the lifted contour ideal
    Polynomial H1;  // canonical quartic independent of {x,y,z,w}*H0
    Ideal ideal;
};

struct LiftResult {
    std::optional<ContourIdeal> contour;
    int failed_line = 0;  // 19 on failure
    std::string message;
    int dim3 = 0, dim4 = 0;
};

/// Image of the contour under (x:y:z) -> (x G0 : y G0 : z G0 : G1):
/// saturation of <U, w G0 - G1> by G0, checked to be generated by a cubic
/// and a quartic.
LiftResult lift_contour(const Polynomial& U, const ConductorPair& pair);

/// Homogeneous antiderivative: dH2/dw = H0 with no w-free terms.
Polynomial integrate_w(const Polynomial& H0);

struct AnsatzResult {
    std::optional<Polynomial> F0;
    std::array<Rational, 5> c{};
    bool underdetermined = false;
    std::string message;
};

/// Find c1..c5 with H2 - c1 xH0 - c2 yH0 - c3 zH0 - c4 wH0 - c5 H1 free of w;
/// F0 is the matching combination.
AnsatzResult solve_ansatz(const Polynomial& H2, const Polynomial& H0, const Polynomial& H1);

/// All rational (a,b,c) such that F0(x,y,z,w-ax-by-cz) has Darboux shape:
/// the w-free slice is a nonzero multiple of A^2 and the w-slice of the
/// derivative lies in <A>.
struct InfinityPlaneResult {
    std::vector<std::array<Rational, 3>> solutions;
    bool ambiguous = false;  // positive-dimensional solution set
    std::string message;
};
InfinityPlaneResult recover_infinity_plane(const Polynomial& F0);

struct CandidateSurface {
    Polynomial F;  // primitive, positive canonical leading coefficient
    std::array<Rational, 3> abc{};
};

/// Shift w by the recovered plane, normalize, and verify the Darboux
/// membership plus the discriminant round-trip against U.
std::optional<CandidateSurface> finalize(const Polynomial& F0, const std::array<Rational, 3>& abc,
                                         const Polynomial& U, std::string* diagnostic);

struct GuessReport {
    int guess_index = 0;
    GuessVector guess;
    std::vector<std::pair<int, bool>> node_on_ce_variant;  // cluster id -> contributes
    bool success = false;
    int failed_line = 0;  // 14 / 15 / 19 / 24, 0 on success
    std::string message;
    std::optional<CandidateSurface> surface;  // in the original input coordinates
    int dim6 = 0, dim7 = 0;
    std::vector<int> contour_degrees;  // degrees of the lifted generators
};

struct ReconstructionOptions {
    std::uint64_t seed = 0;
    int guess_limit = 16;
    int isolated_bound = 4;
    int jobs = 0;  // 0 = library default
};

struct ReconstructionRun {
    ContourAnalysis analysis;
    std::vector<GuessReport> reports;
    bool any_success = false;
};

/// The whole backward pipeline: analysis, guess enumeration, conductor
/// assembly, lift, ansatz, infinity-plane recovery and verification, for
/// every guess and NodeOnCE variant choice.
ReconstructionRun run_all_guesses(const Polynomial& U, const ReconstructionOptions& opts);

}  // namespace cyclide

#endif
