#ifndef CYCLIDE_KERNELS_HPP
#define CYCLIDE_KERNELS_HPP

#include <vector>

#include "cyclide/polynomial.hpp"

namespace cyclide {

/// Dense matrices used by the exact linear-algebra kernels.
template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

using PolyMatrix = DenseMatrix<Polynomial>;
using RatMatrix = DenseMatrix<Rational>;

/// Fraction-free Bareiss determinant of a square matrix with polynomial
/// entries over Z[vars].  The `_serial` variant is the reference
/// implementation; `bareiss_det` runs the elimination updates in parallel
/// when OpenMP is enabled.  Both return identical exact results.
Polynomial bareiss_det_serial(PolyMatrix m, const RingPtr& ring);
Polynomial bareiss_det(PolyMatrix m, const RingPtr& ring);

struct Rref {
    RatMatrix rows;           // reduced nonzero rows
    std::vector<int> pivots;  // pivot column per row
    int rank = 0;
};

/// Exact Gauss-Jordan over Q.  Parallel and serial variants agree exactly.
Rref rref_serial(RatMatrix m);
Rref rref(RatMatrix m);

/// Solve A*x = b exactly.  Returns empty optional when inconsistent;
/// when underdetermined, free variables are set to zero and
/// `*underdetermined` is flagged.
std::optional<std::vector<Rational>> solve_linear(const RatMatrix& a,
                                                  const std::vector<Rational>& b,
                                                  bool* underdetermined = nullptr);

}  // namespace cyclide

#endif
