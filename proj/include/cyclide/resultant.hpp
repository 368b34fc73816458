#ifndef CYCLIDE_RESULTANT_HPP
#define CYCLIDE_RESULTANT_HPP

#include <utility>

#include "cyclide/polynomial.hpp"

namespace cyclide {

/// Sylvester resultant of p and q with respect to `var`, eliminated by
/// fraction-free Bareiss over the polynomial ring.  Both inputs must have
/// positive degree in `var`.
Polynomial resultant(const Polynomial& p, const Polynomial& q, int var);
Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var);

/// Res_var(p, dp/dvar), content removed and sign fixed so the canonical
/// leading coefficient is positive (discriminants are used up to a nonzero
/// rational everywhere downstream).
Polynomial discriminant(const Polynomial& p, int var);
Polynomial discriminant(const Polynomial& p, const std::string& var);

/// Largest k with d^k | p together with p / d^k.
std::pair<Polynomial, int> trial_divide(const Polynomial& p, const Polynomial& d);

/// True when the two polynomials differ by a nonzero rational factor,
/// verified by exact cross-multiplication of canonical leading coefficients.
bool proportional(const Polynomial& p, const Polynomial& q);

}  // namespace cyclide

#endif
