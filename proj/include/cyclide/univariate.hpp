#ifndef CYCLIDE_UNIVARIATE_HPP
#define CYCLIDE_UNIVARIATE_HPP

#include <utility>
#include <vector>

#include "cyclide/polynomial.hpp"

namespace cyclide {

/// Dense univariate polynomials over Z, coeffs[i] belongs to u^i,
/// no trailing zeros.  Internal engine behind squarefree decomposition and
/// factorization of resolvents.
namespace uni {

using ZPoly = std::vector<Integer>;

int deg(const ZPoly& f);
ZPoly trim(ZPoly f);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
ZPoly derivative(const ZPoly& f);
Integer content(const ZPoly& f);
ZPoly primitive(const ZPoly& f);  // content removed, leading coefficient > 0

/// Exact division; throws when b does not divide a.
ZPoly divide_exact(const ZPoly& a, const ZPoly& b);
/// True when b divides a over Z.
bool divides(const ZPoly& b, const ZPoly& a);

/// gcd via primitive pseudo-remainder sequence; primitive, lc > 0.
ZPoly gcd(ZPoly a, ZPoly b);

/// Yun squarefree decomposition of a primitive polynomial.
std::vector<std::pair<ZPoly, int>> squarefree(const ZPoly& f);

/// Factorization into irreducibles over Q (returned primitive over Z with
/// positive leading coefficient), exponents collected.  Zassenhaus:
/// modular factorization, Hensel lifting, subset recombination.
std::vector<std::pair<ZPoly, int>> factor(const ZPoly& f);

}  // namespace uni

struct FactorMult {
    Polynomial factor;
    int multiplicity;
};

/// Squarefree decomposition of an effectively-univariate polynomial or a
/// binary homogeneous form (at most two active variables).  Factors are
/// primitive with positive canonical leading coefficient, pairwise coprime;
/// their product with multiplicities equals the input up to a rational.
std::vector<FactorMult> squarefree_decompose(const Polynomial& p);

/// Full factorization into rational irreducibles for univariate input or a
/// binary homogeneous form of degree <= 20.
std::vector<FactorMult> factor_univariate(const Polynomial& p);

}  // namespace cyclide

#endif
