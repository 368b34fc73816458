#ifndef CYCLIDE_IDEAL_HPP
#define CYCLIDE_IDEAL_HPP

#include <optional>
#include <vector>

#include "cyclide/polynomial.hpp"

namespace cyclide {

/// Finitely generated ideal with a lazily cached reduced Groebner basis.
///
/// Basis elements are integer-primitive with positive leading coefficient and
/// sorted by leading monomial, so equal ideals under the same order produce
/// identical bases.  The cache is not synchronized: force it with
/// groebner_basis() before sharing an Ideal across threads.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens,
          TermOrder order = TermOrder::grevlex());

    const RingPtr& ring() const { return ring_; }
    const TermOrder& order() const { return order_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const std::vector<Polynomial>& groebner_basis() const;
    bool basis_cached() const { return gb_.has_value(); }

    Polynomial normal_form(const Polynomial& p) const;
    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
    bool is_zero_ideal() const { return groebner_basis().empty(); }
    bool is_unit_ideal() const;

    /// Same ideal re-keyed to another term order (basis recomputed on demand).
    Ideal with_order(const TermOrder& order) const;

private:
    RingPtr ring_;
    TermOrder order_ = TermOrder::grevlex();
    std::vector<Polynomial> gens_;
    mutable std::optional<std::vector<Polynomial>> gb_;
};

Ideal intersect(const Ideal& a, const Ideal& b);
Ideal sum(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, int n);

/// (I : g) and (I : J).
Ideal quotient(const Ideal& a, const Polynomial& g);
Ideal quotient(const Ideal& a, const Ideal& b);

/// (I : g^inf) via the t*g - 1 elimination trick; (I : J^inf) by iterating
/// the quotient until it stabilizes.
Ideal saturate(const Ideal& a, const Polynomial& g);
Ideal saturate(const Ideal& a, const Ideal& b);

/// I intersected with the subring of the variables not listed.
Ideal eliminate(const Ideal& a, const std::vector<int>& vars);

/// Canonical basis of the degree-d slice of a homogeneous ideal: monomial
/// multiples of the reduced basis row-reduced over the degree-d monomials.
std::vector<Polynomial> graded_piece(const Ideal& a, int d);

/// Dimension shortcut for the above.
int graded_dim(const Ideal& a, int d);

/// Equality under a common order via reduced-basis comparison.
bool ideal_equal(const Ideal& a, const Ideal& b);

/// All monomials of total degree d in the ring, canonically ordered.
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d);

}  // namespace cyclide

#endif
