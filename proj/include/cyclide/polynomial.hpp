#ifndef CYCLIDE_POLYNOMIAL_HPP
#define CYCLIDE_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclide/ring.hpp"

namespace cyclide {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return q;
}

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial with rational coefficients.
/// Terms are kept sorted in descending canonical grevlex order and never
/// contain a zero coefficient.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(const RingPtr& r) { return Polynomial(r); }
    static Polynomial constant(const RingPtr& r, const Rational& c);
    static Polynomial variable(const RingPtr& r, int idx, int power = 1);
    static Polynomial variable(const RingPtr& r, const std::string& name, int power = 1);
    static Polynomial monomial(const RingPtr& r, Monomial m, Rational c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Degree in a single variable.
    int degree_in(int var) const;
    bool is_homogeneous() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool depends_on(int var) const { return degree_in(var) > 0; }

    /// Leading term under canonical grevlex.
    const Term& leading() const { return terms_.front(); }
    const Rational& leading_coeff() const { return terms_.front().coeff; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;
    Polynomial pow(int n) const;

    Polynomial partial(int var) const;
    Polynomial partial(const std::string& var) const;

    /// Substitute variable -> polynomial over the same ring.
    Polynomial substituted(int var, const Polynomial& value) const;
    Polynomial substituted(const std::string& var, const Polynomial& value) const;

    /// Simultaneous linear change of the given variables:
    /// var images[i] receives the polynomial images[i].
    Polynomial substituted_many(const std::vector<int>& vars,
                                const std::vector<Polynomial>& images) const;

    /// Evaluate some variables at rational points, keeping the ring.
    Polynomial evaluated(const std::vector<int>& vars, const std::vector<Rational>& values) const;

    /// Coefficient of var^k, a polynomial free of var.
    Polynomial coeff_of(int var, int k) const;

    /// Rational content (gcd of numerators / lcm of denominators); 0 for zero.
    Rational content() const;
    /// p / content(p), with sign fixed so the canonical leading coeff is positive.
    Polynomial primitive_part() const;

    /// Exact division; nullopt when d does not divide p.
    std::optional<Polynomial> divided_exact(const Polynomial& d) const;

    /// Map into another ring by variable name.  Every variable with a nonzero
    /// exponent must exist in the target ring.
    Polynomial mapped_to(const RingPtr& target) const;

    std::string str() const;

    /// Parse the text grammar: terms `c*x^a*y^b` joined by `+`/`-`, `c` an
    /// integer or fraction, `*` and `^1` optional.  Throws AlgebraError with
    /// a position on malformed input.
    static Polynomial parse(const RingPtr& ring, const std::string& text);

private:
    void normalize();

    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

}  // namespace cyclide

#endif
