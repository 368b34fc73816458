#include "cyclide/resultant.hpp"

#include "cyclide/kernels.hpp"

namespace cyclide {

namespace {

std::vector<Polynomial> coefficients_in(const Polynomial& p, int var) {
    int d = p.degree_in(var);
    std::vector<Polynomial> c;
    c.reserve(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) c.push_back(p.coeff_of(var, k));
    return c;
}

}  // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, int var) {
    if (!same_ring(p.ring(), q.ring())) throw AlgebraError("variable-list mismatch");
    const RingPtr& ring = p.ring();
    int m = p.degree_in(var);
    int n = q.degree_in(var);
    if (m < 1 || n < 1) throw AlgebraError("resultant: input constant in the variable");

    // fraction-free elimination prefers integer entries: pull the rational
    // content out and rescale the determinant at the end
    Rational cp = p.content(), cq = q.content();
    Polynomial pp = p.scaled(Rational(1) / cp);
    Polynomial qq = q.scaled(Rational(1) / cq);
    auto a = coefficients_in(pp, var);
    auto b = coefficients_in(qq, var);

    const int size = m + n;
    PolyMatrix s(static_cast<size_t>(size),
                 std::vector<Polynomial>(static_cast<size_t>(size), Polynomial::zero(ring)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = a[static_cast<size_t>(m - k)];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s[static_cast<size_t>(n + i)][static_cast<size_t>(i + k)] = b[static_cast<size_t>(n - k)];

    Polynomial det = bareiss_det(std::move(s), ring);
    Rational scale = 1;
    for (int i = 0; i < n; ++i) scale *= cp;
    for (int i = 0; i < m; ++i) scale *= cq;
    return det.scaled(scale);
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var) {
    int idx = p.ring()->index(var);
    if (idx < 0) throw AlgebraError("unknown variable: " + var);
    return resultant(p, q, idx);
}

Polynomial discriminant(const Polynomial& p, int var) {
    if (p.degree_in(var) < 2) throw AlgebraError("discriminant: degree below 2");
    Polynomial r = resultant(p, p.partial(var), var);
    if (r.is_zero()) return r;
    return r.primitive_part();
}

Polynomial discriminant(const Polynomial& p, const std::string& var) {
    int idx = p.ring()->index(var);
    if (idx < 0) throw AlgebraError("unknown variable: " + var);
    return discriminant(p, idx);
}

std::pair<Polynomial, int> trial_divide(const Polynomial& p, const Polynomial& d) {
    if (p.is_zero()) throw AlgebraError("trial_divide: zero dividend");
    if (d.is_zero() || d.is_constant()) throw AlgebraError("trial_divide: constant divisor");
    Polynomial cur = p;
    int k = 0;
    for (;;) {
        auto q = cur.divided_exact(d);
        if (!q) break;
        cur = std::move(*q);
        ++k;
    }
    return {cur, k};
}

bool proportional(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.nterms() != q.nterms()) return false;
    // cross-multiply by the canonical leading coefficients
    return p.scaled(q.leading_coeff()) == q.scaled(p.leading_coeff());
}

}  // namespace cyclide
