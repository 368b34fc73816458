#include "cyclide/contour.hpp"

#include <algorithm>
#include <random>

#include "cyclide/forward.hpp"
#include "cyclide/resultant.hpp"
#include "cyclide/univariate.hpp"

namespace cyclide {

ContourInput strip_absolute(const Polynomial& U) {
    if (U.is_zero()) throw NotDarbouxContour("zero input");
    const RingPtr r = plane_ring();
    Polynomial u = U.mapped_to(r);
    if (!u.is_homogeneous() || u.degree() != 12)
        throw NotDarbouxContour("input must be homogeneous of degree 12 in x,y,z");
    auto [core, k] = trial_divide(u, absolute_quadric(r));
    if (k != 2 && k != 3)
        throw NotDarbouxContour(
            "not the apparent contour of a Darboux cyclide in general position: "
            "A-multiplicity " + std::to_string(k));
    ContourInput in;
    in.U = u.primitive_part();
    in.U1 = core.primitive_part();
    in.k = k;
    return in;
}

// ---------------------------------------------------------------------------
// rotations
// ---------------------------------------------------------------------------

Mat3 Mat3::identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = (i == j) ? 1 : 0;
    return r;
}

Mat3 Mat3::cayley(const Rational& s1, const Rational& s2, const Rational& s3) {
    // (I - S)(I + S)^{-1} with S = [[0,s1,s2],[-s1,0,s3],[-s2,-s3,0]]
    std::array<std::array<Rational, 3>, 3> a, b;  // a = I - S, b = I + S
    Rational s[3][3] = {{0, s1, s2}, {-s1, 0, s3}, {-s2, -s3, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a[i][j] = Rational(i == j ? 1 : 0) - s[i][j];
            b[i][j] = Rational(i == j ? 1 : 0) + s[i][j];
        }
    // invert b by adjugate
    auto det2 = [&](int r0, int r1, int c0, int c1) -> Rational {
        return Rational(b[r0][c0] * b[r1][c1]) - Rational(b[r0][c1] * b[r1][c0]);
    };
    Rational det = b[0][0] * det2(1, 2, 1, 2) - b[0][1] * det2(1, 2, 0, 2) +
                   b[0][2] * det2(1, 2, 0, 1);
    if (det == 0) throw AlgebraError("singular Cayley denominator");
    std::array<std::array<Rational, 3>, 3> inv;
    int idx[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational c = det2(idx[j][0], idx[j][1], idx[i][0], idx[i][1]);
            if ((i + j) % 2) c = -c;
            inv[i][j] = c / det;
        }
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational acc = 0;
            for (int k = 0; k < 3; ++k) acc += a[i][k] * inv[k][j];
            out.m[i][j] = acc;
        }
    return out;
}

Mat3 Mat3::times(const Mat3& o) const {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational acc = 0;
            for (int k = 0; k < 3; ++k) acc += m[i][k] * o.m[k][j];
            out.m[i][j] = acc;
        }
    return out;
}

Mat3 Mat3::transposed() const {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.m[i][j] = m[j][i];
    return out;
}

bool Mat3::is_identity() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m[i][j] != Rational(i == j ? 1 : 0)) return false;
    return true;
}

bool Mat3::orthogonal() const {
    Mat3 p = times(transposed());
    return p.is_identity();
}

Polynomial rotate_xyz(const Polynomial& p, const Mat3& M) {
    const RingPtr& r = p.ring();
    int xi = r->index("x"), yi = r->index("y"), zi = r->index("z");
    if (xi < 0 || yi < 0 || zi < 0) throw AlgebraError("rotate_xyz needs x,y,z");
    int vars[3] = {xi, yi, zi};
    std::vector<Polynomial> images;
    for (int i = 0; i < 3; ++i) {
        Polynomial img = Polynomial::zero(r);
        for (int j = 0; j < 3; ++j)
            img += Polynomial::constant(r, M.m[i][j]) * Polynomial::variable(r, vars[j]);
        images.push_back(img);
    }
    return p.substituted_many({xi, yi, zi}, images);
}

// ---------------------------------------------------------------------------
// cluster radicals via the x-coordinate field representation
// ---------------------------------------------------------------------------

namespace {

using QP = std::vector<Rational>;  // dense rational univariate, no trailing zeros

QP qtrim(QP f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

QP qadd(const QP& a, const QP& b) {
    QP r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return qtrim(std::move(r));
}

QP qscale(const QP& a, const Rational& c) {
    if (c == 0) return {};
    QP r = a;
    for (auto& x : r) x *= c;
    return r;
}

QP qmul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return qtrim(std::move(r));
}

QP qmod(QP a, const QP& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a = qtrim(std::move(a));
    }
    return a;
}

// extended euclid: returns (g, s) with s*a = g mod b, g = gcd monic
void qgcdext(QP a, QP b, QP& g, QP& s) {
    QP s0{Rational(1)}, s1{};
    while (!b.empty()) {
        // a = q*b + r
        QP r = a, q;
        while (r.size() >= b.size() && !r.empty()) {
            Rational c = r.back() / b.back();
            size_t shift = r.size() - b.size();
            if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
            q[shift] += c;
            for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
            r = qtrim(std::move(r));
        }
        QP s2 = qadd(s0, qscale(qmul(q, s1), Rational(-1)));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (a.empty()) throw AlgebraError("qgcdext of zero inputs");
    Rational lc = a.back();
    g = qscale(a, Rational(1) / lc);
    s = qscale(s0, Rational(1) / lc);
}

// inverse of a mod rbar (rbar irreducible, a nonzero mod rbar)
QP qinv_mod(const QP& a, const QP& rbar) {
    QP g, s;
    qgcdext(qmod(a, rbar), rbar, g, s);
    if (g.size() != 1) throw AlgebraError("non-invertible element in resolvent field");
    return qmod(s, rbar);
}

// elements of K[x]: coefficient per x-power, each a QP reduced mod rbar
using KxPoly = std::vector<QP>;

KxPoly kx_trim(KxPoly f) {
    while (!f.empty() && f.back().empty()) f.pop_back();
    return f;
}

// dehomogenize p at chart variable hv with parameter variable pv -> K[x]
KxPoly dehomogenize_to_kx(const Polynomial& p, int xi, int pv, int hv, const QP& rbar) {
    int dx = p.degree_in(xi);
    KxPoly f(static_cast<size_t>(std::max(dx, 0)) + 1);
    for (const auto& t : p.terms()) {
        int a = t.mono[xi];
        int b = t.mono[pv];
        auto& slot = f[static_cast<size_t>(a)];
        if (slot.size() < static_cast<size_t>(b) + 1) slot.resize(static_cast<size_t>(b) + 1, Rational(0));
        slot[static_cast<size_t>(b)] += t.coeff;
    }
    for (auto& slot : f) slot = qmod(qtrim(std::move(slot)), rbar);
    (void)hv;
    return kx_trim(std::move(f));
}

// gcd over the field K = Q[u]/(rbar); returns monic gcd
KxPoly kx_gcd(KxPoly a, KxPoly b, const QP& rbar) {
    a = kx_trim(std::move(a));
    b = kx_trim(std::move(b));
    while (!b.empty()) {
        // monic-ize divisor
        QP inv = qinv_mod(b.back(), rbar);
        for (auto& c : b) c = qmod(qmul(c, inv), rbar);
        // a mod b
        while (!a.empty() && a.size() >= b.size()) {
            QP top = a.back();
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                QP delta = qmod(qmul(top, b[i]), rbar);
                a[i + shift] = qmod(qadd(a[i + shift], qscale(delta, Rational(-1))), rbar);
            }
            a = kx_trim(std::move(a));
            if (a.size() == shift + b.size()) throw AlgebraError("internal: kx reduction stuck");
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        QP inv = qinv_mod(a.back(), rbar);
        for (auto& c : a) c = qmod(qmul(c, inv), rbar);
    }
    return a;
}

struct Chart {
    int xi, pv, hv;  // x index, parameter variable, chart (dehomogenized) variable
};

QP monic_dehom_resolvent(const Polynomial& ir, const Chart& ch) {
    int d = ir.degree();
    QP rbar(static_cast<size_t>(d) + 1, Rational(0));
    for (const auto& t : ir.terms()) rbar[static_cast<size_t>(t.mono[ch.pv])] += t.coeff;
    rbar = qtrim(std::move(rbar));
    if (static_cast<int>(rbar.size()) - 1 != d)
        throw GenericityError("resolvent loses degree in the chart");
    Rational lc = rbar.back();
    for (auto& c : rbar) c /= lc;
    return rbar;
}

/// Radical of the cluster over the irreducible resolvent `ir`: the unique
/// x-coordinate above each resolvent root is recovered from gcd_x(p, q) over
/// the residue field, giving a shape-lemma pair {ir, x*den - num}.
Ideal cluster_radical_shape(const Polynomial& p, const Polynomial& q, const Polynomial& ir) {
    const RingPtr& r = p.ring();
    Chart ch;
    ch.xi = r->index("x");
    bool z_chart = !(ir.degree_in(r->index("z")) == ir.degree());  // ir == z^d only when z | ir
    // ir irreducible: it is either the form z itself or has a nonzero y^d term
    if (ir.degree() == 1 && ir.degree_in(r->index("y")) == 0) z_chart = false;
    ch.pv = z_chart ? r->index("y") : r->index("z");
    ch.hv = z_chart ? r->index("z") : r->index("y");
    if (ir.degree() >= 1 && ir.coeff_of(ch.pv, ir.degree()).is_zero())
        std::swap(ch.pv, ch.hv);

    QP rbar = monic_dehom_resolvent(ir, ch);
    KxPoly f = dehomogenize_to_kx(p, ch.xi, ch.pv, ch.hv, rbar);
    KxPoly g = dehomogenize_to_kx(q, ch.xi, ch.pv, ch.hv, rbar);
    KxPoly gcd = kx_gcd(f, g, rbar);
    if (gcd.size() != 2)
        throw GenericityError("vertical line through a special point meets another one");
    // gcd = x + c0, xi-coordinate is -c0(u)
    QP xi_of_u = qscale(gcd[0], Rational(-1));
    int kdeg = static_cast<int>(xi_of_u.size()) - 1;
    if (kdeg < 0) kdeg = 0;
    // homogeneous linear-in-x generator: x*hv^k - sum_i xi_i pv^i hv^{k+1-i}
    std::vector<Term> terms;
    {
        Monomial m(r->nvars());
        m.set(ch.xi, 1);
        m.set(ch.hv, kdeg);
        terms.push_back({m, Rational(1)});
    }
    for (size_t i = 0; i < xi_of_u.size(); ++i) {
        if (xi_of_u[i] == 0) continue;
        Monomial m(r->nvars());
        m.set(ch.pv, static_cast<int>(i));
        m.set(ch.hv, kdeg + 1 - static_cast<int>(i));
        terms.push_back({m, -xi_of_u[i]});
    }
    Polynomial shape(r, std::move(terms));
    Ideal raw(r, {ir, shape.primitive_part()});
    Ideal rad = saturate(raw, Polynomial::variable(r, ch.hv));
    rad.groebner_basis();
    return rad;
}

int plane_dim(int d) { return (d + 1) * (d + 2) / 2; }

bool hilbert_codim_matches(const Ideal& rad, int size) {
    for (int d = std::max(size - 1, 1); d <= size + 1; ++d) {
        if (plane_dim(d) - graded_dim(rad, d) != size) return false;
    }
    return true;
}

/// Saturation-style construction from the Jacobian scheme, per the primary
/// recipe; verified by the Hilbert-function test before use.
Ideal cluster_radical_saturation(const ContourInput& in, const Polynomial& ir, bool on_ce) {
    const RingPtr& r = in.U1.ring();
    std::vector<Polynomial> gens;
    if (on_ce) {
        gens = {in.U1, absolute_quadric(r), ir};
    } else {
        gens = {in.U1, in.U1.partial(0), in.U1.partial(1), in.U1.partial(2), ir};
    }
    Ideal raw(r, std::move(gens));
    Ideal rad = saturate(raw, Ideal(r, {Polynomial::variable(r, 0), Polynomial::variable(r, 1),
                                        Polynomial::variable(r, 2)}));
    rad.groebner_basis();
    return rad;
}

struct ResolventFactor {
    Polynomial poly;
    int multiplicity;
};

std::vector<ResolventFactor> irreducible_factors(const Polynomial& form) {
    std::vector<ResolventFactor> out;
    for (const auto& f : factor_univariate(form)) out.push_back({f.factor, f.multiplicity});
    return out;
}

bool divides_form(const Polynomial& f, const Polynomial& g) {
    return g.divided_exact(f).has_value();
}

}  // namespace

const char* cluster_kind_name(ClusterKind k) {
    switch (k) {
        case ClusterKind::CuspOffCE: return "CuspOffCE";
        case ClusterKind::NodeOffCE: return "NodeOffCE";
        case ClusterKind::NodeOnCE: return "NodeOnCE";
        case ClusterKind::TransversalCE: return "TransversalCE";
        case ClusterKind::TangentialCE: return "TangentialCE";
    }
    return "?";
}

namespace {

std::vector<SpecialPointCluster> detect_clusters(const ContourInput& in) {
    const RingPtr& r = in.U1.ring();
    const int xi = 0;
    if (in.U1.coeff_of(xi, in.U1.degree()).is_zero())
        throw GenericityError("leading x-coefficient of U1 vanishes");

    Polynomial A = absolute_quadric(r);
    Polynomial D;
    try {
        D = discriminant(in.U1, xi);
    } catch (const AlgebraError&) {
        throw GenericityError("x-discriminant of U1 undefined");
    }
    if (D.is_zero()) throw NotDarbouxContour("U1 is not reduced: camera position not generic");
    Polynomial R = resultant(in.U1, A, xi).primitive_part();
    if (R.is_zero())
        throw NotDarbouxContour("U1 shares a component with the absolute conic");

    std::vector<SpecialPointCluster> clusters;
    int next_id = 0;

    // --- singular points of U1, from the x-discriminant structure ---
    std::vector<Polynomial> node_resolvents;
    for (const auto& sf : squarefree_decompose(D)) {
        if (sf.multiplicity == 1) continue;  // simple fold tangencies
        if (sf.multiplicity > 3)
            throw GenericityError("discriminant factor of multiplicity " +
                                  std::to_string(sf.multiplicity));
        for (const auto& ir : irreducible_factors(sf.factor)) {
            SpecialPointCluster c;
            c.id = next_id++;
            c.resolvent = ir.poly;
            c.size = ir.poly.degree();
            if (sf.multiplicity == 3) {
                c.kind = ClusterKind::CuspOffCE;
                if (divides_form(ir.poly, R))
                    throw GenericityError("cusp of U1 on the absolute conic");
            } else {
                bool on_ce = divides_form(ir.poly, R);
                c.kind = on_ce ? ClusterKind::NodeOnCE : ClusterKind::NodeOffCE;
                if (on_ce) node_resolvents.push_back(ir.poly);
            }
            c.radical = cluster_radical_saturation(in, ir.poly, false);
            if (!hilbert_codim_matches(c.radical, c.size))
                c.radical = cluster_radical_shape(in.U1, in.U1.partial(xi), ir.poly);
            if (!hilbert_codim_matches(c.radical, c.size))
                throw GenericityError("cluster radical fails the Hilbert test");
            if (c.kind == ClusterKind::NodeOnCE && !c.radical.contains(A))
                throw GenericityError("node shares its projection with an unrelated conic point");
            c.guessable = c.kind != ClusterKind::NodeOnCE;
            clusters.push_back(std::move(c));
        }
    }

    // --- intersections of U1 with the absolute conic ---
    const int tangential_mult = in.cuspidal() ? 3 : 2;
    for (const auto& sf : squarefree_decompose(R)) {
        for (const auto& ir : irreducible_factors(sf.factor)) {
            bool is_node = false;
            for (const auto& nr : node_resolvents)
                if (proportional(nr, ir.poly)) is_node = true;
            if (is_node) continue;  // already represented as a NodeOnCE cluster
            SpecialPointCluster c;
            c.id = next_id++;
            c.resolvent = ir.poly;
            c.size = ir.poly.degree();
            if (sf.multiplicity == 1) {
                c.kind = ClusterKind::TransversalCE;
            } else if (sf.multiplicity == tangential_mult) {
                c.kind = ClusterKind::TangentialCE;
            } else {
                throw GenericityError("conic-resultant factor of multiplicity " +
                                      std::to_string(sf.multiplicity));
            }
            c.radical = cluster_radical_saturation(in, ir.poly, true);
            if (!hilbert_codim_matches(c.radical, c.size))
                c.radical = cluster_radical_shape(in.U1, A, ir.poly);
            if (!hilbert_codim_matches(c.radical, c.size))
                throw GenericityError("conic cluster radical fails the Hilbert test");
            c.guessable = true;
            clusters.push_back(std::move(c));
        }
    }
    return clusters;
}

}  // namespace

ContourAnalysis analyze_contour(const Polynomial& U, std::uint64_t seed, int max_rotations) {
    ContourInput base = strip_absolute(U);
    std::mt19937_64 rng(seed ^ 0xDA8B0uLL);
    Mat3 total = Mat3::identity();
    ContourInput current = base;
    std::string last_failure;
    for (int attempt = 0; attempt <= max_rotations; ++attempt) {
        try {
            ContourAnalysis out;
            out.input = current;
            out.rotation = total;
            out.clusters = detect_clusters(current);
            return out;
        } catch (const GenericityError& e) {
            last_failure = e.what();
        }
        auto frac = [&] {
            long num = static_cast<long>(rng() % 9) - 4;
            long den = 1 + static_cast<long>(rng() % 4);
            return make_rational(num, den);
        };
        Mat3 M = Mat3::cayley(frac(), frac(), frac());
        total = total.times(M);
        current.U = rotate_xyz(base.U, total).primitive_part();
        current.U1 = rotate_xyz(base.U1, total).primitive_part();
    }
    throw GenericityError("genericity not achieved after rotation retries: " + last_failure);
}

std::vector<GuessVector> enumerate_guesses(const std::vector<SpecialPointCluster>& clusters,
                                           int guess_limit, int isolated_bound) {
    std::vector<const SpecialPointCluster*> guessable;
    for (const auto& c : clusters)
        if (c.guessable) guessable.push_back(&c);
    if (static_cast<int>(guessable.size()) > guess_limit)
        throw AlgebraError("guess space too large: " + std::to_string(guessable.size()) +
                           " ambiguous clusters (limit " + std::to_string(guess_limit) + ")");
    std::vector<GuessVector> out;
    const size_t n = guessable.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        GuessVector g;
        int isolated_points = 0;
        for (size_t i = 0; i < n; ++i) {
            bool contribute = (mask >> i) & 1;
            g.cluster_ids.push_back(guessable[i]->id);
            g.contribute.push_back(contribute);
            bool singular_kind = guessable[i]->kind == ClusterKind::CuspOffCE ||
                                 guessable[i]->kind == ClusterKind::NodeOffCE;
            if (!contribute && singular_kind) isolated_points += guessable[i]->size;
        }
        if (isolated_points > isolated_bound) continue;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace cyclide
