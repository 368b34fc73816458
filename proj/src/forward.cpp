#include "cyclide/forward.hpp"

#include <random>

#include "cyclide/ideal.hpp"
#include "cyclide/resultant.hpp"

namespace cyclide {

RingPtr surface_ring() {
    static const RingPtr r = make_ring({"x", "y", "z", "w"});
    return r;
}

RingPtr plane_ring() {
    static const RingPtr r = make_ring({"x", "y", "z"});
    return r;
}

Polynomial absolute_quadric(const RingPtr& r) {
    Polynomial a = Polynomial::variable(r, "x", 2);
    a += Polynomial::variable(r, "y", 2);
    a += Polynomial::variable(r, "z", 2);
    return a;
}

Polynomial make_cyclide(const CyclideSpec& spec) {
    const RingPtr& r = spec.L.ring() ? spec.L.ring() : spec.Q.ring();
    if (!same_ring(r, spec.Q.ring()) && !spec.Q.is_zero())
        throw AlgebraError("cyclide spec ring mismatch");
    int w = r->index("w");
    if (w < 0) throw AlgebraError("cyclide spec needs the surface ring");
    if (!spec.L.is_zero() && (spec.L.degree() != 1 || spec.L.degree_in(w) > 0))
        throw AlgebraError("L must be linear in x,y,z");
    if (!spec.Q.is_zero() && (spec.Q.degree() != 2 || !spec.Q.is_homogeneous()))
        throw AlgebraError("Q must be a homogeneous quadric");
    Polynomial A = absolute_quadric(r);
    Polynomial W = Polynomial::variable(r, w);
    if (spec.cuspidal) {
        Polynomial drop = spec.L * spec.L - spec.Q.substituted(w, Polynomial::zero(r));
        if (!drop.divided_exact(A))
            throw AlgebraError("cuspidal spec requires L^2 - Q|_{w=0} in <A>");
    }
    Polynomial F = A * A + Polynomial::constant(r, 2) * A * spec.L * W + spec.Q * W * W;
    if (F.substituted(w, Polynomial::zero(r)) != A * A)
        throw AlgebraError("degenerate cyclide spec");
    return F;
}

Polynomial translate_camera(const Polynomial& F, const std::array<Rational, 3>& p) {
    const RingPtr& r = F.ring();
    int xi = r->index("x"), yi = r->index("y"), zi = r->index("z"), wi = r->index("w");
    if (F.evaluated({xi, yi, zi, wi}, {p[0], p[1], p[2], Rational(1)}).is_zero())
        throw AlgebraError("camera lies on the surface");
    Polynomial W = Polynomial::variable(r, wi);
    std::vector<Polynomial> images = {
        Polynomial::variable(r, xi) + Polynomial::constant(r, p[0]) * W,
        Polynomial::variable(r, yi) + Polynomial::constant(r, p[1]) * W,
        Polynomial::variable(r, zi) + Polynomial::constant(r, p[2]) * W};
    return F.substituted_many({xi, yi, zi}, images);
}

Polynomial apparent_contour(const Polynomial& F) {
    const RingPtr& r = F.ring();
    int wi = r->index("w");
    if (F.degree_in(wi) != 4)
        throw AlgebraError("non-generic camera: surface equation must have w-degree 4");
    Polynomial u = discriminant(F, wi);
    if (u.is_zero()) throw AlgebraError("degenerate surface: vanishing discriminant");
    return u.mapped_to(plane_ring());
}

namespace {

std::optional<Rational> nth_root(const Rational& v, int n) {
    if (v == 0) return Rational(0);
    Rational a = v;
    bool negate = false;
    if (a < 0) {
        if (n % 2 == 0) return std::nullopt;
        a = -a;
        negate = true;
    }
    Integer num_root, den_root;
    if (mpz_root(num_root.get_mpz_t(), a.get_num().get_mpz_t(), static_cast<unsigned long>(n)) == 0)
        return std::nullopt;
    if (mpz_root(den_root.get_mpz_t(), a.get_den().get_mpz_t(), static_cast<unsigned long>(n)) == 0)
        return std::nullopt;
    Rational root = make_rational(num_root, den_root);
    return negate ? -root : root;
}

Rational pow_rational(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

ScalingWitness equal_up_to_scaling(const Polynomial& F, const Polynomial& G) {
    ScalingWitness no;
    if (!same_ring(F.ring(), G.ring())) return no;
    const RingPtr& r = F.ring();
    int wi = r->index("w");
    int dF = F.degree_in(wi), dG = G.degree_in(wi);
    if (dF != dG) return no;

    std::vector<int> support;
    std::vector<Rational> ratio;
    for (int j = 0; j <= std::max(dF, 0); ++j) {
        Polynomial fj = F.coeff_of(wi, j);
        Polynomial gj = G.coeff_of(wi, j);
        if (fj.is_zero() != gj.is_zero()) return no;
        if (fj.is_zero()) continue;
        if (!proportional(fj, gj)) return no;
        support.push_back(j);
        ratio.push_back(gj.leading_coeff() / fj.leading_coeff());
    }
    if (support.empty()) return {F.is_zero() && G.is_zero(), Rational(1), Rational(1)};
    const int j0 = support[0];
    if (support.size() == 1) return {true, Rational(1), ratio[0] / pow_rational(Rational(1), j0)};

    int g = 0;
    for (size_t k = 1; k < support.size(); ++k) g = std::gcd(g, support[k] - j0);
    // d^g from the first two slices, then each sign/root candidate is verified
    Rational rho = ratio[1] / ratio[0];
    int e1 = support[1] - j0;
    // rho = d^{e1}; derive candidates for d via the g-th root structure
    std::vector<Rational> candidates;
    if (auto root = nth_root(rho, e1)) {
        candidates.push_back(*root);
        if (e1 % 2 == 0) candidates.push_back(-*root);
    }
    for (const Rational& d : candidates) {
        if (d == 0) continue;
        Rational mu = ratio[0] / pow_rational(d, j0);
        bool ok = true;
        for (size_t k = 0; k < support.size() && ok; ++k)
            ok = ratio[k] == mu * pow_rational(d, support[k]);
        if (ok) return {true, d, mu};
    }
    return no;
}

bool has_no_triple_points(const Polynomial& F) {
    const RingPtr& r = F.ring();
    std::vector<Polynomial> gens{F};
    for (int i = 0; i < r->nvars(); ++i)
        for (int j = i; j < r->nvars(); ++j) gens.push_back(F.partial(i).partial(j));
    Ideal J(r, std::move(gens));
    for (int d = 2; d <= 10; ++d) {
        if (graded_dim(J, d) == static_cast<int>(monomials_of_degree(r, d).size())) return true;
    }
    return false;
}

ForwardInstance random_instance(std::uint64_t seed, bool cuspidal) {
    const RingPtr r = surface_ring();
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15uLL + 1);
    auto small = [&](int span) {
        return Rational(static_cast<long>(rng() % static_cast<unsigned>(2 * span + 1)) - span);
    };
    Polynomial A = absolute_quadric(r);
    Polynomial W = Polynomial::variable(r, "w");

    for (int attempt = 0; attempt < 64; ++attempt) {
        CyclideSpec spec;
        spec.cuspidal = cuspidal;
        spec.L = Polynomial::constant(r, small(3)) * Polynomial::variable(r, "x") +
                 Polynomial::constant(r, small(3)) * Polynomial::variable(r, "y") +
                 Polynomial::constant(r, small(3)) * Polynomial::variable(r, "z");
        if (cuspidal) {
            Polynomial M = Polynomial::constant(r, small(3)) * Polynomial::variable(r, "x") +
                           Polynomial::constant(r, small(3)) * Polynomial::variable(r, "y") +
                           Polynomial::constant(r, small(3)) * Polynomial::variable(r, "z") +
                           Polynomial::constant(r, small(3)) * W;
            Rational gamma = small(4);
            if (gamma == 0) gamma = 1;
            spec.Q = spec.L * spec.L + Polynomial::constant(r, gamma) * A + W * M;
        } else {
            std::vector<Term> qt;
            for (const auto& m : monomials_of_degree(r, 2)) {
                Rational c = small(5);
                if (c != 0) qt.push_back({m, c});
            }
            spec.Q = Polynomial(r, qt);
        }
        if (spec.Q.is_zero() || spec.Q.degree() != 2) continue;

        Polynomial F;
        try {
            F = make_cyclide(spec);
        } catch (const AlgebraError&) {
            continue;
        }

        std::array<Rational, 3> cam{small(4), small(4), small(4)};
        ForwardInstance inst;
        try {
            inst.translated = translate_camera(F, cam);
            Polynomial U = apparent_contour(inst.translated);
            Polynomial Ap = absolute_quadric(plane_ring());
            auto [core, k] = trial_divide(U, Ap);
            int expect_k = cuspidal ? 3 : 2;
            if (k != expect_k) continue;
            if (core.degree() != 12 - 2 * expect_k) continue;
            // U1 must be reduced for the contour analysis downstream
            if (resultant(core, core.partial(0), 0).is_zero()) continue;
            inst.spec = spec;
            inst.surface = F;
            inst.camera = cam;
            inst.contour = U;
            inst.contour_core = core.primitive_part();
            inst.a_multiplicity = k;
            return inst;
        } catch (const AlgebraError&) {
            continue;
        }
    }
    throw AlgebraError("random_instance: retry budget exhausted");
}

}  // namespace cyclide
