#include "cyclide/reconstruct.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyclide/forward.hpp"
#include "cyclide/kernels.hpp"
#include "cyclide/resultant.hpp"
#include "cyclide/univariate.hpp"

namespace cyclide {

namespace {

Ideal irrelevant_of(const RingPtr& r) {
    std::vector<Polynomial> gens;
    for (int v = 0; v < r->nvars(); ++v) gens.push_back(Polynomial::variable(r, v));
    return Ideal(r, std::move(gens));
}

/// canonical element of `piece` independent of the span of `known`
std::optional<Polynomial> complement_element(const RingPtr& ring, int degree,
                                             const std::vector<Polynomial>& piece,
                                             const std::vector<Polynomial>& known) {
    auto cols = monomials_of_degree(ring, degree);
    std::map<std::vector<int>, size_t> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i].exponents()] = i;
    auto row_of = [&](const Polynomial& p) {
        std::vector<Rational> row(cols.size(), Rational(0));
        for (const auto& t : p.terms()) row[col_of.at(t.mono.exponents())] = t.coeff;
        return row;
    };
    RatMatrix km;
    for (const auto& k : known) km.push_back(row_of(k));
    Rref red = rref(std::move(km));
    for (const auto& v : piece) {
        auto row = row_of(v);
        for (int i = 0; i < red.rank; ++i) {
            const Rational& c = row[static_cast<size_t>(red.pivots[static_cast<size_t>(i)])];
            if (c == 0) continue;
            Rational f = c;
            const auto& prow = red.rows[static_cast<size_t>(i)];
            for (size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
        }
        bool zero = true;
        for (const auto& c : row) zero = zero && c == 0;
        if (zero) continue;
        std::vector<Term> ts;
        for (size_t j = 0; j < cols.size(); ++j)
            if (row[j] != 0) ts.push_back({cols[j], row[j]});
        return Polynomial(ring, std::move(ts)).primitive_part();
    }
    return std::nullopt;
}

}  // namespace

LiftResult lift_contour(const Polynomial& U, const ConductorPair& pair) {
    LiftResult res;
    const RingPtr r = surface_ring();
    Polynomial u = U.mapped_to(r);
    Polynomial g0 = pair.G0.mapped_to(r);
    Polynomial g1 = pair.G1.mapped_to(r);
    Polynomial graph = Polynomial::variable(r, "w") * g0 - g1;

    Ideal J = saturate(Ideal(r, {u, graph}), g0);
    auto check = [&](const Ideal& I) {
        res.dim3 = graded_dim(I, 3);
        res.dim4 = graded_dim(I, 4);
        return res.dim3 == 1 && res.dim4 == 5;
    };
    if (!check(J)) {
        Ideal sat = saturate(J, irrelevant_of(r));
        if (!check(sat)) {
            res.failed_line = 19;
            res.message = "lifted contour ideal has slice dimensions (" +
                          std::to_string(res.dim3) + "," + std::to_string(res.dim4) +
                          "), expected (1,5)";
            return res;
        }
        J = std::move(sat);
    }
    ContourIdeal out;
    out.H0 = graded_piece(J, 3)[0].primitive_part();
    std::vector<Polynomial> known;
    for (const auto& v : {"x", "y", "z", "w"})
        known.push_back(Polynomial::variable(r, v) * out.H0);
    auto h1 = complement_element(r, 4, graded_piece(J, 4), known);
    if (!h1) {
        res.failed_line = 19;
        res.message = "no quartic independent of the cubic multiples";
        return res;
    }
    out.H1 = *h1;
    out.ideal = std::move(J);
    res.contour = std::move(out);
    return res;
}

Polynomial integrate_w(const Polynomial& H0) {
    const RingPtr& r = H0.ring();
    int wi = r->index("w");
    std::vector<Term> ts;
    for (const auto& t : H0.terms()) {
        Monomial m = t.mono;
        int e = m[wi];
        m.set(wi, e + 1);
        ts.push_back({std::move(m), t.coeff / (e + 1)});
    }
    return Polynomial(r, std::move(ts));
}

AnsatzResult solve_ansatz(const Polynomial& H2, const Polynomial& H0, const Polynomial& H1) {
    AnsatzResult res;
    const RingPtr& r = H0.ring();
    int wi = r->index("w");
    std::vector<Polynomial> cols{Polynomial::variable(r, "x") * H0,
                                 Polynomial::variable(r, "y") * H0,
                                 Polynomial::variable(r, "z") * H0,
                                 Polynomial::variable(r, "w") * H0, H1};
    // equations: coefficients of every monomial with positive w-degree
    std::map<std::vector<int>, size_t> row_of;
    auto touch = [&](const Polynomial& p) {
        for (const auto& t : p.terms())
            if (t.mono[wi] > 0) row_of.try_emplace(t.mono.exponents(), row_of.size());
    };
    touch(H2);
    for (const auto& c : cols) touch(c);
    RatMatrix A(row_of.size(), std::vector<Rational>(5, Rational(0)));
    std::vector<Rational> b(row_of.size(), Rational(0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& t : cols[j].terms())
            if (t.mono[wi] > 0) A[row_of.at(t.mono.exponents())][j] = t.coeff;
    for (const auto& t : H2.terms())
        if (t.mono[wi] > 0) b[row_of.at(t.mono.exponents())] = t.coeff;

    bool under = false;
    auto x = solve_linear(A, b, &under);
    if (!x) {
        res.message = "ansatz system inconsistent";
        return res;
    }
    res.underdetermined = under;
    Polynomial F0 = Polynomial::zero(r);
    for (size_t j = 0; j < 5; ++j) {
        res.c[j] = (*x)[j];
        F0 += Polynomial::constant(r, (*x)[j]) * cols[j];
    }
    res.F0 = std::move(F0);
    return res;
}

// ---------------------------------------------------------------------------
// infinity-plane recovery
// ---------------------------------------------------------------------------

namespace {

/// roots in Q of a univariate-in-one-ring-variable polynomial
std::vector<Rational> rational_roots(const Polynomial& p) {
    std::vector<Rational> out;
    if (p.is_zero()) throw AlgebraError("rational_roots of zero polynomial");
    for (const auto& f : factor_univariate(p)) {
        if (f.factor.degree() != 1) continue;
        // c1 * v + c0
        int var = -1;
        for (int i = 0; i < p.ring()->nvars(); ++i)
            if (f.factor.degree_in(i) > 0) var = i;
        if (var < 0) continue;
        Rational c1 = f.factor.coeff_of(var, 1).leading_coeff();
        Polynomial c0p = f.factor.coeff_of(var, 0);
        Rational c0 = c0p.is_zero() ? Rational(0) : c0p.leading_coeff();
        out.push_back(-c0 / c1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// the generator of I ∩ Q[var] for a zero-dimensional ideal; nullopt when
/// the intersection is zero (positive-dimensional situation)
std::optional<Polynomial> univariate_generator(const Ideal& I, int var) {
    std::vector<int> others;
    for (int v = 0; v < I.ring()->nvars(); ++v)
        if (v != var) others.push_back(v);
    Ideal eli = eliminate(I, others);
    std::optional<Polynomial> gen;
    for (const auto& g : eli.groebner_basis()) {
        bool uni = true;
        for (int v : others) uni = uni && g.degree_in(v) == 0;
        if (!uni) continue;
        if (!gen)
            gen = g;
        else if (g.degree() < gen->degree())
            gen = g;
    }
    return gen;
}

/// rational points of a zero-dimensional ideal in a small ring, by
/// univariate elimination per variable and verification
std::vector<std::vector<Rational>> rational_points(const Ideal& I) {
    const RingPtr& r = I.ring();
    const int n = r->nvars();
    std::vector<std::vector<Rational>> candidates{{}};
    // per-variable candidate values from elimination
    for (int v = 0; v < n; ++v) {
        auto gen = univariate_generator(I, v);
        if (!gen || gen->is_zero()) throw AlgebraError("positive-dimensional solution set");
        std::vector<Rational> vals =
            gen->is_constant() ? std::vector<Rational>{} : rational_roots(*gen);
        std::vector<std::vector<Rational>> next;
        for (const auto& tuple : candidates)
            for (const auto& val : vals) {
                auto t = tuple;
                t.push_back(val);
                next.push_back(std::move(t));
            }
        candidates = std::move(next);
        if (candidates.empty()) return {};
    }
    std::vector<std::vector<Rational>> out;
    std::vector<int> all(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
    for (const auto& t : candidates) {
        bool ok = true;
        for (const auto& g : I.generators()) {
            if (!g.evaluated(all, t).is_zero()) { ok = false; break; }
        }
        if (ok) out.push_back(t);
    }
    return out;
}

}  // namespace

InfinityPlaneResult recover_infinity_plane(const Polynomial& F0) {
    InfinityPlaneResult res;
    const RingPtr rabc = make_ring({"a", "b", "c", "x", "y", "z"});
    const RingPtr r3 = make_ring({"a", "b", "c"});
    const RingPtr& rp = F0.ring();

    // H0 = dF0/dw evaluated at w -> -(ax+by+cz) must lie in <A>
    Polynomial H0 = F0.partial(rp->index("w"));
    RingPtr rall = make_ring({"a", "b", "c", "x", "y", "z", "w"});
    Polynomial shift = -(Polynomial::variable(rall, "a") * Polynomial::variable(rall, "x") +
                         Polynomial::variable(rall, "b") * Polynomial::variable(rall, "y") +
                         Polynomial::variable(rall, "c") * Polynomial::variable(rall, "z"));
    Polynomial cubic = H0.mapped_to(rall).substituted(rall->index("w"), shift).mapped_to(rabc);
    Polynomial rem = Ideal(rabc, {absolute_quadric(rabc)}).normal_form(cubic);

    // collect the coefficient system over (a,b,c)
    int xi = rabc->index("x"), yi = rabc->index("y"), zi = rabc->index("z");
    std::map<std::vector<int>, Polynomial> eqs;
    for (const auto& t : rem.terms()) {
        std::vector<int> key{t.mono[xi], t.mono[yi], t.mono[zi]};
        Monomial abc_part(rabc->nvars());
        abc_part.set(0, t.mono[0]);
        abc_part.set(1, t.mono[1]);
        abc_part.set(2, t.mono[2]);
        auto [it, fresh] = eqs.try_emplace(key, Polynomial::zero(rabc));
        it->second += Polynomial::monomial(rabc, abc_part, t.coeff);
    }
    std::vector<Polynomial> gens;
    for (auto& [key, p] : eqs)
        if (!p.is_zero()) gens.push_back(p.mapped_to(r3));
    if (gens.empty()) {
        // every (a,b,c) kills the w-slice: degenerate, positive-dimensional
        res.ambiguous = true;
        res.message = "derivative condition vanishes identically";
        return res;
    }
    Ideal I(r3, std::move(gens));
    if (I.is_unit_ideal()) {
        res.message = "no rational infinity plane";
        return res;
    }
    try {
        for (const auto& pt : rational_points(I))
            res.solutions.push_back({pt[0], pt[1], pt[2]});
    } catch (const AlgebraError& e) {
        res.ambiguous = true;
        res.message = e.what();
        return res;
    }
    if (res.solutions.empty()) res.message = "no rational infinity plane";
    return res;
}

std::optional<CandidateSurface> finalize(const Polynomial& F0, const std::array<Rational, 3>& abc,
                                         const Polynomial& U, std::string* diagnostic) {
    const RingPtr& r = F0.ring();
    int wi = r->index("w");
    Polynomial shift = Polynomial::variable(r, wi) -
                       (Polynomial::constant(r, abc[0]) * Polynomial::variable(r, "x") +
                        Polynomial::constant(r, abc[1]) * Polynomial::variable(r, "y") +
                        Polynomial::constant(r, abc[2]) * Polynomial::variable(r, "z"));
    Polynomial F = F0.substituted(wi, shift).primitive_part();
    if (F.is_zero() || F.degree() != 4 || !F.is_homogeneous()) {
        if (diagnostic) *diagnostic = "shifted surface is not a quartic";
        return std::nullopt;
    }
    Polynomial A = absolute_quadric(r);
    Polynomial w0 = F.substituted(wi, Polynomial::zero(r));
    auto alpha = w0.divided_exact(A * A);
    if (!alpha || !alpha->is_constant() || alpha->is_zero()) {
        if (diagnostic) *diagnostic = "w-free slice is not a nonzero multiple of A^2";
        return std::nullopt;
    }
    Polynomial dslice = F.partial(wi).substituted(wi, Polynomial::zero(r));
    if (!dslice.is_zero() && !dslice.divided_exact(A)) {
        if (diagnostic) *diagnostic = "derivative slice escapes <A>";
        return std::nullopt;
    }
    Polynomial disc = discriminant(F, wi).mapped_to(U.ring());
    if (!proportional(disc, U)) {
        if (diagnostic)
            *diagnostic = "internal error: discriminant of the candidate differs from the input";
        return std::nullopt;
    }
    return CandidateSurface{F, abc};
}

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

namespace {

struct ClusterOptions {
    const SpecialPointCluster* cluster;
    std::optional<Ideal> contribution;  // ideal used when the cluster contributes
    std::string failure;                // non-empty when the contribution is unavailable
};

std::vector<GuessReport> evaluate_attempt(const ContourAnalysis& analysis,
                                          const std::vector<ClusterOptions>& options,
                                          const Polynomial& original_U, const GuessVector& guess,
                                          int guess_index,
                                          const std::vector<std::pair<int, bool>>& variant) {
    GuessReport base;
    base.guess_index = guess_index;
    base.guess = guess;
    base.node_on_ce_variant = variant;

    const RingPtr& pr = analysis.input.U1.ring();
    std::vector<Ideal> contributions;
    auto contribution_of = [&](int cluster_id) -> const ClusterOptions& {
        for (const auto& o : options)
            if (o.cluster->id == cluster_id) return o;
        throw AlgebraError("internal: unknown cluster id");
    };
    for (size_t i = 0; i < guess.cluster_ids.size(); ++i) {
        if (!guess.contribute[i]) continue;
        const ClusterOptions& o = contribution_of(guess.cluster_ids[i]);
        if (!o.failure.empty() || !o.contribution) {
            base.failed_line = 14;
            base.message = "contribution unavailable: " + o.failure;
            return {base};
        }
        contributions.push_back(*o.contribution);
    }
    for (const auto& [cid, on] : variant) {
        if (!on) continue;
        const ClusterOptions& o = contribution_of(cid);
        if (!o.failure.empty() || !o.contribution) {
            base.failed_line = 14;
            base.message = "contribution unavailable: " + o.failure;
            return {base};
        }
        contributions.push_back(*o.contribution);
    }

    AssembleResult asm_res = assemble(pr, contributions);
    base.dim6 = asm_res.dim6;
    base.dim7 = asm_res.dim7;
    if (!asm_res.pair) {
        base.failed_line = asm_res.failed_line;
        base.message = asm_res.message;
        return {base};
    }

    LiftResult lift = lift_contour(analysis.input.U, *asm_res.pair);
    if (!lift.contour) {
        base.failed_line = lift.failed_line;
        base.message = lift.message;
        return {base};
    }
    base.contour_degrees = {lift.contour->H0.degree(), lift.contour->H1.degree()};

    Polynomial H2 = integrate_w(lift.contour->H0);
    AnsatzResult ansatz = solve_ansatz(H2, lift.contour->H0, lift.contour->H1);
    if (!ansatz.F0) {
        base.failed_line = 24;
        base.message = ansatz.message;
        return {base};
    }
    if (ansatz.underdetermined) {
        base.failed_line = 24;
        base.message = "ansatz system underdetermined";
        return {base};
    }

    InfinityPlaneResult planes = recover_infinity_plane(*ansatz.F0);
    if (planes.solutions.empty()) {
        base.failed_line = 24;
        base.message = planes.ambiguous ? "infinity-plane system not zero-dimensional: " + planes.message
                                        : planes.message;
        return {base};
    }

    std::vector<GuessReport> out;
    Mat3 inverse = analysis.rotation.transposed();
    for (const auto& abc : planes.solutions) {
        GuessReport rep = base;
        std::string diag;
        auto cand = finalize(*ansatz.F0, abc, analysis.input.U, &diag);
        if (!cand) {
            rep.failed_line = 24;
            rep.message = diag;
            out.push_back(std::move(rep));
            continue;
        }
        // map back to the original coordinates and re-verify end to end
        CandidateSurface final_cand;
        final_cand.abc = cand->abc;
        final_cand.F = rotate_xyz(cand->F, inverse).primitive_part();
        Polynomial disc = discriminant(final_cand.F, final_cand.F.ring()->index("w"))
                              .mapped_to(original_U.ring());
        if (!proportional(disc, original_U.primitive_part())) {
            rep.failed_line = 24;
            rep.message = "internal error: back-rotated discriminant mismatch";
            out.push_back(std::move(rep));
            continue;
        }
        rep.success = true;
        rep.surface = std::move(final_cand);
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace

ReconstructionRun run_all_guesses(const Polynomial& U, const ReconstructionOptions& opts) {
    ReconstructionRun run;
    run.analysis = analyze_contour(U, opts.seed);
    const ContourAnalysis& analysis = run.analysis;
    const ContourInput& in = analysis.input;

    // force shared caches before the parallel loop
    std::vector<ClusterOptions> options;
    std::vector<int> node_on_ce_ids;
    for (const auto& c : analysis.clusters) {
        ClusterOptions o;
        o.cluster = &c;
        try {
            switch (c.kind) {
                case ClusterKind::CuspOffCE:
                case ClusterKind::NodeOffCE:
                    o.contribution = maximal_ideal_contribution(c);
                    break;
                case ClusterKind::NodeOnCE: {
                    node_on_ce_ids.push_back(c.id);
                    auto loc = localize(cross_contribution(in), c);
                    if (!loc) o.failure = "localization did not stabilize";
                    else o.contribution = *loc;
                    break;
                }
                case ClusterKind::TransversalCE: {
                    auto loc = localize(cross_contribution(in), c);
                    if (!loc) o.failure = "localization did not stabilize";
                    else o.contribution = *loc;
                    break;
                }
                case ClusterKind::TangentialCE: {
                    Polynomial A = absolute_quadric(in.U1.ring());
                    Ideal formula =
                        in.cuspidal()
                            ? mixed_jacobian_ideal(in.U1, A, Rational(-9), power(c.radical, 2))
                            : mixed_derivative_ideal(in.U1, A, Rational(-4));
                    auto loc = localize(formula, c);
                    if (!loc) o.failure = "localization did not stabilize";
                    else o.contribution = *loc;
                    break;
                }
            }
        } catch (const AlgebraError& e) {
            o.failure = e.what();
        }
        if (o.contribution) o.contribution->groebner_basis();
        options.push_back(std::move(o));
    }

    std::vector<GuessVector> guesses =
        enumerate_guesses(analysis.clusters, opts.guess_limit, opts.isolated_bound);

    // attempts = guesses x NodeOnCE variant assignments (none / cross per cluster)
    struct Attempt {
        int guess_index;
        std::vector<std::pair<int, bool>> variant;
    };
    std::vector<Attempt> attempts;
    const size_t vcount = size_t{1} << node_on_ce_ids.size();
    for (size_t gi = 0; gi < guesses.size(); ++gi)
        for (size_t vm = 0; vm < vcount; ++vm) {
            Attempt a;
            a.guess_index = static_cast<int>(gi);
            for (size_t k = 0; k < node_on_ce_ids.size(); ++k)
                a.variant.push_back({node_on_ce_ids[k], ((vm >> k) & 1) != 0});
            attempts.push_back(std::move(a));
        }

    std::vector<std::vector<GuessReport>> slots(attempts.size());
#ifdef _OPENMP
    if (opts.jobs > 0) omp_set_num_threads(opts.jobs);
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < static_cast<long>(attempts.size()); ++idx) {
        const Attempt& a = attempts[static_cast<size_t>(idx)];
        try {
            slots[static_cast<size_t>(idx)] =
                evaluate_attempt(analysis, options, U, guesses[static_cast<size_t>(a.guess_index)],
                                 a.guess_index, a.variant);
        } catch (const AlgebraError& e) {
            GuessReport rep;
            rep.guess_index = a.guess_index;
            rep.guess = guesses[static_cast<size_t>(a.guess_index)];
            rep.node_on_ce_variant = a.variant;
            rep.failed_line = 24;
            rep.message = std::string("unexpected failure: ") + e.what();
            slots[static_cast<size_t>(idx)] = {rep};
        }
    }
    for (auto& s : slots)
        for (auto& rep : s) {
            run.any_success = run.any_success || rep.success;
            run.reports.push_back(std::move(rep));
        }
    return run;
}

}  // namespace cyclide
