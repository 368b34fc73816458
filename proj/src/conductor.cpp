#include "cyclide/conductor.hpp"

#include <map>

#include "cyclide/forward.hpp"
#include "cyclide/kernels.hpp"

namespace cyclide {

Ideal maximal_ideal_contribution(const SpecialPointCluster& cluster) {
    if (cluster.kind != ClusterKind::CuspOffCE && cluster.kind != ClusterKind::NodeOffCE &&
        cluster.kind != ClusterKind::NodeOnCE)
        throw AlgebraError("maximal_ideal_contribution applies to singular clusters");
    return cluster.radical;
}

Ideal cross_contribution(const ContourInput& input) {
    const RingPtr& r = input.U1.ring();
    Polynomial A = absolute_quadric(r);
    return Ideal(r, {input.U1, A.pow(input.k)});
}

Ideal mixed_derivative_ideal(const Polynomial& F, const Polynomial& G, const Rational& lambda) {
    if (lambda == 0) throw AlgebraError("mixed derivative ideal needs lambda != 0");
    if (!same_ring(F.ring(), G.ring())) throw AlgebraError("ring mismatch");
    const RingPtr& r = F.ring();
    std::vector<Polynomial> gens{F * G};
    Polynomial lam = Polynomial::constant(r, lambda);
    for (int v = 0; v < r->nvars(); ++v) {
        if (r->name(v) == "w") continue;  // plane coordinates only
        gens.push_back(F.partial(v) * G + lam * F * G.partial(v));
    }
    return Ideal(r, std::move(gens));
}

namespace {
Polynomial jac2(const Polynomial& p, const Polynomial& q, int u, int v) {
    return p.partial(u) * q.partial(v) - p.partial(v) * q.partial(u);
}
}  // namespace

Ideal mixed_jacobian_ideal(const Polynomial& F, const Polynomial& G, const Rational& lambda,
                           const Ideal& K) {
    if (lambda == 0) throw AlgebraError("mixed jacobian ideal needs lambda != 0");
    if (K.generators().empty()) throw AlgebraError("mixed jacobian ideal needs nonzero K");
    const RingPtr& r = F.ring();
    std::vector<int> vars;
    for (int v = 0; v < r->nvars(); ++v)
        if (r->name(v) != "w") vars.push_back(v);
    Polynomial lam = Polynomial::constant(r, lambda);
    const auto& H = K.generators();

    std::vector<Polynomial> gens;
    Polynomial FG = F * G;
    // (i) F*G times the jacobian ideal of K
    for (size_t i = 0; i < H.size(); ++i)
        for (size_t j = i + 1; j < H.size(); ++j)
            for (size_t a = 0; a < vars.size(); ++a)
                for (size_t b = a + 1; b < vars.size(); ++b)
                    gens.push_back(FG * jac2(H[i], H[j], vars[a], vars[b]));
    // (ii) K times the mixed derivative ideal
    Ideal mixed = mixed_derivative_ideal(F, G, lambda);
    for (const auto& h : H)
        for (const auto& m : mixed.generators()) gens.push_back(h * m);
    // (iii) Jac(F,H)G + lambda F Jac(G,H)
    for (const auto& h : H)
        for (size_t a = 0; a < vars.size(); ++a)
            for (size_t b = a + 1; b < vars.size(); ++b)
                gens.push_back(jac2(F, h, vars[a], vars[b]) * G +
                               lam * F * jac2(G, h, vars[a], vars[b]));
    return Ideal(r, std::move(gens));
}

namespace {

Ideal irrelevant_ideal(const RingPtr& r) {
    std::vector<Polynomial> gens;
    for (int v = 0; v < r->nvars(); ++v) gens.push_back(Polynomial::variable(r, v));
    return Ideal(r, std::move(gens));
}

}  // namespace

std::optional<Ideal> localize(const Ideal& candidate, const SpecialPointCluster& cluster,
                              int degree_cap) {
    const RingPtr& r = candidate.ring();
    Ideal irr = irrelevant_ideal(r);
    std::optional<Ideal> prev;
    for (int n = 1; n <= degree_cap + 2; ++n) {
        Ideal bump = sum(candidate, power(cluster.radical, n));
        Ideal sat = saturate(bump, irr);
        sat.groebner_basis();
        if (prev && ideal_equal(*prev, sat)) return sat;
        prev = std::move(sat);
    }
    return std::nullopt;
}

AssembleResult assemble(const RingPtr& ring, const std::vector<Ideal>& contributions) {
    AssembleResult res;
    Ideal C(ring, {Polynomial::constant(ring, 1)});
    for (const auto& I : contributions) C = intersect(C, I);

    auto deg6 = graded_piece(C, 6);
    auto deg7 = graded_piece(C, 7);
    res.dim6 = static_cast<int>(deg6.size());
    res.dim7 = static_cast<int>(deg7.size());
    if (res.dim6 != 1) {
        res.failed_line = 14;
        res.message = "conductor degree-6 slice has dimension " + std::to_string(res.dim6);
        return res;
    }
    if (res.dim7 != 4) {
        res.failed_line = 15;
        res.message = "conductor degree-7 slice has dimension " + std::to_string(res.dim7);
        return res;
    }
    ConductorPair pair;
    pair.G0 = deg6[0].primitive_part();
    pair.dim6 = res.dim6;
    pair.dim7 = res.dim7;

    // G1: canonical degree-7 element independent of x*G0, y*G0, z*G0
    std::vector<Polynomial> known{Polynomial::variable(ring, "x") * pair.G0,
                                  Polynomial::variable(ring, "y") * pair.G0,
                                  Polynomial::variable(ring, "z") * pair.G0};
    auto cols = monomials_of_degree(ring, 7);
    std::map<std::vector<int>, size_t> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i].exponents()] = i;
    auto row_of = [&](const Polynomial& p) {
        std::vector<Rational> row(cols.size(), Rational(0));
        for (const auto& t : p.terms()) row[col_of.at(t.mono.exponents())] = t.coeff;
        return row;
    };
    Rref span3 = rref(RatMatrix{row_of(known[0]), row_of(known[1]), row_of(known[2])});
    if (span3.rank != 3) {
        res.failed_line = 15;
        res.message = "multiples of G0 are linearly dependent";
        return res;
    }
    auto reduce_against = [&](std::vector<Rational> row, const Rref& red) {
        for (int i = 0; i < red.rank; ++i) {
            const Rational& c = row[static_cast<size_t>(red.pivots[static_cast<size_t>(i)])];
            if (c == 0) continue;
            Rational f = c;  // pivot rows are monic
            const auto& prow = red.rows[static_cast<size_t>(i)];
            for (size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
        }
        return row;
    };
    std::optional<Polynomial> g1;
    for (const auto& v : deg7) {
        std::vector<Rational> row = reduce_against(row_of(v), span3);
        bool zero = true;
        for (const auto& c : row) zero = zero && c == 0;
        if (zero) continue;  // multiple of G0: also a membership sanity check
        std::vector<Term> ts;
        for (size_t j = 0; j < cols.size(); ++j)
            if (row[j] != 0) ts.push_back({cols[j], row[j]});
        g1 = Polynomial(ring, std::move(ts)).primitive_part();
        break;
    }
    if (!g1) {
        res.failed_line = 15;
        res.message = "no degree-7 element independent of G0";
        return res;
    }
    // the three-dimensional known subspace must sit inside the slice
    Rref span7 = rref([&] {
        RatMatrix m;
        for (const auto& v : deg7) m.push_back(row_of(v));
        return m;
    }());
    for (const auto& k : known) {
        auto row = reduce_against(row_of(k), span7);
        for (const auto& c : row)
            if (c != 0) {
                res.failed_line = 15;
                res.message = "x,y,z multiples of G0 escape the degree-7 slice";
                return res;
            }
    }
    pair.G1 = *g1;
    pair.conductor = C;
    res.pair = std::move(pair);
    return res;
}

}  // namespace cyclide
