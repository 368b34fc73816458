#include "cyclide/ideal.hpp"

#include <algorithm>
#include <map>

#include "cyclide/kernels.hpp"

namespace cyclide {

namespace {

using TermVec = std::vector<Term>;

TermVec sorted_terms(const Polynomial& p, const TermOrder& ord) {
    TermVec v = p.terms();
    std::sort(v.begin(), v.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
    return v;
}

/// out = f[head..] + c * u * g, all vectors descending under ord.
TermVec axpy(const TermVec& f, size_t head, const Rational& c, const Monomial& u,
             const TermVec& g, const TermOrder& ord) {
    TermVec out;
    out.reserve(f.size() - head + g.size());
    size_t i = head, j = 0;
    while (i < f.size() && j < g.size()) {
        Monomial gm = g[j].mono * u;
        int cmp = ord.cmp(f[i].mono, gm);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back({std::move(gm), c * g[j].coeff});
            ++j;
        } else {
            Rational s = f[i].coeff + c * g[j].coeff;
            if (s != 0) out.push_back({f[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].mono * u, c * g[j].coeff});
    return out;
}

void make_primitive(TermVec& f) {
    if (f.empty()) return;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : f) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational c = make_rational(den_lcm, num_gcd);
    if (f[0].coeff < 0) c = -c;
    for (auto& t : f) t.coeff *= c;
}

struct GBElem {
    TermVec terms;
    int sugar = 0;
};

/// Full normal form of f against basis; sugar tracks the reduction degree.
TermVec reduce_full(TermVec f, const std::vector<GBElem>& basis, const TermOrder& ord,
                    int* sugar = nullptr) {
    TermVec out;
    size_t head = 0;
    while (head < f.size()) {
        const Term& lt = f[head];
        const GBElem* red = nullptr;
        for (const auto& g : basis) {
            if (!g.terms.empty() && g.terms[0].mono.divides(lt.mono)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            out.push_back(lt);
            ++head;
            continue;
        }
        Monomial u = red->terms[0].mono.quotient_of(lt.mono);
        Rational c = -lt.coeff / red->terms[0].coeff;
        if (sugar) *sugar = std::max(*sugar, red->sugar + u.deg());
        f = axpy(f, head, c, u, red->terms, ord);
        head = 0;
    }
    return out;
}

struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
};

int term_vec_degree(const TermVec& f) {
    int d = -1;
    for (const auto& t : f) d = std::max(d, t.mono.deg());
    return d;
}

/// Buchberger with the Gebauer-Moeller pair criteria and sugar selection.
std::vector<TermVec> buchberger(std::vector<TermVec> input, const TermOrder& ord) {
    std::vector<GBElem> basis;
    std::vector<Pair> pairs;

    auto add_element = [&](TermVec f, int sugar) {
        make_primitive(f);
        int h = static_cast<int>(basis.size());
        const Monomial& lth = f[0].mono;
        // new pairs against existing elements, pruned Gebauer-Moeller style
        std::vector<Pair> fresh;
        for (int g = 0; g < h; ++g) {
            Monomial l = Monomial::lcm(basis[static_cast<size_t>(g)].terms[0].mono, lth);
            int sug = std::max(
                sugar + l.deg() - lth.deg(),
                basis[static_cast<size_t>(g)].sugar + l.deg() -
                    basis[static_cast<size_t>(g)].terms[0].mono.deg());
            fresh.push_back({g, h, std::move(l), sug});
        }
        // criterion M/F: keep only pairs whose lcm is minimal among the fresh
        std::vector<Pair> kept;
        for (size_t a = 0; a < fresh.size(); ++a) {
            bool drop = false;
            for (size_t b = 0; b < fresh.size() && !drop; ++b) {
                if (a == b) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) &&
                    (fresh[a].lcm != fresh[b].lcm || b < a))
                    drop = true;
            }
            if (!drop) kept.push_back(fresh[a]);
        }
        // product criterion
        std::vector<Pair> surviving;
        for (auto& p : kept) {
            if (!Monomial::coprime(basis[static_cast<size_t>(p.i)].terms[0].mono, lth))
                surviving.push_back(std::move(p));
        }
        // chain criterion on old pairs
        std::vector<Pair> old_kept;
        for (auto& p : pairs) {
            const Monomial& li = basis[static_cast<size_t>(p.i)].terms[0].mono;
            const Monomial& lj = basis[static_cast<size_t>(p.j)].terms[0].mono;
            bool remove = lth.divides(p.lcm) && Monomial::lcm(li, lth) != p.lcm &&
                          Monomial::lcm(lj, lth) != p.lcm;
            if (!remove) old_kept.push_back(std::move(p));
        }
        pairs = std::move(old_kept);
        for (auto& p : surviving) pairs.push_back(std::move(p));
        basis.push_back({std::move(f), sugar});
    };

    for (auto& f : input) {
        if (f.empty()) continue;
        int sugar = term_vec_degree(f);
        TermVec r = reduce_full(std::move(f), basis, ord, &sugar);
        if (!r.empty()) add_element(std::move(r), sugar);
    }

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Pair& a = pairs[k];
            const Pair& b = pairs[best];
            if (a.sugar != b.sugar ? a.sugar < b.sugar
                                   : ord.cmp(a.lcm, b.lcm) < 0)
                best = k;
        }
        Pair p = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<long>(best));

        const GBElem& fi = basis[static_cast<size_t>(p.i)];
        const GBElem& fj = basis[static_cast<size_t>(p.j)];
        Monomial ui = fi.terms[0].mono.quotient_of(p.lcm);
        Monomial uj = fj.terms[0].mono.quotient_of(p.lcm);
        // S-polynomial: (1/lc_i) u_i f_i - (1/lc_j) u_j f_j
        TermVec shifted;
        shifted.reserve(fi.terms.size());
        Rational ci = Rational(1) / fi.terms[0].coeff;
        for (const auto& t : fi.terms) shifted.push_back({t.mono * ui, t.coeff * ci});
        TermVec s = axpy(shifted, 0, -Rational(1) / fj.terms[0].coeff, uj, fj.terms, ord);
        int sugar = p.sugar;
        TermVec r = reduce_full(std::move(s), basis, ord, &sugar);
        if (!r.empty()) add_element(std::move(r), sugar);
    }

    // minimal basis: drop elements whose lead is divisible by another lead
    std::vector<bool> keep(basis.size(), true);
    for (size_t a = 0; a < basis.size(); ++a) {
        for (size_t b = 0; b < basis.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            if (basis[b].terms[0].mono.divides(basis[a].terms[0].mono) &&
                (basis[b].terms[0].mono != basis[a].terms[0].mono || b < a))
                keep[a] = false;
        }
    }
    std::vector<GBElem> minimal;
    for (size_t a = 0; a < basis.size(); ++a)
        if (keep[a]) minimal.push_back(std::move(basis[a]));

    // tail reduction to the reduced basis
    std::vector<TermVec> reduced;
    for (size_t a = 0; a < minimal.size(); ++a) {
        std::vector<GBElem> others;
        for (size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        TermVec r = reduce_full(minimal[a].terms, others, ord, nullptr);
        if (!r.empty()) {
            make_primitive(r);
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const TermVec& x, const TermVec& y) {
        return ord.cmp(x[0].mono, y[0].mono) < 0;
    });
    return reduced;
}

RingPtr extend_front(const RingPtr& r, const std::string& name) {
    std::vector<std::string> names;
    names.push_back(name);
    for (const auto& n : r->names()) {
        if (n == name) throw AlgebraError("auxiliary variable clash: " + name);
        names.push_back(n);
    }
    return make_ring(std::move(names));
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens, TermOrder order)
    : ring_(std::move(ring)), order_(order) {
    for (auto& g : gens)
        if (!g.is_zero()) gens_.push_back(std::move(g));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
    if (!gb_) {
        std::vector<TermVec> input;
        input.reserve(gens_.size());
        for (const auto& g : gens_) input.push_back(sorted_terms(g, order_));
        auto reduced = buchberger(std::move(input), order_);
        std::vector<Polynomial> out;
        out.reserve(reduced.size());
        for (auto& f : reduced) out.push_back(Polynomial(ring_, std::move(f)));
        gb_ = std::move(out);
    }
    return *gb_;
}

Polynomial Ideal::normal_form(const Polynomial& p) const {
    const auto& gb = groebner_basis();
    std::vector<GBElem> basis;
    basis.reserve(gb.size());
    for (const auto& g : gb) basis.push_back({sorted_terms(g, order_), 0});
    TermVec r = reduce_full(sorted_terms(p, order_), basis, order_, nullptr);
    return Polynomial(ring_, std::move(r));
}

bool Ideal::is_unit_ideal() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb[0].is_constant();
}

Ideal Ideal::with_order(const TermOrder& order) const {
    return Ideal(ring_, gens_, order);
}

Ideal sum(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw AlgebraError("ideal ring mismatch");
    std::vector<Polynomial> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens), a.order());
}

Ideal power(const Ideal& a, int n) {
    if (n < 1) throw AlgebraError("ideal power needs n >= 1");
    std::vector<Polynomial> cur = a.generators();
    for (int k = 1; k < n; ++k) {
        std::vector<Polynomial> next;
        for (const auto& f : cur)
            for (const auto& g : a.generators()) next.push_back(f * g);
        // dedupe up to scalar via primitive parts
        std::vector<Polynomial> uniq;
        for (auto& f : next) {
            Polynomial p = f.primitive_part();
            bool seen = false;
            for (const auto& q : uniq)
                if (q == p) { seen = true; break; }
            if (!seen) uniq.push_back(std::move(p));
        }
        cur = std::move(uniq);
    }
    return Ideal(a.ring(), std::move(cur), a.order());
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw AlgebraError("ideal ring mismatch");
    if (a.generators().empty()) return a;
    if (b.generators().empty()) return b;
    RingPtr ext = extend_front(a.ring(), "@t");
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * f.mapped_to(ext));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.mapped_to(ext));
    Ideal scaffold(ext, std::move(gens), TermOrder::elimination(1));
    std::vector<Polynomial> result;
    for (const auto& f : scaffold.groebner_basis())
        if (f.degree_in(0) == 0) result.push_back(f.mapped_to(a.ring()));
    return Ideal(a.ring(), std::move(result), a.order());
}

Ideal quotient(const Ideal& a, const Polynomial& g) {
    if (g.is_zero()) throw AlgebraError("quotient by zero");
    Ideal cap = intersect(a, Ideal(a.ring(), {g}, a.order()));
    std::vector<Polynomial> gens;
    for (const auto& f : cap.groebner_basis()) {
        auto q = f.divided_exact(g);
        if (!q) throw AlgebraError("internal: intersection not divisible in quotient");
        gens.push_back(std::move(*q));
    }
    return Ideal(a.ring(), std::move(gens), a.order());
}

Ideal quotient(const Ideal& a, const Ideal& b) {
    if (b.generators().empty()) throw AlgebraError("quotient by zero ideal");
    bool first = true;
    Ideal acc;
    for (const auto& g : b.generators()) {
        Ideal q = quotient(a, g);
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& a, const Polynomial& g) {
    if (g.is_zero()) throw AlgebraError("saturation by zero");
    if (g.is_constant() || a.generators().empty()) return a;
    RingPtr ext = extend_front(a.ring(), "@t");
    Polynomial t = Polynomial::variable(ext, 0);
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(f.mapped_to(ext));
    gens.push_back(t * g.mapped_to(ext) - Polynomial::constant(ext, 1));
    Ideal scaffold(ext, std::move(gens), TermOrder::elimination(1));
    std::vector<Polynomial> result;
    for (const auto& f : scaffold.groebner_basis())
        if (f.degree_in(0) == 0) result.push_back(f.mapped_to(a.ring()));
    return Ideal(a.ring(), std::move(result), a.order());
}

Ideal saturate(const Ideal& a, const Ideal& b) {
    if (b.generators().empty()) throw AlgebraError("saturation by zero ideal");
    if (b.generators().size() == 1) return saturate(a, b.generators()[0]);
    Ideal cur = a;
    for (;;) {
        Ideal next = quotient(cur, b);
        if (ideal_equal(next, cur)) return cur;
        cur = std::move(next);
    }
}

Ideal eliminate(const Ideal& a, const std::vector<int>& vars) {
    const RingPtr& r = a.ring();
    std::vector<bool> front(static_cast<size_t>(r->nvars()), false);
    for (int v : vars) {
        if (v < 0 || v >= r->nvars()) throw AlgebraError("eliminate: bad variable");
        front[static_cast<size_t>(v)] = true;
    }
    std::vector<std::string> names;
    for (int i = 0; i < r->nvars(); ++i)
        if (front[static_cast<size_t>(i)]) names.push_back(r->name(i));
    const int nfront = static_cast<int>(names.size());
    for (int i = 0; i < r->nvars(); ++i)
        if (!front[static_cast<size_t>(i)]) names.push_back(r->name(i));
    RingPtr ext = make_ring(std::move(names));
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(f.mapped_to(ext));
    Ideal scaffold(ext, std::move(gens), TermOrder::elimination(nfront));
    std::vector<Polynomial> result;
    for (const auto& f : scaffold.groebner_basis()) {
        bool free_of_front = true;
        for (int i = 0; i < nfront && free_of_front; ++i)
            if (f.degree_in(i) > 0) free_of_front = false;
        if (free_of_front) result.push_back(f.mapped_to(r));
    }
    return Ideal(r, std::move(result), a.order());
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) {
    std::vector<Monomial> out;
    const int n = ring->nvars();
    std::vector<int> e(static_cast<size_t>(n), 0);
    // lexicographic enumeration over exponent vectors
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == n - 1) {
            e[static_cast<size_t>(var)] = rest;
            out.push_back(Monomial(e));
            return;
        }
        for (int k = rest; k >= 0; --k) {
            e[static_cast<size_t>(var)] = k;
            self(self, var + 1, rest - k);
        }
    };
    rec(rec, 0, d);
    // canonical grevlex descending
    TermOrder ord = TermOrder::grevlex();
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.cmp(a, b) > 0; });
    return out;
}

std::vector<Polynomial> graded_piece(const Ideal& a, int d) {
    if (d < 0) throw AlgebraError("graded_piece: negative degree");
    const RingPtr& ring = a.ring();
    const auto& gb = a.groebner_basis();
    std::vector<Monomial> cols = monomials_of_degree(ring, d);
    std::map<std::vector<int>, int> col_of;
    for (size_t i = 0; i < cols.size(); ++i)
        col_of[cols[i].exponents()] = static_cast<int>(i);

    RatMatrix rows;
    for (const auto& g : gb) {
        if (!g.is_homogeneous()) throw AlgebraError("graded_piece needs homogeneous ideal");
        int e = g.degree();
        if (e > d || e < 0) continue;
        for (const auto& m : monomials_of_degree(ring, d - e)) {
            std::vector<Rational> row(cols.size(), Rational(0));
            for (const auto& t : g.terms())
                row[static_cast<size_t>(col_of.at((t.mono * m).exponents()))] = t.coeff;
            rows.push_back(std::move(row));
        }
    }
    Rref red = rref(std::move(rows));
    std::vector<Polynomial> out;
    for (const auto& row : red.rows) {
        std::vector<Term> terms;
        for (size_t c = 0; c < cols.size(); ++c)
            if (row[c] != 0) terms.push_back({cols[c], row[c]});
        out.push_back(Polynomial(ring, std::move(terms)).primitive_part());
    }
    return out;
}

int graded_dim(const Ideal& a, int d) { return static_cast<int>(graded_piece(a, d).size()); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) return false;
    if (a.order() == b.order()) {
        const auto& ga = a.groebner_basis();
        const auto& gb = b.groebner_basis();
        if (ga.size() != gb.size()) return false;
        for (size_t i = 0; i < ga.size(); ++i)
            if (!(ga[i] == gb[i])) return false;
        return true;
    }
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    for (const auto& g : b.generators())
        if (!a.contains(g)) return false;
    return true;
}

}  // namespace cyclide
