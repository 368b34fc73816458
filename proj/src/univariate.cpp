#include "cyclide/univariate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

namespace cyclide {
namespace uni {

int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly trim(ZPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

ZPoly scale(const ZPoly& a, const Integer& c) {
    if (c == 0) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

ZPoly derivative(const ZPoly& f) {
    if (f.size() <= 1) return {};
    ZPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * static_cast<long>(i);
    return trim(std::move(r));
}

Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive(const ZPoly& f) {
    if (f.empty()) return f;
    Integer c = content(f);
    if (f.back() < 0) c = -c;
    ZPoly r = f;
    for (auto& x : r) x /= c;
    return r;
}

ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw AlgebraError("univariate division by zero");
    ZPoly rem = a;
    ZPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
    while (deg(rem) >= deg(b)) {
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
        if (r != 0) throw AlgebraError("inexact univariate division");
        int shift = deg(rem) - deg(b);
        quot[shift] = q;
        for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= q * b[i];
        rem = trim(std::move(rem));
    }
    if (!rem.empty()) throw AlgebraError("inexact univariate division");
    return trim(std::move(quot));
}

bool divides(const ZPoly& b, const ZPoly& a) {
    if (a.empty()) return true;
    if (b.empty() || deg(b) > deg(a)) return false;
    ZPoly rem = a;
    while (deg(rem) >= deg(b)) {
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
        if (r != 0) return false;
        int shift = deg(rem) - deg(b);
        for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= q * b[i];
        rem = trim(std::move(rem));
    }
    return rem.empty();
}

// lc(b)^(deg a - deg b + 1) * a mod b
static ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    int d = deg(a) - deg(b);
    if (d < 0) return a;
    const Integer lb = b.back();
    int steps = d + 1;
    while (steps-- > 0) {
        if (a.empty() || deg(a) < deg(b)) {
            for (auto& c : a) c *= lb;
            continue;
        }
        Integer top = a.back();
        int shift = deg(a) - deg(b);
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= top * b[i];
        a = trim(std::move(a));
    }
    return a;
}

ZPoly gcd(ZPoly a, ZPoly b) {
    a = primitive(trim(std::move(a)));
    b = primitive(trim(std::move(b)));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = primitive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::pair<ZPoly, int>> squarefree(const ZPoly& f0) {
    ZPoly f = primitive(trim(f0));
    std::vector<std::pair<ZPoly, int>> out;
    if (deg(f) < 1) return out;
    ZPoly fp = derivative(f);
    ZPoly g = gcd(f, fp);
    if (deg(g) == 0) {
        out.push_back({f, 1});
        return out;
    }
    ZPoly w = divide_exact(f, g);
    ZPoly y = divide_exact(fp, g);
    ZPoly z = sub(y, derivative(w));
    int i = 1;
    while (deg(w) > 0) {
        ZPoly h = gcd(w, z);
        if (deg(h) > 0) out.push_back({h, i});
        w = divide_exact(w, h);
        y = divide_exact(z, h);
        z = sub(y, derivative(w));
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus factorization
// ---------------------------------------------------------------------------

namespace {

using std::uint64_t;

uint64_t mulmod_u(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((__uint128_t)a * b % p);
}

uint64_t powmod_u(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u(r, a, p);
        a = mulmod_u(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u(uint64_t a, uint64_t p) { return powmod_u(a % p, p - 2, p); }

using MPoly = std::vector<uint64_t>;  // dense mod-p poly, no trailing zeros

MPoly mtrim(MPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int mdeg(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

MPoly mmul(const MPoly& a, const MPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod_u(a[i], b[j], p)) % p;
    }
    return mtrim(std::move(r));
}

MPoly msub(const MPoly& a, const MPoly& b, uint64_t p) {
    MPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    return mtrim(std::move(r));
}

void mdivmod(const MPoly& a, const MPoly& b, uint64_t p, MPoly& q, MPoly& r) {
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    uint64_t inv = invmod_u(b.back(), p);
    while (mdeg(r) >= mdeg(b)) {
        uint64_t c = mulmod_u(r.back(), inv, p);
        int shift = mdeg(r) - mdeg(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[i + shift] = (r[i + shift] + p - mulmod_u(c, b[i], p)) % p;
        r = mtrim(std::move(r));
    }
    q = mtrim(std::move(q));
}

MPoly mmod(const MPoly& a, const MPoly& b, uint64_t p) {
    MPoly q, r;
    mdivmod(a, b, p, q, r);
    return r;
}

MPoly mdiv(const MPoly& a, const MPoly& b, uint64_t p) {
    MPoly q, r;
    mdivmod(a, b, p, q, r);
    return q;
}

MPoly mmonic(MPoly a, uint64_t p) {
    if (a.empty()) return a;
    uint64_t inv = invmod_u(a.back(), p);
    for (auto& c : a) c = mulmod_u(c, inv, p);
    return a;
}

MPoly mgcd(MPoly a, MPoly b, uint64_t p) {
    while (!b.empty()) {
        MPoly r = mmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mmonic(std::move(a), p);
}

MPoly mpowmod(MPoly base, Integer e, const MPoly& f, uint64_t p) {
    MPoly r{1};
    base = mmod(base, f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mmod(mmul(r, base, p), f, p);
        e >>= 1;
        if (e > 0) base = mmod(mmul(base, base, p), f, p);
    }
    return r;
}

void equal_degree_split(const MPoly& f, int d, uint64_t p, std::mt19937_64& rng,
                        std::vector<MPoly>& out) {
    if (mdeg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer exponent;
    mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    for (;;) {
        MPoly r(static_cast<size_t>(mdeg(f)), 0);
        for (auto& c : r) c = rng() % p;
        r = mtrim(std::move(r));
        if (mdeg(r) < 1) continue;
        MPoly g = mgcd(f, r, p);
        if (mdeg(g) <= 0 || mdeg(g) >= mdeg(f)) {
            MPoly h = mpowmod(r, exponent, f, p);
            if (h.empty())
                h = MPoly{p - 1};
            else
                h[0] = (h[0] + p - 1) % p;
            h = mtrim(std::move(h));
            g = mgcd(f, h, p);
        }
        if (mdeg(g) > 0 && mdeg(g) < mdeg(f)) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(mmonic(mdiv(f, g, p), p), d, p, rng, out);
            return;
        }
    }
}

std::vector<MPoly> factor_mod_p(MPoly f, uint64_t p, std::mt19937_64& rng) {
    std::vector<MPoly> out;
    f = mmonic(std::move(f), p);
    const MPoly x{0, 1};
    MPoly h = x;  // x^(p^i) mod f
    int i = 0;
    while (mdeg(f) >= 1) {
        ++i;
        if (2 * i > mdeg(f)) {
            out.push_back(f);
            break;
        }
        h = mpowmod(h, Integer(static_cast<unsigned long>(p)), f, p);
        MPoly g = mgcd(f, msub(h, x, p), p);
        if (mdeg(g) > 0) {
            equal_degree_split(g, i, p, rng, out);
            f = mmonic(mdiv(f, g, p), p);
            h = mmod(h, f, p);
        }
    }
    return out;
}

// ---- Hensel lifting over Z/p^k ---------------------------------------------

using LPoly = ZPoly;  // coefficients reduced into [0, m)

LPoly lred(LPoly f, const Integer& m) {
    for (auto& c : f) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

LPoly lmul(const LPoly& a, const LPoly& b, const Integer& m) {
    return lred(mul(a, b), m);
}

LPoly ladd(const LPoly& a, const LPoly& b, const Integer& m) { return lred(add(a, b), m); }
LPoly lsub(const LPoly& a, const LPoly& b, const Integer& m) { return lred(sub(a, b), m); }

// divmod by a monic divisor over Z/m
void ldivmod_monic(const LPoly& a, const LPoly& h, const Integer& m, LPoly& q, LPoly& r) {
    r = a;
    q.assign(a.size() >= h.size() ? a.size() - h.size() + 1 : 0, Integer(0));
    while (deg(r) >= deg(h)) {
        int shift = deg(r) - deg(h);
        Integer c = r.back();
        q[shift] = c;
        for (size_t i = 0; i < h.size(); ++i) r[i + shift] -= c * h[i];
        r = lred(std::move(r), m);
    }
    q = lred(std::move(q), m);
}

struct HenselPair {
    LPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m), h monic
};

// one quadratic Hensel step: modulus m -> m^2 (Modern Computer Algebra, 15.10)
HenselPair hensel_step(const LPoly& f, const HenselPair& in, const Integer& m) {
    Integer m2 = m * m;
    LPoly fr = lred(f, m2);
    LPoly e = lsub(fr, lmul(in.g, in.h, m2), m2);
    LPoly q, r;
    ldivmod_monic(lmul(in.s, e, m2), in.h, m2, q, r);
    LPoly g2 = ladd(ladd(in.g, lmul(in.t, e, m2), m2), lmul(q, in.g, m2), m2);
    LPoly h2 = ladd(in.h, r, m2);
    LPoly b = lsub(ladd(lmul(in.s, g2, m2), lmul(in.t, h2, m2), m2), LPoly{Integer(1)}, m2);
    LPoly c, d;
    ldivmod_monic(lmul(in.s, b, m2), h2, m2, c, d);
    LPoly s2 = lsub(in.s, d, m2);
    LPoly t2 = lsub(lsub(in.t, lmul(in.t, b, m2), m2), lmul(c, g2, m2), m2);
    return {g2, h2, s2, t2};
}

LPoly from_mpoly(const MPoly& a) {
    LPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
    return r;
}

// extended Euclid mod p: s*g + t*h = 1 with deg s < deg h, deg t < deg g
void bezout_mod_p(const MPoly& g, const MPoly& h, uint64_t p, MPoly& s, MPoly& t) {
    MPoly r0 = g, r1 = h;
    MPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        MPoly q, rem;
        mdivmod(r0, r1, p, q, rem);
        MPoly s2 = msub(s0, mmul(q, s1, p), p);
        MPoly t2 = msub(t0, mmul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    uint64_t inv = invmod_u(r0.back(), p);
    for (auto& c : s0) c = mulmod_u(c, inv, p);
    for (auto& c : t0) c = mulmod_u(c, inv, p);
    s = std::move(s0);
    t = std::move(t0);
}

// Lift the factorization f = lc(f) * prod(factors) (mod p) to modulus >= target.
// Emits each lifted factor, monic mod the final modulus, together with that
// modulus (the same for all).
void lift_tree(const LPoly& f, const std::vector<MPoly>& factors, uint64_t p,
               const Integer& target, Integer& final_modulus, std::vector<LPoly>& out) {
    if (factors.size() == 1) {
        Integer m = Integer(static_cast<unsigned long>(p));
        while (m < target) m = m * m;
        final_modulus = m;
        LPoly g = lred(f, m);
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), g.back().get_mpz_t(), m.get_mpz_t()) == 0)
            throw AlgebraError("internal: leading coefficient not a unit in lift");
        for (auto& c : g) {
            c *= inv;
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        }
        out.push_back(std::move(g));
        return;
    }
    size_t half = factors.size() / 2;
    MPoly G{1}, H{1};
    for (size_t i = 0; i < half; ++i) G = mmul(G, factors[i], p);
    for (size_t i = half; i < factors.size(); ++i) H = mmul(H, factors[i], p);
    {
        Integer pz(static_cast<unsigned long>(p)), r;
        mpz_mod(r.get_mpz_t(), f.back().get_mpz_t(), pz.get_mpz_t());
        uint64_t lc = static_cast<uint64_t>(r.get_ui());
        for (auto& c : G) c = mulmod_u(c, lc, p);
    }
    MPoly s, t;
    bezout_mod_p(G, H, p, s, t);
    HenselPair pair{from_mpoly(G), from_mpoly(H), from_mpoly(s), from_mpoly(t)};
    Integer m(static_cast<unsigned long>(p));
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m = m * m;
    }
    std::vector<MPoly> left(factors.begin(), factors.begin() + half);
    std::vector<MPoly> right(factors.begin() + half, factors.end());
    lift_tree(pair.g, left, p, m, final_modulus, out);
    lift_tree(pair.h, right, p, m, final_modulus, out);
}

Integer symmetric_rep(Integer c, const Integer& m) {
    if (c * 2 > m) c -= m;
    return c;
}

Integer l2_norm_bound(const ZPoly& f) {
    Integer s = 0;
    for (const auto& c : f) s += c * c;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

bool is_prime_u(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// factor a primitive squarefree polynomial with positive leading coefficient
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
    if (deg(f) <= 1) return {f};
    std::mt19937_64 rng(0xC0FFEEuLL + static_cast<uint64_t>(deg(f)));

    // prime with invertible lc and squarefree reduction
    uint64_t p = 0;
    MPoly fp;
    for (uint64_t cand = 101; cand < 100000; cand += 2) {
        if (!is_prime_u(cand)) continue;
        Integer lcm_mod;
        mpz_mod_ui(lcm_mod.get_mpz_t(), f.back().get_mpz_t(), cand);
        if (lcm_mod == 0) continue;
        MPoly g(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            Integer r;
            mpz_mod_ui(r.get_mpz_t(), f[i].get_mpz_t(), cand);
            g[i] = r.get_ui();
        }
        g = mtrim(std::move(g));
        MPoly gp(g.size() - 1);
        for (size_t i = 1; i < g.size(); ++i) gp[i - 1] = mulmod_u(g[i], i % cand, cand);
        gp = mtrim(std::move(gp));
        if (mdeg(mgcd(g, gp, cand)) == 0) {
            p = cand;
            fp = std::move(g);
            break;
        }
    }
    if (!p) throw AlgebraError("no suitable prime found for factorization");

    std::vector<MPoly> modular = factor_mod_p(fp, p, rng);
    std::sort(modular.begin(), modular.end());
    if (modular.size() == 1) return {f};

    // Landau-Mignotte bound for coefficients of lc(f)*g, g | f
    Integer bound = l2_norm_bound(f) * abs(f.back());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(deg(f) + 1));
    Integer target = 2 * bound + 1;

    Integer modulus;
    std::vector<LPoly> lifted;
    lift_tree(f, modular, p, target, modulus, lifted);

    // subset recombination
    std::vector<ZPoly> result;
    ZPoly rest = f;
    std::vector<int> live(lifted.size());
    std::iota(live.begin(), live.end(), 0);
    size_t take = 1;
    while (2 * take <= live.size()) {
        bool found = false;
        std::vector<size_t> idx(take);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            LPoly cand{rest.back()};
            for (size_t i : idx) cand = lmul(cand, lifted[static_cast<size_t>(live[i])], modulus);
            for (auto& c : cand) c = symmetric_rep(c, modulus);
            ZPoly g = primitive(trim(std::move(cand)));
            if (!g.empty() && deg(g) >= 1 && divides(g, rest)) {
                result.push_back(g);
                rest = divide_exact(rest, g);
                std::vector<int> next;
                for (size_t i = 0, k = 0; i < live.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) { ++k; continue; }
                    next.push_back(live[i]);
                }
                live = std::move(next);
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] ==
                                   live.size() - take + static_cast<size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (size_t j = static_cast<size_t>(pos) + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++take;
    }
    if (deg(rest) >= 1) result.push_back(primitive(rest));
    std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return result;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> factor(const ZPoly& f0) {
    ZPoly f = primitive(trim(f0));
    std::vector<std::pair<ZPoly, int>> out;
    if (deg(f) < 1) return out;
    for (const auto& [part, mult] : squarefree(f)) {
        for (const auto& irr : factor_squarefree(part)) out.push_back({irr, mult});
    }
    return out;
}

}  // namespace uni

// ---------------------------------------------------------------------------
// Polynomial-level wrappers: effectively univariate and binary forms
// ---------------------------------------------------------------------------

namespace {

struct UniView {
    std::vector<int> active;  // active variable indices (size 1 or 2)
    bool homogeneous_pair = false;
    int strip_a = 0, strip_b = 0;  // stripped powers of active[0] / active[1]
    uni::ZPoly dense;              // dehomogenized at active[1] when pair
    int hom_degree = 0;            // degree of the dehomogenized part
};

UniView to_univariate_view(const Polynomial& p) {
    if (p.is_zero()) throw AlgebraError("zero polynomial");
    const auto& ring = p.ring();
    UniView v;
    for (int i = 0; i < ring->nvars(); ++i)
        if (p.degree_in(i) > 0) v.active.push_back(i);
    if (v.active.size() > 2)
        throw AlgebraError("polynomial is not univariate or a binary form");
    if (v.active.size() == 2 && !p.is_homogeneous())
        throw AlgebraError("two-variable input must be a binary homogeneous form");
    v.homogeneous_pair = v.active.size() == 2;

    int va = v.active.empty() ? 0 : v.active[0];
    int vb = v.active.size() == 2 ? v.active[1] : -1;

    // strip pure powers of the active variables
    int min_a = INT32_MAX, min_b = INT32_MAX;
    for (const auto& t : p.terms()) {
        min_a = std::min(min_a, t.mono[va]);
        if (vb >= 0) min_b = std::min(min_b, t.mono[vb]);
    }
    v.strip_a = v.active.empty() ? 0 : min_a;
    v.strip_b = vb >= 0 ? min_b : 0;

    // dense coefficients in u = va (after dehomogenizing at vb)
    Rational content = p.content();
    int dmax = 0;
    for (const auto& t : p.terms()) dmax = std::max(dmax, t.mono[va] - v.strip_a);
    uni::ZPoly dense(static_cast<size_t>(dmax) + 1, Integer(0));
    for (const auto& t : p.terms()) {
        Rational c = t.coeff / content;
        if (c.get_den() != 1)
            throw AlgebraError("internal: content failed to clear denominators");
        dense[static_cast<size_t>(t.mono[va] - v.strip_a)] += c.get_num();
    }
    v.dense = uni::trim(std::move(dense));
    v.hom_degree = dmax;
    return v;
}

Polynomial from_dense(const RingPtr& ring, const uni::ZPoly& f, int va, int vb, int hom_deg) {
    // rehomogenize: coefficient of u^i becomes va^i * vb^(hom_deg - i)
    std::vector<Term> terms;
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        Monomial m(ring->nvars());
        m.set(va, static_cast<int>(i));
        if (vb >= 0) m.set(vb, hom_deg - static_cast<int>(i));
        terms.push_back({std::move(m), Rational(f[i])});
    }
    return Polynomial(ring, std::move(terms));
}

std::vector<FactorMult> decompose_common(const Polynomial& p, bool full_factor) {
    UniView v = to_univariate_view(p);
    const auto& ring = p.ring();
    std::vector<FactorMult> out;
    int va = v.active.empty() ? -1 : v.active[0];
    int vb = v.active.size() == 2 ? v.active[1] : -1;
    if (va >= 0 && v.strip_a > 0)
        out.push_back({Polynomial::variable(ring, va), v.strip_a});
    if (vb >= 0 && v.strip_b > 0)
        out.push_back({Polynomial::variable(ring, vb), v.strip_b});
    if (uni::deg(v.dense) >= 1) {
        auto parts = full_factor ? uni::factor(v.dense) : uni::squarefree(v.dense);
        for (const auto& [f, mult] : parts)
            out.push_back({from_dense(ring, f, va, vb, uni::deg(f)).primitive_part(), mult});
    }
    return out;
}

}  // namespace

std::vector<FactorMult> squarefree_decompose(const Polynomial& p) {
    return decompose_common(p, false);
}

std::vector<FactorMult> factor_univariate(const Polynomial& p) {
    if (p.degree() > 20)
        throw AlgebraError("factor_univariate degree bound (20) exceeded");
    return decompose_common(p, true);
}

}  // namespace cyclide
