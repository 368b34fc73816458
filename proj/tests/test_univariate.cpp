#include <algorithm>
#include <random>

#include "cyclide/resultant.hpp"
#include "cyclide/univariate.hpp"
#include "doctest.h"

using namespace cyclide;

namespace {
RingPtr P2() { return make_ring({"x", "y", "z"}); }
Polynomial pp(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

Polynomial reassemble(const RingPtr& r, const std::vector<FactorMult>& fs) {
    Polynomial p = Polynomial::constant(r, 1);
    for (const auto& f : fs) p *= f.factor.pow(f.multiplicity);
    return p;
}

bool contains_factor(const std::vector<FactorMult>& fs, const Polynomial& f, int mult) {
    for (const auto& g : fs)
        if (g.multiplicity == mult && proportional(g.factor, f)) return true;
    return false;
}
}  // namespace

TEST_CASE("squarefree decomposition of binary forms") {
    auto r = P2();
    auto fs = squarefree_decompose(pp(r, "y^2*z^3*(y+z)"));
    CHECK(fs.size() == 3);
    CHECK(contains_factor(fs, pp(r, "y"), 2));
    CHECK(contains_factor(fs, pp(r, "z"), 3));
    CHECK(contains_factor(fs, pp(r, "y+z"), 1));
    CHECK(proportional(reassemble(r, fs), pp(r, "y^2*z^3*(y+z)")));

    auto sf = squarefree_decompose(pp(r, "y^3 - y*z^2 + z^3"));
    CHECK(sf.size() == 1);
    CHECK(sf[0].multiplicity == 1);
    CHECK(proportional(sf[0].factor, pp(r, "y^3 - y*z^2 + z^3")));
}

TEST_CASE("factor_univariate small cases") {
    auto r = P2();
    auto f1 = factor_univariate(pp(r, "x^2 - z^2"));
    CHECK(f1.size() == 2);
    CHECK(contains_factor(f1, pp(r, "x-z"), 1));
    CHECK(contains_factor(f1, pp(r, "x+z"), 1));

    auto f2 = factor_univariate(pp(r, "x^2 + z^2"));
    CHECK(f2.size() == 1);
    CHECK(contains_factor(f2, pp(r, "x^2+z^2"), 1));

    // (x^2-2)^2 (x^3-x-1), dehomogenized univariate case
    auto rx = make_ring({"x"});
    auto f3 = factor_univariate(
        Polynomial::parse(rx, "(x^2-2)*(x^2-2)*(x^3-x-1)"));
    CHECK(f3.size() == 2);
    CHECK(contains_factor(f3, Polynomial::parse(rx, "x^2-2"), 2));
    CHECK(contains_factor(f3, Polynomial::parse(rx, "x^3-x-1"), 1));

    CHECK_THROWS_AS(factor_univariate(Polynomial::parse(rx, "x^21+x+1")), AlgebraError);
}

TEST_CASE("factor reconstruction identities on random inputs") {
    auto rx = make_ring({"x"});
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        // random product of small irreducible-ish polynomials, degree <= 16
        Polynomial p = Polynomial::constant(rx, 1 + static_cast<long>(rng() % 3));
        int deg = 0;
        while (deg < 12) {
            int d = 1 + static_cast<int>(rng() % 3);
            std::vector<Term> ts;
            for (int k = 0; k <= d; ++k) {
                long c = static_cast<long>(rng() % 11) - 5;
                if (k == d && c == 0) c = 1;
                if (c == 0) continue;
                Monomial m(1);
                m.set(0, k);
                ts.push_back({m, Rational(c)});
            }
            Polynomial f(rx, ts);
            if (f.degree() < 1) continue;
            int mult = 1 + static_cast<int>(rng() % 2);
            p *= f.pow(mult);
            deg += d * mult;
        }
        auto fs = factor_univariate(p);
        CHECK(proportional(reassemble(rx, fs), p));
        for (const auto& f : fs) {
            // factors squarefree and pairwise coprime
            auto sf = squarefree_decompose(f.factor);
            CHECK(sf.size() == 1);
            CHECK(sf[0].multiplicity == 1);
        }
        for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = i + 1; j < fs.size(); ++j)
                CHECK(!proportional(fs[i].factor, fs[j].factor));
    }
}

TEST_CASE("squarefree reconstruction on random inputs") {
    auto r = P2();
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = Polynomial::constant(r, 1);
        int deg = 0;
        while (deg < 10) {
            long a = static_cast<long>(rng() % 9) - 4;
            long b = static_cast<long>(rng() % 9) - 4;
            if (a == 0 && b == 0) a = 1;
            Polynomial f = Polynomial::constant(r, a) * pp(r, "y") +
                           Polynomial::constant(r, b) * pp(r, "z");
            if (f.is_zero()) continue;
            int mult = 1 + static_cast<int>(rng() % 3);
            p *= f.pow(mult);
            deg += mult;
        }
        auto fs = squarefree_decompose(p);
        CHECK(proportional(reassemble(r, fs), p));
        for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = i + 1; j < fs.size(); ++j) CHECK(!proportional(fs[i].factor, fs[j].factor));
    }
}
