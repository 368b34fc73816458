#include <random>

#include "cyclide/kernels.hpp"
#include "doctest.h"

using namespace cyclide;

namespace {
RingPtr P2() { return make_ring({"x", "y", "z"}); }

Polynomial rand_poly(const RingPtr& r, std::mt19937_64& rng, int deg) {
    std::vector<Term> ts;
    for (int t = 0; t < 4; ++t) {
        Monomial m(r->nvars());
        int rest = deg;
        for (int v = 0; v < r->nvars(); ++v) {
            int e = static_cast<int>(rng() % static_cast<unsigned>(rest + 1));
            m.set(v, e);
            rest -= e;
        }
        ts.push_back({m, Rational(static_cast<long>(rng() % 13) - 6)});
    }
    return Polynomial(r, ts);
}
}  // namespace

TEST_CASE("bareiss agrees with cofactor expansion on integer matrices") {
    auto r = P2();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        PolyMatrix m(static_cast<size_t>(n), std::vector<Polynomial>());
        std::vector<std::vector<long>> raw(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                raw[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<long>(rng() % 11) - 5;
                m[static_cast<size_t>(i)].push_back(
                    Polynomial::constant(r, raw[static_cast<size_t>(i)][static_cast<size_t>(j)]));
            }
        // cofactor determinant over long double is inexact; do exact recursion
        auto det_rec = [&](auto&& self, std::vector<std::vector<long>> a) -> Rational {
            size_t k = a.size();
            if (k == 1) return Rational(a[0][0]);
            Rational acc = 0;
            for (size_t c = 0; c < k; ++c) {
                std::vector<std::vector<long>> minor;
                for (size_t i = 1; i < k; ++i) {
                    std::vector<long> row;
                    for (size_t j = 0; j < k; ++j)
                        if (j != c) row.push_back(a[i][j]);
                    minor.push_back(row);
                }
                Rational term = Rational(a[0][c]) * self(self, minor);
                acc += (c % 2 == 0) ? term : -term;
            }
            return acc;
        };
        Rational expected = det_rec(det_rec, raw);
        Polynomial det = bareiss_det(m, r);
        if (expected == 0)
            CHECK(det.is_zero());
        else
            CHECK(det == Polynomial::constant(r, expected));
    }
}

TEST_CASE("parallel kernels match serial reference") {
    auto r = P2();
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        PolyMatrix m(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[static_cast<size_t>(i)].push_back(rand_poly(r, rng, 2));
        CHECK(bareiss_det(m, r) == bareiss_det_serial(m, r));
    }
    for (int trial = 0; trial < 5; ++trial) {
        RatMatrix m(20, std::vector<Rational>(30));
        for (auto& row : m)
            for (auto& c : row) c = make_rational(Integer(static_cast<long>(rng() % 9) - 4), Integer(1 + static_cast<long>(rng() % 5)));
        Rref a = rref(m);
        Rref b = rref_serial(m);
        CHECK(a.rank == b.rank);
        CHECK(a.pivots == b.pivots);
        CHECK(a.rows == b.rows);
    }
}

TEST_CASE("solve_linear") {
    RatMatrix a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    auto x = solve_linear(a, {Rational(5), Rational(6)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(-4));
    CHECK((*x)[1] == make_rational(9, 2));

    RatMatrix sing{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
    CHECK(!solve_linear(sing, {Rational(0), Rational(1)}).has_value());
    bool under = false;
    auto y = solve_linear(sing, {Rational(1), Rational(2)}, &under);
    REQUIRE(y.has_value());
    CHECK(under);
}
