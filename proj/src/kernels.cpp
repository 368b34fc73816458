#include "cyclide/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyclide {

namespace {

Polynomial poly_divide_exact(const Polynomial& num, const Polynomial& den) {
    auto q = num.divided_exact(den);
    if (!q) throw AlgebraError("internal: Bareiss exact division failed");
    return *q;
}

template <bool Parallel>
Polynomial bareiss_impl(PolyMatrix m, const RingPtr& ring) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Polynomial::constant(ring, 1);
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw AlgebraError("Bareiss needs a square matrix");

    Polynomial prev = Polynomial::constant(ring, 1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { swap_row = i; break; }
            if (swap_row < 0) return Polynomial::zero(ring);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        const Polynomial& pivot = m[k][k];
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic) if (Parallel && (n - k) > 3)
#endif
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial t = m[i][j] * pivot - m[i][k] * m[k][j];
                m[i][j] = poly_divide_exact(t, prev);
            }
        }
        for (int i = k + 1; i < n; ++i) m[i][k] = Polynomial::zero(ring);
        prev = pivot;
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

template <bool Parallel>
Rref rref_impl(RatMatrix m) {
    Rref out;
    if (m.empty()) return out;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        {
            Rational inv = Rational(1) / m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] *= inv;
        }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel && rows > 8)
#endif
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(static_cast<size_t>(r));
    out.rows = std::move(m);
    out.rank = r;
    return out;
}

}  // namespace

Polynomial bareiss_det_serial(PolyMatrix m, const RingPtr& ring) {
    return bareiss_impl<false>(std::move(m), ring);
}

Polynomial bareiss_det(PolyMatrix m, const RingPtr& ring) {
    return bareiss_impl<true>(std::move(m), ring);
}

Rref rref_serial(RatMatrix m) { return rref_impl<false>(std::move(m)); }
Rref rref(RatMatrix m) { return rref_impl<true>(std::move(m)); }

std::optional<std::vector<Rational>> solve_linear(const RatMatrix& a,
                                                  const std::vector<Rational>& b,
                                                  bool* underdetermined) {
    if (a.size() != b.size()) throw AlgebraError("solve_linear shape mismatch");
    if (a.empty()) {
        if (underdetermined) *underdetermined = false;
        return std::vector<Rational>{};
    }
    const int cols = static_cast<int>(a[0].size());
    RatMatrix aug = a;
    for (size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
    Rref red = rref(std::move(aug));
    std::vector<Rational> x(static_cast<size_t>(cols), Rational(0));
    int main_rank = 0;
    for (int i = 0; i < red.rank; ++i) {
        if (red.pivots[static_cast<size_t>(i)] == cols) return std::nullopt;  // 0 = 1 row
        ++main_rank;
        x[static_cast<size_t>(red.pivots[static_cast<size_t>(i)])] =
            red.rows[static_cast<size_t>(i)].back();
    }
    if (underdetermined) *underdetermined = main_rank < cols;
    return x;
}

}  // namespace cyclide
