#ifndef CYCLIDE_RING_HPP
#define CYCLIDE_RING_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclide {

struct AlgebraError : std::runtime_error {
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

/// Ordered list of variable names shared by all polynomials of a ring.
class Ring {
public:
    explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw AlgebraError("ring needs at least one variable");
    }

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    int index(const std::string& v) const {
        for (int i = 0; i < nvars(); ++i)
            if (names_[i] == v) return i;
        return -1;
    }

    bool operator==(const Ring& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const Ring>(std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<int> e)
        : e_(std::move(e)), deg_(std::accumulate(e_.begin(), e_.end(), 0)) {}

    int nvars() const { return static_cast<int>(e_.size()); }
    int deg() const { return deg_; }
    int operator[](int i) const { return e_[i]; }

    void set(int i, int v) {
        deg_ += v - e_[i];
        e_[i] = v;
    }

    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// Quotient, valid only when *this divides o is false the other way:
    /// caller guarantees divisibility.
    Monomial quotient_of(const Monomial& num) const {
        Monomial r(num);
        for (int i = 0; i < nvars(); ++i) r.e_[i] -= e_[i];
        r.deg_ -= deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        int d = 0;
        for (int i = 0; i < a.nvars(); ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.nvars(); ++i)
            if (a.e_[i] && b.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    const std::vector<int>& exponents() const { return e_; }

private:
    std::vector<int> e_;
    int deg_ = 0;
};

/// Monomial orders. Grevlex is the canonical order everywhere; Block is a
/// product of two grevlex blocks, eliminating the first `block` variables.
enum class OrderKind { Grevlex, Block };

struct TermOrder {
    OrderKind kind = OrderKind::Grevlex;
    int block = 0;  // size of the front (eliminated) block

    static TermOrder grevlex() { return TermOrder{OrderKind::Grevlex, 0}; }
    static TermOrder elimination(int front) { return TermOrder{OrderKind::Block, front}; }

    // grevlex on a variable range [lo,hi): higher degree wins; ties broken by
    // the last differing exponent, smaller exponent wins.
    static int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    /// -1, 0, 1 for a < b, a == b, a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        const int n = a.nvars();
        if (kind == OrderKind::Grevlex)
            return cmp_grevlex_range(a, b, 0, n);
        int c = cmp_grevlex_range(a, b, 0, block);
        if (c) return c;
        return cmp_grevlex_range(a, b, block, n);
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    bool operator==(const TermOrder& o) const { return kind == o.kind && block == o.block; }
};

}  // namespace cyclide

#endif
