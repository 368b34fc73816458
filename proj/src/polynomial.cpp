#include "cyclide/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cyclide {

namespace {
const TermOrder kCanonical = TermOrder::grevlex();

bool term_greater(const Term& a, const Term& b) {
    return kCanonical.cmp(a.mono, b.mono) > 0;
}
}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(const RingPtr& r, const Rational& c) {
    Polynomial p(r);
    if (c != 0) p.terms_.push_back({Monomial(r->nvars()), c});
    return p;
}

Polynomial Polynomial::variable(const RingPtr& r, int idx, int power) {
    if (idx < 0 || idx >= r->nvars()) throw AlgebraError("variable index out of range");
    Monomial m(r->nvars());
    m.set(idx, power);
    Polynomial p(r);
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::variable(const RingPtr& r, const std::string& name, int power) {
    int idx = r->index(name);
    if (idx < 0) throw AlgebraError("unknown variable: " + name);
    return variable(r, idx, power);
}

Polynomial Polynomial::monomial(const RingPtr& r, Monomial m, Rational c) {
    Polynomial p(r);
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.deg());
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return terms_.empty() ? -1 : d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_[0].mono.deg();
    for (const auto& t : terms_)
        if (t.mono.deg() != d) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw AlgebraError("variable-list mismatch");
    Polynomial r(ring_ ? ring_ : o.ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = kCanonical.cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw AlgebraError("variable-list mismatch");
    Polynomial r(ring_ ? ring_ : o.ring_);
    if (terms_.empty() || o.terms_.empty()) return r;
    // Accumulate into a map keyed by exponent vector, then sort once.
    std::map<std::vector<int>, Rational> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            auto [it, fresh] = acc.try_emplace(m.exponents(), 0);
            it->second += a.coeff * b.coeff;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({Monomial(e), std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;  // order preserved under multiplication by a fixed monomial
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) throw AlgebraError("negative power");
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (n) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

Polynomial Polynomial::partial(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw AlgebraError("unknown variable");
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        int e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        r.terms_.push_back({std::move(m), t.coeff * e});
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::partial(const std::string& var) const {
    int idx = ring_->index(var);
    if (idx < 0) throw AlgebraError("unknown variable: " + var);
    return partial(idx);
}

Polynomial Polynomial::substituted(int var, const Polynomial& value) const {
    if (var < 0 || var >= ring_->nvars()) throw AlgebraError("unknown variable");
    if (!same_ring(ring_, value.ring())) throw AlgebraError("variable-list mismatch");
    // Horner-style: group by exponent of var.
    int d = degree_in(var);
    if (d <= 0 && !(d == 0)) return *this;
    std::vector<Polynomial> slices(static_cast<size_t>(std::max(d, 0)) + 1, Polynomial(ring_));
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        int e = m[var];
        m.set(var, 0);
        slices[e].terms_.push_back({std::move(m), t.coeff});
    }
    for (auto& s : slices) s.normalize();
    Polynomial r = slices[d];
    for (int e = d - 1; e >= 0; --e) r = r * value + slices[e];
    return r;
}

Polynomial Polynomial::substituted(const std::string& var, const Polynomial& value) const {
    int idx = ring_->index(var);
    if (idx < 0) throw AlgebraError("unknown variable: " + var);
    return substituted(idx, value);
}

Polynomial Polynomial::substituted_many(const std::vector<int>& vars,
                                        const std::vector<Polynomial>& images) const {
    if (vars.size() != images.size()) throw AlgebraError("substitution arity mismatch");
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        Polynomial factor = Polynomial::constant(ring_, t.coeff);
        for (size_t k = 0; k < vars.size(); ++k) {
            int e = m[vars[k]];
            if (e) {
                m.set(vars[k], 0);
                factor *= images[k].pow(e);
            }
        }
        r += factor.times_monomial(m, Rational(1));
    }
    return r;
}

Polynomial Polynomial::evaluated(const std::vector<int>& vars,
                                 const std::vector<Rational>& values) const {
    Polynomial r(ring_);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        Rational c = t.coeff;
        for (size_t k = 0; k < vars.size(); ++k) {
            int e = m[vars[k]];
            if (e) {
                m.set(vars[k], 0);
                Rational v = values[k];
                for (int j = 0; j < e; ++j) c *= v;
            }
        }
        if (c != 0) out.push_back({std::move(m), std::move(c)});
    }
    Polynomial res(ring_, std::move(out));
    return res;
}

Polynomial Polynomial::coeff_of(int var, int k) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        if (t.mono[var] == k) {
            Monomial m = t.mono;
            m.set(var, 0);
            r.terms_.push_back({std::move(m), t.coeff});
        }
    }
    r.normalize();
    return r;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (leading_coeff() < 0) c = -c;
    return scaled(Rational(1) / c);
}

std::optional<Polynomial> Polynomial::divided_exact(const Polynomial& d) const {
    if (d.is_zero()) throw AlgebraError("division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(ring_);
    const Term& dl = d.leading();
    while (!rem.is_zero()) {
        const Term& rl = rem.leading();
        if (!dl.mono.divides(rl.mono)) return std::nullopt;
        Monomial q = dl.mono.quotient_of(rl.mono);
        Rational c = rl.coeff / dl.coeff;
        quot.terms_.push_back({q, c});
        rem -= d.times_monomial(q, c);
    }
    quot.normalize();
    return quot;
}

Polynomial Polynomial::mapped_to(const RingPtr& target) const {
    std::vector<int> map(ring_->nvars(), -1);
    for (int i = 0; i < ring_->nvars(); ++i) map[i] = target->index(ring_->name(i));
    Polynomial r(target);
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (map[i] < 0)
                throw AlgebraError("variable " + ring_->name(i) + " missing in target ring");
            m.set(map[i], t.mono[i]);
        }
        r.terms_.push_back({std::move(m), t.coeff});
    }
    r.normalize();
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool coeff_shown = (c != 1) || t.mono.is_one();
        if (coeff_shown) os << c.get_str();
        bool need_star = coeff_shown;
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = t.mono[i];
            if (!e) continue;
            if (need_star) os << "*";
            os << ring_->name(i);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw AlgebraError("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Integer parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Integer(s.substr(start, pos - start));
    }

    int parse_small_int() {
        Integer v = parse_integer();
        if (!v.fits_sint_p()) fail("exponent too large");
        return static_cast<int>(v.get_si());
    }

    std::string parse_identifier() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected variable");
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    // factor := integer [/ integer] | var [^ int] | ( polynomial )
    Polynomial parse_factor() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Polynomial p = parse_sum();
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) return p.pow(parse_small_int());
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_integer();
            if (eat('/')) {
                Integer den = parse_integer();
                if (den == 0) fail("zero denominator");
                return Polynomial::constant(ring, make_rational(num, den));
            }
            if (eat('^')) {
                int e = parse_small_int();
                Integer r;
                mpz_pow_ui(r.get_mpz_t(), num.get_mpz_t(), e);
                return Polynomial::constant(ring, Rational(r));
            }
            return Polynomial::constant(ring, Rational(num));
        }
        std::string name = parse_identifier();
        int idx = ring->index(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        int e = 1;
        if (eat('^')) e = parse_small_int();
        if (e < 0) fail("negative exponent");
        return Polynomial::variable(ring, idx, e);
    }

    // term := factor (['*'] factor)*, where juxtaposed variables need '*'
    Polynomial parse_term() {
        Polynomial p = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                p *= parse_factor();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
                p *= parse_factor();
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial parse_sum() {
        Polynomial p(ring);
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial t = parse_term();
        p = neg ? -t : t;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Polynomial u = parse_term();
                p = (c == '+') ? p + u : p - u;
            } else {
                break;
            }
        }
        return p;
    }
};

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text) {
    Parser parser{ring, text};
    Polynomial p = parser.parse_sum();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return p;
}

}  // namespace cyclide
