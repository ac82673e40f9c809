#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Dense univariate polynomial over Q, coefficients ascending in degree.
// The zero polynomial stores nothing and has degree -1.
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static RationalPolynomial constant(const Rational& r) { return RationalPolynomial({r}); }
    static RationalPolynomial monomial(const Rational& r, size_t k) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = r;
        return RationalPolynomial(std::move(c));
    }
    static RationalPolynomial x() { return monomial(1, 1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& coefficient(size_t k) const {
        static const Rational kZero(0);
        return k < c_.size() ? c_[k] : kZero;
    }
    const Rational& leading() const {
        static const Rational kZero(0);
        return c_.empty() ? kZero : c_.back();
    }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational eval(const Rational& v) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a + (-b);
    }
    RationalPolynomial operator-() const {
        RationalPolynomial r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const Rational& s) {
        RationalPolynomial r(a);
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }
    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a) { return a * s; }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.c_ == b.c_;
    }

    RationalPolynomial derivative() const {
        if (c_.size() < 2) return {};
        std::vector<Rational> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return RationalPolynomial(std::move(c));
    }

    // Euclidean division: *this = q * b + r with deg r < deg b.
    void divmod(const RationalPolynomial& b, RationalPolynomial& q, RationalPolynomial& r) const {
        if (b.is_zero()) throw PipelineError("polynomial division by zero");
        std::vector<Rational> rem = c_;
        std::vector<Rational> quo;
        long db = b.degree();
        if (degree() >= db) quo.assign(static_cast<size_t>(degree() - db) + 1, Rational(0));
        while (static_cast<long>(rem.size()) - 1 >= db) {
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (static_cast<long>(rem.size()) - 1 < db) break;
            size_t k = rem.size() - 1 - static_cast<size_t>(db);
            Rational f = rem.back() / b.leading();
            quo[k] = f;
            for (long i = 0; i <= db; ++i)
                rem[k + static_cast<size_t>(i)] -= f * b.c_[static_cast<size_t>(i)];
        }
        q = RationalPolynomial(std::move(quo));
        r = RationalPolynomial(std::move(rem));
    }

    // Whether *this divides b exactly; on success quotient lands in q.
    bool divides_into(const RationalPolynomial& b, RationalPolynomial& q) const {
        RationalPolynomial r;
        b.divmod(*this, q, r);
        return r.is_zero();
    }

    // Multiplicity of the rational root v (0 if not a root).
    long multiplicity_at(const Rational& v) const {
        RationalPolynomial p = *this;
        RationalPolynomial lin({-v, Rational(1)});
        long k = 0;
        while (!p.is_zero() && p.eval(v) == 0) {
            RationalPolynomial q;
            if (!lin.divides_into(p, q)) break;
            p = q;
            ++k;
        }
        return k;
    }

    RationalPolynomial monic() const {
        if (is_zero()) return {};
        return *this * (Rational(1) / leading());
    }

    bool is_monic() const { return !is_zero() && leading() == 1; }

    // true if only even-degree coefficients are present
    bool even_part_only() const {
        for (size_t i = 1; i < c_.size(); i += 2)
            if (c_[i] != 0) return false;
        return true;
    }

    // lcm of coefficient denominators: D * this has integer coefficients
    Integer denominator_lcm() const {
        Integer d(1);
        for (const auto& x : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
        return d;
    }

    // gcd of numerators of D * this: the integer content of the scaled polynomial
    Integer integer_content() const {
        Integer d = denominator_lcm();
        Integer g(0);
        for (const auto& x : c_) {
            Integer n = x.get_num() * (d / x.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
        return g;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            const Rational& a = c_[i];
            if (a == 0) continue;
            Rational mag = a > 0 ? a : Rational(-a);
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            bool unit = (mag == 1) && i > 0;
            if (!unit) os << mag.get_str();
            if (i > 0) {
                if (!unit) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// --- GF(p) kernels --------------------------------------------------------
//
// Small toolbox behind the irreducibility probe and the mod-p multiplicity
// profiles.  Polynomials are ascending coefficient vectors of residues; all
// moduli are odd primes well below 2^31 so products fit in 64 bits.
namespace gfp {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint64_t powmod_u(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod_u(a, p - 2, p); }

// Reduction of a rational polynomial mod p; fails only when a denominator
// vanishes mod p.  The degree may drop.
inline std::optional<Poly> reduce_any(const RationalPolynomial& f, std::uint64_t p) {
    Poly r;
    r.reserve(f.coefficients().size());
    for (const auto& x : f.coefficients()) {
        Integer den = x.get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) return std::nullopt;
        std::uint64_t n = mpz_fdiv_ui(x.get_num().get_mpz_t(), static_cast<unsigned long>(p));
        std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p));
        r.push_back(n * invmod(d, p) % p);
    }
    trim(r);
    return r;
}

// Degree-preserving reduction: additionally fails when the leading
// coefficient vanishes mod p (which would silently drop the degree).
inline std::optional<Poly> reduce(const RationalPolynomial& f, std::uint64_t p) {
    auto r = reduce_any(f, p);
    if (r && !f.is_zero() && (r->empty() || r->back() == 0)) return std::nullopt;
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

inline Poly mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    std::uint64_t linv = invmod(m.back(), p);
    while (a.size() >= m.size()) {
        std::uint64_t f = a.back() * linv % p;
        size_t k = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            std::uint64_t t = f * m[i] % p;
            a[k + i] = (a[k + i] + p - t) % p;
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) { // monic normal form
        std::uint64_t inv = invmod(a.back(), p);
        for (auto& x : a) x = x * inv % p;
    }
    return a;
}

inline Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t p) {
    Poly acc{1};
    Poly b = mod(base, m, p);
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = mod(mul(acc, acc, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(i)))
            acc = mod(mul(acc, b, p), m, p);
    }
    return acc;
}

// Exact quotient a / b (b must divide a); used by the distinct-degree split.
inline Poly divexact(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    if (a.size() < b.size()) return {};
    Poly q(a.size() - b.size() + 1, 0);
    std::uint64_t linv = invmod(b.back(), p);
    for (size_t k = a.size(); k-- >= b.size();) {
        std::uint64_t f = a[k] % p * linv % p;
        size_t off = k - b.size() + 1;
        q[off] = f;
        if (f)
            for (size_t i = 0; i < b.size(); ++i) {
                std::uint64_t t = f * b[i] % p;
                a[off + i] = (a[off + i] + p - t) % p;
            }
        if (k == 0) break;
    }
    trim(q);
    return q;
}

inline Poly derivative(const Poly& f, std::uint64_t p) {
    if (f.size() < 2) return {};
    Poly d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] % p * (i % p) % p;
    trim(d);
    return d;
}

// Multiplicity of the root a of f mod p via repeated synthetic division.
inline long multiplicity_at(Poly f, std::uint64_t a, std::uint64_t p) {
    trim(f);
    a %= p;
    long k = 0;
    while (!f.empty()) {
        Poly q(f.size() - 1, 0);
        std::uint64_t carry = 0;
        for (size_t i = f.size(); i-- > 1;) {
            carry = (carry * a + f[i]) % p;
            q[i - 1] = carry;
        }
        if ((carry * a + f[0]) % p != 0) return k; // f(a) != 0
        ++k;
        f = std::move(q);
        trim(f);
    }
    return k;
}

} // namespace gfp

} // namespace hecke
