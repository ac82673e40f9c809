#pragma once

#include <algorithm>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Truncated Laurent series sum c_k q^k over exact rationals.
//
// Exponents below offset() are zero, exponents in [offset, order) are stored,
// exponents >= order() are unknown.  An *exact* series (constant, monomial,
// polynomial, exact quotient) additionally knows its tail is identically zero
// and reports order() == kOrderInf.  Every operation propagates the tightest
// provably-correct order -- reversion and root steps lose terms, and a silent
// wrong-order result is the main correctness hazard of the whole pipeline.
//
// Canonical form: stored leading coefficient nonzero (exact series also strip
// trailing zeros).  The zero series has no stored coefficients; inexact zero
// keeps offset == order marking where knowledge ends.
class LaurentSeries {
  public:
    static constexpr long kOrderInf = 1L << 50;

    LaurentSeries() : offset_(0), order_(kOrderInf), exact_(true) {}

    LaurentSeries(long offset, std::vector<Rational> coeffs, long order)
        : offset_(offset), order_(order), exact_(order >= kOrderInf), c_(std::move(coeffs)) {
        if (!exact_ && (order_ < offset_ || static_cast<long>(c_.size()) != order_ - offset_))
            throw SeriesError("laurent: coefficient count does not match [offset, order)");
        normalize();
    }

    static LaurentSeries zero(long order = kOrderInf) {
        return order >= kOrderInf ? LaurentSeries() : LaurentSeries(order, {}, order);
    }
    static LaurentSeries constant(const Rational& c) { return monomial(c, 0); }
    static LaurentSeries monomial(const Rational& c, long exponent) {
        if (c == 0) return LaurentSeries();
        return LaurentSeries(exponent, {c}, kOrderInf);
    }

    long offset() const { return offset_; }
    long order() const { return exact_ ? kOrderInf : order_; }
    bool exact() const { return exact_; }
    bool is_zero() const { return c_.empty(); }
    long known_len() const { return exact_ ? static_cast<long>(c_.size()) : order_ - offset_; }

    // Exact coefficient of q^n.  Zero below offset (and beyond the stored
    // range of an exact series); unknown at or above a finite order.
    const Rational& coefficient(long n) const {
        static const Rational kZero(0);
        if (n >= order()) throw SeriesError("coefficient: index at or beyond truncation order");
        if (n < offset_ || n - offset_ >= static_cast<long>(c_.size())) return kZero;
        return c_[static_cast<size_t>(n - offset_)];
    }

    const Rational& leading() const {
        static const Rational kZero(0);
        return c_.empty() ? kZero : c_.front();
    }

    // Forget everything at or beyond new_order; the result is inexact.
    LaurentSeries truncated(long new_order) const {
        if (new_order >= order()) return *this;
        if (is_zero() || new_order <= offset_) return zero(new_order);
        std::vector<Rational> v;
        long len = new_order - offset_;
        v.reserve(static_cast<size_t>(len));
        for (long i = 0; i < len; ++i)
            v.push_back(i < static_cast<long>(c_.size()) ? c_[static_cast<size_t>(i)] : Rational(0));
        return LaurentSeries(offset_, std::move(v), new_order);
    }

    LaurentSeries shifted(long k) const { // multiply by q^k
        LaurentSeries r(*this);
        r.offset_ += k;
        if (!r.exact_) r.order_ = sat(r.order_, k);
        return r;
    }

    // --- ring arithmetic -------------------------------------------------

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        long ord = std::min(a.order(), b.order());
        long off = std::min(a.lo_bound(), b.lo_bound());
        if (off >= ord) return zero(ord);
        long hi = ord >= kOrderInf ? std::max(a.hi_stored(), b.hi_stored()) : ord;
        if (hi <= off) return zero(ord);
        std::vector<Rational> v(static_cast<size_t>(hi - off), Rational(0));
        auto fold = [&](const LaurentSeries& s, int sign) {
            for (long i = 0; i < static_cast<long>(s.c_.size()); ++i) {
                long k = s.offset_ + i;
                if (k >= hi) break;
                auto& slot = v[static_cast<size_t>(k - off)];
                if (sign > 0)
                    slot += s.c_[static_cast<size_t>(i)];
                else
                    slot -= s.c_[static_cast<size_t>(i)];
            }
        };
        fold(a, +1);
        fold(b, +1);
        return LaurentSeries(off, std::move(v), ord >= kOrderInf ? kOrderInf : ord);
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

    LaurentSeries operator-() const {
        LaurentSeries r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        // Unknown tail of one factor meets the leading term of the other:
        // order = min(a.order + b.offset, b.order + a.offset).
        long ord = std::min(sat(a.order(), b.lo_bound()), sat(b.order(), a.lo_bound()));
        if (a.is_zero() || b.is_zero()) return zero(ord);
        long off = a.offset_ + b.offset_;
        long len = ord >= kOrderInf ? static_cast<long>(a.c_.size() + b.c_.size()) - 1 : ord - off;
        std::vector<Rational> v(static_cast<size_t>(len), Rational(0));
        long la = std::min<long>(static_cast<long>(a.c_.size()), len);
        for (long i = 0; i < la; ++i) {
            const Rational& ai = a.c_[static_cast<size_t>(i)];
            if (ai == 0) continue;
            long jmax = std::min<long>(static_cast<long>(b.c_.size()), len - i);
            for (long j = 0; j < jmax; ++j) {
                const Rational& bj = b.c_[static_cast<size_t>(j)];
                if (bj != 0) v[static_cast<size_t>(i + j)] += ai * bj;
            }
        }
        return LaurentSeries(off, std::move(v), ord >= kOrderInf ? kOrderInf : ord);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const Rational& c) {
        if (c == 0) return zero(a.order());
        LaurentSeries r(a);
        for (auto& x : r.c_) x *= c;
        return r;
    }
    friend LaurentSeries operator*(const Rational& c, const LaurentSeries& a) { return a * c; }

    // a / b.  If both operands are exact the division must terminate (zero
    // remainder), e.g. (1 - q^2)/(1 - q); otherwise use div_to.
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
        if (b.is_zero()) throw SeriesError("division by identically-zero series");
        if (a.is_zero()) return zero(sat(a.order(), -b.offset_));
        long off = a.offset_ - b.offset_;
        if (a.exact_ && b.exact_) {
            long len = static_cast<long>(a.c_.size()) - static_cast<long>(b.c_.size()) + 1;
            if (len < 1) throw SeriesError("division of exact series does not terminate; use div_to");
            auto r = a.divide_coeffs(b, off, len);
            LaurentSeries q(off, std::move(r), off + len);
            q.exact_ = true;
            q.order_ = kOrderInf;
            q.normalize();
            // exact quotient only if b divides a with nothing left over
            if (!((q * b) == a)) throw SeriesError("division of exact series does not terminate; use div_to");
            return q;
        }
        // An exact operand's zero tail is known to all orders; only inexact
        // truncation limits the quotient (at least one side is inexact here).
        long la = a.exact_ ? kOrderInf : a.known_len();
        long lb = b.exact_ ? kOrderInf : b.known_len();
        long len = std::min(la, lb);
        if (len <= 0) throw SeriesError("division: empty known range after truncation propagation");
        auto r = a.divide_coeffs(b, off, len);
        return LaurentSeries(off, std::move(r), off + len);
    }

    // a / b with the quotient truncated to the given order.
    friend LaurentSeries div_to(const LaurentSeries& a, const LaurentSeries& b, long ord) {
        if (b.is_zero()) throw SeriesError("division by identically-zero series");
        return (a.truncated(sat(ord, b.offset_)) / b.truncated(sat(ord, b.offset_))).truncated(ord);
    }

    // --- transcendental / structural steps -------------------------------

    // exp(f) for offset >= 1 (no constant term).  order preserved: g' = f' g.
    LaurentSeries exp() const {
        if (is_zero() && exact_) return constant(Rational(1));
        if (!is_zero() && offset_ < 1) throw SeriesError("exp: series must vanish at q = 0");
        if (exact_) throw SeriesError("exp of exact series does not terminate; truncate first");
        long n_terms = order_;
        std::vector<Rational> g(static_cast<size_t>(n_terms), Rational(0));
        g[0] = 1;
        for (long n = 1; n < n_terms; ++n) {
            Rational acc(0);
            long jhi = std::min<long>(n, offset_ + static_cast<long>(c_.size()) - 1);
            for (long j = offset_; j <= jhi; ++j) {
                const Rational& fj = c_[static_cast<size_t>(j - offset_)];
                if (fj != 0) acc += Rational(j) * fj * g[static_cast<size_t>(n - j)];
            }
            g[static_cast<size_t>(n)] = acc / n;
        }
        return LaurentSeries(0, std::move(g), n_terms);
    }

    // log(f) for offset == 0 and constant term 1.  order preserved.
    LaurentSeries log() const {
        if (offset_ != 0 || c_.empty() || c_[0] != 1)
            throw SeriesError("log: series must have constant term 1");
        if (exact_ && c_.size() == 1) return zero();
        if (exact_) throw SeriesError("log of exact series does not terminate; truncate first");
        long n_terms = order_;
        std::vector<Rational> h(static_cast<size_t>(n_terms), Rational(0));
        for (long n = 1; n < n_terms; ++n) {
            Rational acc = Rational(n) * coefficient(n);
            for (long j = 1; j < n; ++j) {
                if (h[static_cast<size_t>(j)] == 0) continue;
                const Rational& g = coefficient(n - j);
                if (g != 0) acc -= Rational(j) * h[static_cast<size_t>(j)] * g;
            }
            h[static_cast<size_t>(n)] = acc / n;
        }
        return LaurentSeries(0, std::move(h), n_terms);
    }

    // Exact k-th root.  offset must be divisible by k and the (positive)
    // leading coefficient a perfect k-th power, else "irrational root".
    LaurentSeries kth_root(unsigned long k) const {
        if (k == 0) throw SeriesError("kth_root: k must be positive");
        if (is_zero()) throw SeriesError("kth_root: zero series");
        if (k == 1) return *this;
        if (offset_ % static_cast<long>(k) != 0)
            throw IrrationalRootError("irrational root: offset not divisible by k");
        Rational cr;
        if (!exact_kth_root(c_[0], k, cr))
            throw IrrationalRootError("irrational root: leading coefficient is not a perfect k-th power");
        long len = known_len();
        auto root = root_coeffs(k, cr, len);
        long off = offset_ / static_cast<long>(k);
        if (exact_) {
            LaurentSeries cand(off, root, off + len); // trailing zeros strip if power is exact
            cand.exact_ = true;
            cand.order_ = kOrderInf;
            cand.normalize();
            if (cand.pow_trunc(k) == *this) return cand;
            throw SeriesError("kth_root of exact series does not terminate; truncate first");
        }
        return LaurentSeries(off, std::move(root), off + len);
    }

    // q d/dq.  order preserved.
    LaurentSeries qderiv() const {
        LaurentSeries r(*this);
        for (long i = 0; i < static_cast<long>(r.c_.size()); ++i)
            r.c_[static_cast<size_t>(i)] *= Rational(offset_ + i);
        r.normalize();
        return r;
    }

    // q -> c q substitution: coefficient of q^k scales by c^k (k may be < 0).
    LaurentSeries scale_argument(const Rational& c) const {
        if (c == 0) throw SeriesError("scale_argument: zero scale");
        LaurentSeries r(*this);
        Rational ck = pow_rational(c, offset_);
        for (auto& x : r.c_) {
            x *= ck;
            ck *= c;
        }
        return r;
    }

    // f^e by repeated squaring.  Inexact inputs keep their relative
    // precision (all the result can claim); exact inputs stay exact.
    LaurentSeries pow_trunc(unsigned long e) const {
        if (e == 0) return constant(Rational(1));
        if (is_zero()) {
            if (exact_) return LaurentSeries();
            long long o = static_cast<long long>(order_) * static_cast<long long>(e);
            return zero(static_cast<long>(std::min<long long>(o, kOrderInf)));
        }
        long len = known_len();
        auto cut = [&](const LaurentSeries& s) {
            return exact_ ? s : s.truncated(sat(s.offset_, len));
        };
        LaurentSeries acc;
        LaurentSeries base = *this;
        bool acc_set = false;
        while (e) {
            if (e & 1) {
                acc = acc_set ? cut(acc * base) : base;
                acc_set = true;
            }
            e >>= 1;
            if (e) base = cut(base * base);
        }
        return acc;
    }

    // Compositional inverse of an offset-1 series with nonzero linear term,
    // by Lagrange inversion: g_k = (1/k) [v^(k-1)] (v / f)^k.
    LaurentSeries revert() const {
        if (is_zero() || offset_ != 1) throw SeriesError("revert: series must have offset 1");
        if (exact_) {
            if (c_.size() == 1) return monomial(Rational(1) / c_[0], 1);
            throw SeriesError("revert of exact series does not terminate; truncate first");
        }
        long n = known_len(); // f_1 .. f_n known => g_1 .. g_n recoverable
        LaurentSeries b = div_to(monomial(Rational(1), 1), *this, n);
        std::vector<Rational> g(static_cast<size_t>(n), Rational(0));
        LaurentSeries p = b;
        for (long k = 1; k <= n; ++k) {
            g[static_cast<size_t>(k - 1)] = p.coefficient(k - 1) / k;
            if (k < n) p = (p * b).truncated(n);
        }
        return LaurentSeries(1, std::move(g), 1 + n);
    }

    // f(g(q)) for inner series g with offset exactly 1.
    friend LaurentSeries compose(const LaurentSeries& f, const LaurentSeries& g) {
        if (g.is_zero() || g.offset() != 1) throw SeriesError("compose: inner series must have offset 1");
        long cap = std::min(f.order(), g.order()); // f-tail enters at f.order * 1
        LaurentSeries acc = zero(kOrderInf);
        if (f.is_zero()) return acc.truncated(cap);
        LaurentSeries gpow = constant(Rational(1));
        if (f.offset_ < 0) {
            LaurentSeries ginv = cap >= kOrderInf ? constant(Rational(1)) / g
                                                  : div_to(constant(Rational(1)), g, cap);
            for (long k = -1; k >= f.offset_; --k) {
                gpow = gpow * ginv;
                const Rational& fk = f.coefficient(k);
                if (fk != 0) acc = acc + gpow * fk;
            }
            gpow = constant(Rational(1));
        }
        long top = std::min(f.exact_ ? f.offset_ + static_cast<long>(f.c_.size()) : f.order_,
                            sat(cap, 1));
        for (long k = 0; k < top; ++k) {
            if (k > 0) {
                gpow = gpow * g;
                if (cap < kOrderInf) gpow = gpow.truncated(cap);
            }
            if (k < f.offset_) continue;
            const Rational& fk = f.coefficient(k);
            if (fk != 0) acc = acc + gpow * fk;
        }
        return acc.truncated(cap);
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.exact_ == b.exact_ && a.offset_ == b.offset_ && a.c_ == b.c_ &&
               (a.exact_ || a.order_ == b.order_);
    }

  private:
    // order + shift with kOrderInf absorbing: an exact tail stays exact no
    // matter how the offset moves, and any sum reaching kOrderInf clamps.
    static long sat(long ord, long k) {
        if (ord >= kOrderInf || k >= kOrderInf) return kOrderInf;
        return std::min(ord + k, kOrderInf);
    }

    // First exponent that could be nonzero, for order propagation.  The
    // exact zero has none (kOrderInf); an inexact zero could resume where
    // its knowledge ends.
    long lo_bound() const {
        if (!is_zero()) return offset_;
        return exact_ ? kOrderInf : order_;
    }
    long hi_stored() const { return offset_ + static_cast<long>(c_.size()); }

    // Shared long-division kernel: len quotient coefficients from exponent
    // off + b.offset upward; reads both operands through coefficient().
    std::vector<Rational> divide_coeffs(const LaurentSeries& b, long off, long len) const {
        std::vector<Rational> r(static_cast<size_t>(len), Rational(0));
        for (long k = 0; k < len; ++k) {
            long e = off + b.offset_ + k;
            Rational acc = (e < order() ? coefficient(e) : Rational(0));
            for (long j = 0; j < k; ++j) {
                long bi = k - j;
                const Rational& bv =
                    bi < static_cast<long>(b.c_.size()) ? b.c_[static_cast<size_t>(bi)] : Rational(0);
                if (bv != 0) acc -= r[static_cast<size_t>(j)] * bv;
            }
            r[static_cast<size_t>(k)] = acc / b.c_[0];
        }
        return r;
    }

    std::vector<Rational> root_coeffs(unsigned long k, const Rational& cr, long len) const {
        // (1 + u)^(1/k): n g_n = sum_j ((j/k) - (n - j)) u_j g_{n-j}, then * cr.
        std::vector<Rational> g(static_cast<size_t>(len), Rational(0));
        g[0] = 1;
        Rational theta(1, k);
        for (long n = 1; n < len; ++n) {
            Rational acc(0);
            long jhi = std::min<long>(n, static_cast<long>(c_.size()) - 1);
            for (long j = 1; j <= jhi; ++j) {
                const Rational& uj = c_[static_cast<size_t>(j)];
                if (uj == 0) continue;
                acc += (theta * j - Rational(n - j)) * (uj / c_[0]) * g[static_cast<size_t>(n - j)];
            }
            g[static_cast<size_t>(n)] = acc / n;
        }
        for (auto& x : g) x *= cr;
        return g;
    }

    void normalize() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            if (exact_) offset_ = 0;
            else offset_ = order_;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            offset_ += static_cast<long>(lead);
        }
        if (exact_) {
            while (!c_.empty() && c_.back() == 0) c_.pop_back();
            order_ = kOrderInf;
        }
    }

    long offset_;
    long order_; // meaningful iff !exact_
    bool exact_;
    std::vector<Rational> c_;
};

} // namespace hecke
