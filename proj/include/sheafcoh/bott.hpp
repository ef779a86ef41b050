#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

#include "sheafcoh/bigint.hpp"

namespace sheafcoh {

/// One twisted bundle of differential forms Ω^p(a) on a single projective
/// space P^n. This is the indecomposable building block of every sheaf the
/// library can represent.
///
/// Normal form: Ω^0(a) is the line bundle O(a), and Ω^n(a) ≅ O(a-n-1) via the
/// canonical bundle; the constructor rewrites p = n to the line-bundle shape
/// so that equality of stored data is equality of isomorphism classes.
struct factor {
    int n = 1;  ///< dimension of the ambient P^n
    int p = 0;  ///< exterior power of the cotangent bundle, 0 <= p < n (or p = 0 = n rewritten)
    int a = 0;  ///< twist

    factor() = default;

    factor(int n_, int p_, int a_) : n(n_), p(p_), a(a_) {
        if (n < 1) throw std::invalid_argument("factor: ambient dimension must be >= 1");
        if (p < 0 || p > n) throw std::invalid_argument("factor: exterior power out of range");
        if (p == n) {  // Ω^n(a) = O(a-n-1)
            p = 0;
            a -= n + 1;
        }
    }

    /// Λ^q T_{P^n}(b), rewritten through Λ^q T = Ω^{n-q}(n+1).
    static factor tangent(int n, int q, int b) { return factor(n, n - q, n + 1 + b); }

    /// Ω^p(a)^∨ = Λ^p T(-a) = Ω^{n-p}(n+1-a).
    factor dual() const { return factor(n, n - p, n + 1 - a); }

    factor twisted(int t) const { return factor(n, p, a + t); }

    Int rank() const { return binom(n, p); }

    bool is_line_bundle() const { return p == 0; }

    friend bool operator==(const factor&, const factor&) = default;
    friend auto operator<=>(const factor& x, const factor& y) {
        // ordered by (p, a); n only breaks ties between unrelated spaces
        if (auto c = x.p <=> y.p; c != 0) return c;
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.n <=> y.n;
    }
};

/// h^q(P^n, Ω^p(a)), exact. Nonzero in exactly one of three mutually
/// exclusive regimes:
///
///   q = 0,  a > p      : C(a+n-p, a) * C(a-1, p)
///   q = p,  a = 0      : 1
///   q = n,  a < p - n  : C(p-a, -a) * C(-a-1, n-p)
///
/// The regimes cannot overlap: they force a > 0, a = 0 and a < 0
/// respectively once the boundary powers p = 0, p = n are taken into
/// account. Everything else vanishes, so a nonzero value only ever sits in
/// degree 0, p or n.
inline Int bott_h(int n, int p, int a, int q) {
    if (n < 1) throw std::invalid_argument("bott_h: ambient dimension must be >= 1");
    if (p < 0 || p > n) throw std::invalid_argument("bott_h: exterior power out of range");
    if (q < 0 || q > n) throw std::domain_error("bott_h: cohomological degree out of range");
    const long long A = a, N = n, P = p;
    if (q == 0 && A > P) return binom(A + N - P, A) * binom(A - 1, P);
    if (q == p && A == 0) return 1;
    if (q == n && A < P - N) return binom(P - A, -A) * binom(-A - 1, N - P);
    return 0;
}

inline Int bott_h(const factor& f, int q) { return bott_h(f.n, f.p, f.a, q); }

/// χ(O_{P^n}(m)) = C(m+n, n) as a polynomial in m (negative m allowed).
inline Int chi_line(int n, long long m) { return binom_poly(m + n, n); }

/// χ(P^n, Ω^p(a)) computed without the closed form above, by unrolling the
/// exterior powers of the Euler sequence in K-theory:
///   χ(Ω^p(a)) = Σ_{i=0..p} (-1)^i C(n+1, p-i) χ(O(a-p+i)).
/// Serves as the independent cross-check for bott_h.
inline Int bott_chi(int n, int p, int a) {
    if (n < 1) throw std::invalid_argument("bott_chi: ambient dimension must be >= 1");
    if (p < 0 || p > n) throw std::invalid_argument("bott_chi: exterior power out of range");
    Int acc = 0;
    for (int i = 0; i <= p; ++i)
        acc += parity_sign(i) * binom(n + 1, p - i) * chi_line(n, (long long)a - p + i);
    return acc;
}

inline Int bott_chi(const factor& f) { return bott_chi(f.n, f.p, f.a); }

/// Set of integer twists, always one of: empty, a final segment {t >= c}, an
/// initial segment {t <= c}, a single point, or a bounded interval. Closed
/// under intersection, and any mix of a final with an initial segment or a
/// point is finite — which is what makes "for all t" questions decidable.
class support_set {
  public:
    enum class kind { empty, up, down, point, interval };

    static support_set none() { return support_set(kind::empty, 0, 0); }
    static support_set up(int c) { return support_set(kind::up, c, 0); }
    static support_set down(int c) { return support_set(kind::down, 0, c); }
    static support_set point(int c) { return support_set(kind::point, c, c); }
    static support_set interval(int lo, int hi) {
        if (lo > hi) return none();
        if (lo == hi) return point(lo);
        return support_set(kind::interval, lo, hi);
    }

    kind k() const { return k_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    bool contains(int t) const {
        switch (k_) {
            case kind::empty: return false;
            case kind::up: return t >= lo_;
            case kind::down: return t <= hi_;
            case kind::point:
            case kind::interval: return lo_ <= t && t <= hi_;
        }
        return false;
    }

    bool is_empty() const { return k_ == kind::empty; }
    bool is_finite() const { return k_ != kind::up && k_ != kind::down; }

    /// Enumerate a finite set in increasing order.
    std::vector<int> points() const {
        if (!is_finite()) throw std::logic_error("support_set: enumerating an infinite set");
        std::vector<int> out;
        if (k_ == kind::empty) return out;
        for (int t = lo_; t <= hi_; ++t) out.push_back(t);
        return out;
    }

    support_set intersect(const support_set& o) const {
        if (k_ == kind::empty || o.k_ == kind::empty) return none();
        // reduce to interval bounds where possible
        const bool lb = has_lower(), olb = o.has_lower();
        const bool ub = has_upper(), oub = o.has_upper();
        if (!lb && !olb) return down(std::min(hi_, o.hi_));       // down ∩ down
        if (!ub && !oub) return up(std::max(lo_, o.lo_));         // up ∩ up
        int lo = 0, hi = 0;
        bool have_lo = false, have_hi = false;
        if (lb) { lo = lo_; have_lo = true; }
        if (olb) { lo = have_lo ? std::max(lo, o.lo_) : o.lo_; have_lo = true; }
        if (ub) { hi = hi_; have_hi = true; }
        if (oub) { hi = have_hi ? std::min(hi, o.hi_) : o.hi_; have_hi = true; }
        if (have_lo && have_hi) return interval(lo, hi);
        if (have_lo) return up(lo);
        return down(hi);
    }

    friend bool operator==(const support_set&, const support_set&) = default;

  private:
    support_set(kind k, int lo, int hi) : k_(k), lo_(lo), hi_(hi) {}
    bool has_lower() const { return k_ != kind::down; }  // ignoring empty, handled above
    bool has_upper() const { return k_ != kind::up; }

    kind k_;
    int lo_;
    int hi_;
};

/// { t ∈ ℤ : h^q(Ω^p(a+t)) ≠ 0 } for a degree q in {0, p, n}; empty for any
/// other degree. The boundary powers fold into the segments: for p = 0 the
/// degree-0 set already contains the h^0(O) = 1 point, and p = n has been
/// rewritten away by the factor normal form, so no twist is reported twice.
inline support_set support(const factor& f, int q) {
    if (q < 0 || q > f.n) throw std::domain_error("support: cohomological degree out of range");
    if (q == 0) return support_set::up(f.p == 0 ? -f.a : f.p + 1 - f.a);
    if (q == f.n) return support_set::down(f.p - f.n - 1 - f.a);
    if (q == f.p) return support_set::point(-f.a);
    return support_set::none();
}

}  // namespace sheafcoh
