#pragma once

#include "series/rational.hpp"
#include "series/rings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamext {

// Variable tags. Series in different variables never mix.
enum class Var { t, q, rho, lambda2, M, x };

inline std::string var_name(Var v) {
    switch (v) {
        case Var::t: return "t";
        case Var::q: return "q";
        case Var::rho: return "rho";
        case Var::lambda2: return "lambda2";
        case Var::M: return "M";
        case Var::x: return "x";
    }
    return "?";
}

inline Var var_from_name(const std::string& s) {
    if (s == "t") return Var::t;
    if (s == "q") return Var::q;
    if (s == "rho") return Var::rho;
    if (s == "lambda2") return Var::lambda2;
    if (s == "M") return Var::M;
    if (s == "x") return Var::x;
    throw std::invalid_argument("unknown series variable tag: " + s);
}

// ---------------------------------------------------------------------------
// Truncated power series x^prefac * (c[0] + c[1] x + ... + c[N-1] x^{N-1}).
// The prefactor exponent carries the q^{1/4} of theta_1/theta_2 and the
// (1-t)^{...}-free fractional monomials; it stays 0 everywhere else.
// Values are immutable in spirit: every operation returns a fresh series.
// ---------------------------------------------------------------------------
template <class R>
struct Series {
    using Traits = RingTraits<R>;
    using Ctx = typename Traits::Ctx;

    Var var = Var::t;
    Rat prefac{0};
    std::vector<R> c;
    Ctx ctx{};

    Series() = default;
    Series(Var v, std::vector<R> coeffs, Ctx cx = Ctx{}, Rat pf = Rat(0))
        : var(v), prefac(std::move(pf)), c(std::move(coeffs)), ctx(cx) {
        if (c.empty()) throw std::invalid_argument("series needs truncation order >= 1");
    }

    int order() const { return (int)c.size(); }

    const R& operator[](int k) const {
        static thread_local R zero_slot;
        if (k < 0 || k >= (int)c.size()) {
            zero_slot = Traits::zero(ctx);
            return zero_slot;
        }
        return c[k];
    }

    bool is_zero() const {
        for (const R& x : c)
            if (!Traits::is_zero(x)) return false;
        return true;
    }

    // index of first nonzero coefficient, or order() if none
    int valuation() const {
        for (int k = 0; k < order(); ++k)
            if (!Traits::is_zero(c[k])) return k;
        return order();
    }
};

using SeriesQ = Series<Rat>;
using SeriesM = Series<ParamPoly>;
using SeriesFp = Series<Fp>;
using SeriesQuad = Series<QuadExt>;

// --- constructors -----------------------------------------------------------

template <class R>
Series<R> series_zero(Var v, int n, typename RingTraits<R>::Ctx ctx = {}) {
    if (n < 1) throw std::invalid_argument("series order must be >= 1");
    return Series<R>(v, std::vector<R>((size_t)n, RingTraits<R>::zero(ctx)), ctx);
}

template <class R>
Series<R> series_const(Var v, const R& value, int n) {
    auto ctx = RingTraits<R>::ctx_of(value);
    auto s = series_zero<R>(v, n, ctx);
    s.c[0] = value;
    return s;
}

template <class R>
Series<R> series_x(Var v, int n, typename RingTraits<R>::Ctx ctx = {}) {
    auto s = series_zero<R>(v, n, ctx);
    if (n < 2) throw std::invalid_argument("series order too small for x");
    s.c[1] = RingTraits<R>::one(ctx);
    return s;
}

inline SeriesQ series_from_longs(Var v, std::vector<long> vals) {
    std::vector<Rat> c;
    c.reserve(vals.size());
    for (long x : vals) c.emplace_back(x);
    return SeriesQ(v, std::move(c));
}

// --- checks -----------------------------------------------------------------

namespace detail {
template <class R>
void check_same_ring(const Series<R>& f, const Series<R>& g) {
    if (!(f.ctx == g.ctx)) throw std::invalid_argument("series ring mismatch");
    if (f.var != g.var) throw std::invalid_argument("series variable mismatch");
}
}  // namespace detail

// --- additive ops -----------------------------------------------------------

template <class R>
Series<R> add(const Series<R>& f, const Series<R>& g) {
    detail::check_same_ring(f, g);
    if (f.prefac != g.prefac)
        throw std::invalid_argument("add/sub requires equal prefactor exponents");
    int n = std::min(f.order(), g.order());
    std::vector<R> out(f.c.begin(), f.c.begin() + n);
    for (int k = 0; k < n; ++k) out[k] += g.c[k];
    return Series<R>(f.var, std::move(out), f.ctx, f.prefac);
}

template <class R>
Series<R> sub(const Series<R>& f, const Series<R>& g) {
    detail::check_same_ring(f, g);
    if (f.prefac != g.prefac)
        throw std::invalid_argument("add/sub requires equal prefactor exponents");
    int n = std::min(f.order(), g.order());
    std::vector<R> out(f.c.begin(), f.c.begin() + n);
    for (int k = 0; k < n; ++k) out[k] -= g.c[k];
    return Series<R>(f.var, std::move(out), f.ctx, f.prefac);
}

template <class R>
Series<R> neg(const Series<R>& f) {
    Series<R> out = f;
    for (R& x : out.c) x = -x;
    return out;
}

// --- multiplicative ops -----------------------------------------------------

template <class R>
Series<R> mul(const Series<R>& f, const Series<R>& g) {
    detail::check_same_ring(f, g);
    int n = std::min(f.order(), g.order());
    std::vector<R> out((size_t)n, RingTraits<R>::zero(f.ctx));
    for (int i = 0; i < n; ++i) {
        if (RingTraits<R>::is_zero(f.c[i])) continue;
        for (int j = 0; j + i < n; ++j) out[i + j] += f.c[i] * g.c[j];
    }
    return Series<R>(f.var, std::move(out), f.ctx, f.prefac + g.prefac);
}

// 1/g for g with invertible constant term.
template <class R>
Series<R> inverse(const Series<R>& g) {
    if (!RingTraits<R>::is_invertible(g.c[0]))
        throw std::domain_error("series inverse: constant term not invertible");
    int n = g.order();
    R inv0 = RingTraits<R>::inverse(g.c[0]);
    std::vector<R> out((size_t)n, RingTraits<R>::zero(g.ctx));
    out[0] = inv0;
    for (int k = 1; k < n; ++k) {
        R acc = RingTraits<R>::zero(g.ctx);
        for (int j = 1; j <= k; ++j) acc += g.c[j] * out[k - j];
        out[k] = -(inv0 * acc);
    }
    return Series<R>(g.var, std::move(out), g.ctx, -g.prefac);
}

template <class R>
Series<R> div(const Series<R>& f, const Series<R>& g) {
    detail::check_same_ring(f, g);
    return mul(f, inverse(g));
}

template <class R>
Series<R> scalar_mul(const R& a, const Series<R>& f) {
    Series<R> out = f;
    for (R& x : out.c) x = a * x;
    return out;
}

template <class R>
Series<R> rat_mul(const Rat& a, const Series<R>& f) {
    return scalar_mul(RingTraits<R>::from_rat(f.ctx, a), f);
}

// --- structural ops ---------------------------------------------------------

template <class R>
Series<R> truncate(const Series<R>& f, int n) {
    if (n < 1) throw std::invalid_argument("truncate to order >= 1");
    if (n >= f.order()) return f;
    return Series<R>(f.var, std::vector<R>(f.c.begin(), f.c.begin() + n), f.ctx, f.prefac);
}

// multiply by x^k without touching the prefactor (coefficients shift up,
// truncation order is preserved)
template <class R>
Series<R> shift_up(const Series<R>& f, int k) {
    if (k < 0) throw std::invalid_argument("shift_up: negative shift");
    std::vector<R> out((size_t)f.order(), RingTraits<R>::zero(f.ctx));
    for (int i = 0; i + k < f.order(); ++i) out[i + k] = f.c[i];
    return Series<R>(f.var, std::move(out), f.ctx, f.prefac);
}

// divide by x^k; the first k coefficients must vanish
template <class R>
Series<R> shift_down(const Series<R>& f, int k) {
    if (k < 0) throw std::invalid_argument("shift_down: negative shift");
    if (f.order() <= k) throw std::invalid_argument("shift_down: order too small");
    for (int i = 0; i < k; ++i)
        if (!RingTraits<R>::is_zero(f.c[i]))
            throw std::domain_error("shift_down: nonzero coefficient below shift");
    return Series<R>(f.var, std::vector<R>(f.c.begin() + k, f.c.end()), f.ctx, f.prefac);
}

// move k integer powers from the coefficient array into the prefactor
template <class R>
Series<R> to_prefac(const Series<R>& f, int k) {
    Series<R> out = shift_down(f, k);
    out.prefac = f.prefac + Rat(k);
    return out;
}

// t -> a*t
template <class R>
Series<R> scale_var(const Series<R>& f, const Rat& a) {
    Series<R> out = f;
    Rat p(1);
    for (int k = 1; k < f.order(); ++k) {
        p *= a;
        out.c[k] = RingTraits<R>::from_rat(f.ctx, p) * f.c[k];
    }
    if (!lamext::is_zero(f.prefac))
        throw std::invalid_argument("scale_var: nonzero prefactor unsupported");
    return out;
}

template <class R>
bool equal_series(const Series<R>& f, const Series<R>& g) {
    if (!(f.ctx == g.ctx) || f.var != g.var || f.prefac != g.prefac) return false;
    int n = std::min(f.order(), g.order());
    for (int k = 0; k < n; ++k)
        if (!(f.c[k] == g.c[k])) return false;
    return true;  // compared up to the common truncation
}

// first index where the two series differ, or -1 if equal through min order
template <class R>
int first_mismatch(const Series<R>& f, const Series<R>& g) {
    detail::check_same_ring(f, g);
    if (f.prefac != g.prefac) return 0;
    int n = std::min(f.order(), g.order());
    for (int k = 0; k < n; ++k)
        if (!(f.c[k] == g.c[k])) return k;
    return -1;
}

// --- calculus ---------------------------------------------------------------

template <class R>
Series<R> differentiate(const Series<R>& f) {
    if (!lamext::is_zero(f.prefac))
        throw std::invalid_argument("differentiate: clear the prefactor first");
    int n = f.order();
    if (n < 2) return series_zero<R>(f.var, 1, f.ctx);
    std::vector<R> out((size_t)(n - 1), RingTraits<R>::zero(f.ctx));
    for (int k = 1; k < n; ++k) out[k - 1] = RingTraits<R>::from_long(f.ctx, k) * f.c[k];
    return Series<R>(f.var, std::move(out), f.ctx);
}

template <class R>
Series<R> integrate(const Series<R>& f) {
    if (!lamext::is_zero(f.prefac))
        throw std::invalid_argument("integrate: clear the prefactor first");
    int n = f.order();
    std::vector<R> out((size_t)(n + 1), RingTraits<R>::zero(f.ctx));
    for (int k = 0; k < n; ++k) {
        R kk = RingTraits<R>::from_long(f.ctx, k + 1);
        if (!RingTraits<R>::is_invertible(kk))
            throw std::domain_error("integrate: " + std::to_string(k + 1) +
                                    " not invertible in the coefficient ring");
        out[k + 1] = RingTraits<R>::inverse(kk) * f.c[k];
    }
    return Series<R>(f.var, std::move(out), f.ctx);
}

// --- composition and reversion ----------------------------------------------

// f(g(x)); requires g(0) = 0 and both prefactors zero.
template <class R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
    if (!(f.ctx == g.ctx)) throw std::invalid_argument("compose: ring mismatch");
    if (!lamext::is_zero(f.prefac))
        throw std::invalid_argument("compose: f must have zero prefactor exponent");
    if (!lamext::is_zero(g.prefac) || !RingTraits<R>::is_zero(g.c[0]))
        throw std::domain_error("compose: inner series must vanish at 0");
    int n = std::min(f.order(), g.order());
    Series<R> gi = truncate(g, n);
    gi.var = g.var;
    // Horner from the top coefficient down
    Series<R> acc = series_const<R>(g.var, f.c[n - 1], n);
    for (int k = n - 2; k >= 0; --k) {
        acc = mul(acc, gi);
        acc.c[0] += f.c[k];
    }
    return acc;
}

// compositional inverse: g with f(g(x)) = x + O(x^N)
template <class R>
Series<R> revert(const Series<R>& f) {
    if (!lamext::is_zero(f.prefac) || !RingTraits<R>::is_zero(f.c[0]))
        throw std::domain_error("revert: series must vanish at 0");
    int n = f.order();
    if (n < 2 || !RingTraits<R>::is_invertible(f.c[1]))
        throw std::domain_error("revert: linear coefficient not invertible");
    R inv1 = RingTraits<R>::inverse(f.c[1]);
    Series<R> g = series_zero<R>(f.var, n, f.ctx);
    g.c[1] = inv1;
    for (int m = 2; m < n; ++m) {
        // error term of f(g) at order m fixes g_m
        Series<R> fg = compose(truncate(f, m + 1), truncate(g, m + 1));
        g.c[m] = -(inv1 * fg.c[m]);
    }
    return g;
}

// --- rational powers of a unit series ----------------------------------------

// f^r for f with f(0) = 1, r rational; classical recurrence from f*h' = r*f'*h.
template <class R>
Series<R> pow_rational(const Series<R>& f, const Rat& r) {
    if (!lamext::is_zero(f.prefac))
        throw std::invalid_argument("pow_rational: nonzero prefactor unsupported");
    if (!(f.c[0] == RingTraits<R>::one(f.ctx)))
        throw std::domain_error("pow_rational: constant term must be 1");
    int n = f.order();
    std::vector<R> h((size_t)n, RingTraits<R>::zero(f.ctx));
    h[0] = RingTraits<R>::one(f.ctx);
    for (int m = 1; m < n; ++m) {
        // m*h_m = sum_{k=1..m} ((r+1)k - m) f_k h_{m-k}
        R acc = RingTraits<R>::zero(f.ctx);
        for (int k = 1; k <= m; ++k) {
            Rat w = (r + 1) * Rat(k) - Rat(m);
            if (lamext::is_zero(w)) continue;
            acc += RingTraits<R>::from_rat(f.ctx, w) * (f.c[k] * h[m - k]);
        }
        R mm = RingTraits<R>::from_long(f.ctx, m);
        h[m] = RingTraits<R>::inverse(mm) * acc;
    }
    return Series<R>(f.var, std::move(h), f.ctx);
}

template <class R>
Series<R> pow_long(const Series<R>& f, long e) {
    if (e < 0) return inverse(pow_long(f, -e));
    Series<R> acc = series_const<R>(f.var, RingTraits<R>::one(f.ctx), f.order());
    Series<R> base = f;
    long k = e;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    acc.prefac = f.prefac * Rat(e);
    return acc;
}

// exp of a series with zero constant term
template <class R>
Series<R> exp_series(const Series<R>& f) {
    if (!lamext::is_zero(f.prefac) || !RingTraits<R>::is_zero(f.c[0]))
        throw std::domain_error("exp_series: needs zero constant term");
    int n = f.order();
    std::vector<R> e((size_t)n, RingTraits<R>::zero(f.ctx));
    e[0] = RingTraits<R>::one(f.ctx);
    for (int m = 1; m < n; ++m) {
        // m*e_m = sum_{k=1..m} k f_k e_{m-k}
        R acc = RingTraits<R>::zero(f.ctx);
        for (int k = 1; k <= m; ++k)
            acc += RingTraits<R>::from_long(f.ctx, k) * (f.c[k] * e[m - k]);
        e[m] = RingTraits<R>::inverse(RingTraits<R>::from_long(f.ctx, m)) * acc;
    }
    return Series<R>(f.var, std::move(e), f.ctx);
}

// log of a series with constant term 1
template <class R>
Series<R> log_series(const Series<R>& f) {
    if (!lamext::is_zero(f.prefac) || !(f.c[0] == RingTraits<R>::one(f.ctx)))
        throw std::domain_error("log_series: needs constant term 1");
    Series<R> d = differentiate(f);
    return integrate(div(d, truncate(f, std::max(1, f.order() - 1))));
}

// --- ring changes -------------------------------------------------------------

struct ModPError : std::domain_error {
    int index;
    ModPError(int idx, const std::string& what) : std::domain_error(what), index(idx) {}
};

inline SeriesFp reduce_mod_p(const SeriesQ& f, std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("reduce_mod_p: p must be prime");
    FpCtx ctx{p};
    std::vector<Fp> out;
    out.reserve(f.c.size());
    for (int k = 0; k < f.order(); ++k) {
        try {
            out.push_back(rat_mod_p(f.c[k], p));
        } catch (const std::domain_error&) {
            throw ModPError(k, "p=" + std::to_string(p) +
                                   " divides denominator of coefficient " + std::to_string(k));
        }
    }
    return SeriesFp(f.var, std::move(out), ctx, f.prefac);
}

inline SeriesQuad lift_to_quad(const SeriesQ& f, long d) {
    QuadCtx ctx{d};
    std::vector<QuadExt> out;
    out.reserve(f.c.size());
    for (const Rat& x : f.c) out.push_back(QuadExt{x, Rat(0), d});
    return SeriesQuad(f.var, std::move(out), ctx, f.prefac);
}

// Inverse of lift_to_quad; throws if any sqrt(d) part survives.
inline SeriesQ descend_to_rational(const SeriesQuad& f) {
    std::vector<Rat> out;
    out.reserve(f.c.size());
    for (int k = 0; k < f.order(); ++k) {
        if (!is_zero(f.c[k].b))
            throw std::domain_error("series not rational: sqrt part at index " + std::to_string(k));
        out.push_back(f.c[k].a);
    }
    return SeriesQ(f.var, std::move(out), NoCtx{}, f.prefac);
}

// Divide by sqrt(d): requires every coefficient to be a pure sqrt(d) multiple.
inline SeriesQ descend_sqrt_part(const SeriesQuad& f) {
    std::vector<Rat> out;
    out.reserve(f.c.size());
    for (int k = 0; k < f.order(); ++k) {
        if (!is_zero(f.c[k].a))
            throw std::domain_error("series not a pure sqrt multiple at index " + std::to_string(k));
        out.push_back(f.c[k].b);
    }
    return SeriesQ(f.var, std::move(out), NoCtx{}, f.prefac);
}

inline SeriesQ specialize_m(const SeriesM& f, const Rat& m) {
    std::vector<Rat> out;
    out.reserve(f.c.size());
    for (const ParamPoly& p : f.c) out.push_back(p.eval(m));
    return SeriesQ(f.var, std::move(out), NoCtx{}, f.prefac);
}

inline SeriesM lift_to_m(const SeriesQ& f) {
    std::vector<ParamPoly> out;
    out.reserve(f.c.size());
    for (const Rat& x : f.c) out.emplace_back(x);
    return SeriesM(f.var, std::move(out), NoCtx{}, f.prefac);
}

// --- operator sugar -----------------------------------------------------------

template <class R> Series<R> operator+(const Series<R>& f, const Series<R>& g) { return add(f, g); }
template <class R> Series<R> operator-(const Series<R>& f, const Series<R>& g) { return sub(f, g); }
template <class R> Series<R> operator*(const Series<R>& f, const Series<R>& g) { return mul(f, g); }
template <class R> Series<R> operator/(const Series<R>& f, const Series<R>& g) { return div(f, g); }
template <class R> Series<R> operator-(const Series<R>& f) { return neg(f); }

}  // namespace lamext
