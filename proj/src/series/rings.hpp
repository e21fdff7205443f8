#pragma once

#include "series/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamext {

// ---------------------------------------------------------------------------
// ParamPoly: dense polynomial in the deformation parameter M over Q.
// Serves as a coefficient ring for series whose coefficients are low-degree
// polynomials in M. Canonical form: no trailing zero coefficients
// (zero polynomial = empty vector).
// ---------------------------------------------------------------------------
class ParamPoly {
  public:
    // Degree cap; M-degrees grow slowly (like sqrt of the series order),
    // so hitting this means something is wrong upstream.
    static inline int degree_cap = 64;

    ParamPoly() = default;
    explicit ParamPoly(const Rat& constant) {
        if (!lamext::is_zero(constant)) c_.push_back(constant);
    }
    explicit ParamPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ParamPoly variable() { return ParamPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : Rat(0); }

    Rat eval(const Rat& m) const {
        Rat acc(0);
        for (int k = degree(); k >= 0; --k) acc = acc * m + c_[k];
        return acc;
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return ParamPoly(std::move(out));
    }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
        std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
        return ParamPoly(std::move(out));
    }
    friend ParamPoly operator-(const ParamPoly& a) { return ParamPoly(Rat(0)) - a; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        if (a.is_zero() || b.is_zero()) return ParamPoly();
        int da = a.degree(), db = b.degree();
        if (da + db > degree_cap)
            throw std::runtime_error("ParamPoly degree cap exceeded: " + std::to_string(da + db));
        std::vector<Rat> out(da + db + 1, Rat(0));
        for (int i = 0; i <= da; ++i)
            for (int j = 0; j <= db; ++j) out[i + j] += a.c_[i] * b.c_[j];
        return ParamPoly(std::move(out));
    }
    ParamPoly& operator+=(const ParamPoly& b) { return *this = *this + b; }
    ParamPoly& operator-=(const ParamPoly& b) { return *this = *this - b; }
    ParamPoly& operator*=(const ParamPoly& b) { return *this = *this * b; }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }

    bool is_invertible() const { return c_.size() == 1; }
    ParamPoly inverse() const {
        if (!is_invertible()) throw std::domain_error("ParamPoly not invertible (degree > 0 or zero)");
        return ParamPoly(Rat(1) / c_[0]);
    }

    // Exact polynomial division; throws if the remainder is nonzero.
    static ParamPoly divexact(const ParamPoly& a, const ParamPoly& b) {
        if (b.is_zero()) throw std::domain_error("ParamPoly division by zero");
        if (a.is_zero()) return ParamPoly();
        int da = a.degree(), db = b.degree();
        if (da < db) throw std::domain_error("ParamPoly divexact: non-exact (degree drop)");
        std::vector<Rat> rem = a.c_, q(da - db + 1, Rat(0));
        for (int k = da - db; k >= 0; --k) {
            Rat f = rem[k + db] / b.c_[db];
            q[k] = f;
            for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
        }
        for (const Rat& r : rem)
            if (!lamext::is_zero(r)) throw std::domain_error("ParamPoly divexact: nonzero remainder");
        return ParamPoly(std::move(q));
    }

    std::string to_string() const {
        if (is_zero()) return "0/1";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ' ';
            out += rat_to_string(c_[i]);
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && lamext::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<Rat> c_;  // low degree first
};

// ---------------------------------------------------------------------------
// Fp: prime field element. The modulus rides along with the value so series
// over different primes cannot be mixed silently.
// ---------------------------------------------------------------------------
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

    static void check(const Fp& a, const Fp& b) {
        if (a.p != b.p) throw std::invalid_argument("Fp modulus mismatch");
    }
    friend Fp operator+(const Fp& a, const Fp& b) {
        check(a, b);
        std::uint64_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return Fp{s, a.p};
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check(a, b);
        return Fp{a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p};
    }
    friend Fp operator-(const Fp& a) { return Fp{a.v == 0 ? 0 : a.p - a.v, a.p}; }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check(a, b);
        return Fp{(std::uint64_t)(((unsigned __int128)a.v * b.v) % a.p), a.p};
    }
    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }

    bool is_zero() const { return v == 0; }
    bool is_invertible() const { return v != 0; }
    Fp inverse() const {
        if (v == 0) throw std::domain_error("Fp inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = (std::int64_t)p, newr = (std::int64_t)v;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += (std::int64_t)p;
        return Fp{(std::uint64_t)t, p};
    }
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Reduce a rational mod p; throws if p divides the denominator.
inline Fp rat_mod_p(const Rat& r, std::uint64_t p) {
    Int num = r.get_num(), den = r.get_den();
    Int pz((unsigned long)p);
    Int dm = den % pz;
    if (dm == 0) throw std::domain_error("denominator divisible by p");
    Int nm = num % pz;
    if (nm < 0) nm += pz;
    Fp d{(std::uint64_t)dm.get_ui(), p};
    Fp n{(std::uint64_t)nm.get_ui(), p};
    return n * d.inverse();
}

// ---------------------------------------------------------------------------
// QuadExt: a + b*sqrt(d) with a, b rational and d a fixed squarefree integer.
// Handles the sqrt(2) / sqrt(3) constants arising from theta derivatives at
// u = pi/4, pi/6, pi/3.
// ---------------------------------------------------------------------------
struct QuadExt {
    Rat a{0}, b{0};
    long d = 2;

    QuadExt() = default;
    QuadExt(Rat a_, Rat b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
        if (d == 0 || d == 1) throw std::invalid_argument("QuadExt: d must be squarefree, not 0/1");
    }

    static void check(const QuadExt& x, const QuadExt& y) {
        if (x.d != y.d) throw std::invalid_argument("QuadExt field mismatch");
    }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt{x.a + y.a, x.b + y.b, x.d};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt{x.a - y.a, x.b - y.b, x.d};
    }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt{-x.a, -x.b, x.d}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt{x.a * y.a + Rat(x.d) * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
    }
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d == y.d && x.a == y.a && x.b == y.b;
    }

    bool is_zero() const { return lamext::is_zero(a) && lamext::is_zero(b); }
    bool is_rational() const { return lamext::is_zero(b); }
    bool is_invertible() const { return !is_zero(); }  // norm a^2 - d b^2 != 0 for squarefree d
    QuadExt inverse() const {
        Rat norm = a * a - Rat(d) * b * b;
        if (lamext::is_zero(norm)) throw std::domain_error("QuadExt inverse of zero-norm element");
        return QuadExt{a / norm, -b / norm, d};
    }
};

// ---------------------------------------------------------------------------
// RingTraits: the little context protocol the series template needs.
// ---------------------------------------------------------------------------
struct NoCtx {
    friend bool operator==(const NoCtx&, const NoCtx&) { return true; }
};

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rat> {
    using Ctx = NoCtx;
    static Rat zero(const Ctx&) { return Rat(0); }
    static Rat one(const Ctx&) { return Rat(1); }
    static Rat from_long(const Ctx&, long n) { return Rat(n); }
    static Rat from_rat(const Ctx&, const Rat& r) { return r; }
    static Ctx ctx_of(const Rat&) { return {}; }
    static bool is_zero(const Rat& x) { return lamext::is_zero(x); }
    static bool is_invertible(const Rat& x) { return !lamext::is_zero(x); }
    static Rat inverse(const Rat& x) {
        if (lamext::is_zero(x)) throw std::domain_error("division by zero");
        return Rat(1) / x;
    }
    static std::string name(const Ctx&) { return "Q"; }
    static std::string to_string(const Rat& x) { return rat_to_string(x); }
};

template <>
struct RingTraits<ParamPoly> {
    using Ctx = NoCtx;
    static ParamPoly zero(const Ctx&) { return ParamPoly(); }
    static ParamPoly one(const Ctx&) { return ParamPoly(Rat(1)); }
    static ParamPoly from_long(const Ctx&, long n) { return ParamPoly(Rat(n)); }
    static ParamPoly from_rat(const Ctx&, const Rat& r) { return ParamPoly(r); }
    static Ctx ctx_of(const ParamPoly&) { return {}; }
    static bool is_zero(const ParamPoly& x) { return x.is_zero(); }
    static bool is_invertible(const ParamPoly& x) { return x.is_invertible(); }
    static ParamPoly inverse(const ParamPoly& x) { return x.inverse(); }
    static std::string name(const Ctx&) { return "Qm"; }
    static std::string to_string(const ParamPoly& x) { return x.to_string(); }
};

struct FpCtx {
    std::uint64_t p = 0;
    friend bool operator==(const FpCtx& x, const FpCtx& y) { return x.p == y.p; }
};

template <>
struct RingTraits<Fp> {
    using Ctx = FpCtx;
    static Fp zero(const Ctx& c) { return Fp{0, c.p}; }
    static Fp one(const Ctx& c) { return Fp{1 % c.p, c.p}; }
    static Fp from_long(const Ctx& c, long n) {
        std::int64_t m = n % (std::int64_t)c.p;
        if (m < 0) m += (std::int64_t)c.p;
        return Fp{(std::uint64_t)m, c.p};
    }
    static Fp from_rat(const Ctx& c, const Rat& r) { return rat_mod_p(r, c.p); }
    static Ctx ctx_of(const Fp& x) { return FpCtx{x.p}; }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
    static bool is_invertible(const Fp& x) { return x.is_invertible(); }
    static Fp inverse(const Fp& x) { return x.inverse(); }
    static std::string name(const Ctx& c) { return "Fp:" + std::to_string(c.p); }
    static std::string to_string(const Fp& x) { return std::to_string(x.v); }
};

struct QuadCtx {
    long d = 2;
    friend bool operator==(const QuadCtx& x, const QuadCtx& y) { return x.d == y.d; }
};

template <>
struct RingTraits<QuadExt> {
    using Ctx = QuadCtx;
    static QuadExt zero(const Ctx& c) { return QuadExt{Rat(0), Rat(0), c.d}; }
    static QuadExt one(const Ctx& c) { return QuadExt{Rat(1), Rat(0), c.d}; }
    static QuadExt from_long(const Ctx& c, long n) { return QuadExt{Rat(n), Rat(0), c.d}; }
    static QuadExt from_rat(const Ctx& c, const Rat& r) { return QuadExt{r, Rat(0), c.d}; }
    static Ctx ctx_of(const QuadExt& x) { return QuadCtx{x.d}; }
    static bool is_zero(const QuadExt& x) { return x.is_zero(); }
    static bool is_invertible(const QuadExt& x) { return x.is_invertible(); }
    static QuadExt inverse(const QuadExt& x) { return x.inverse(); }
    static std::string name(const Ctx& c) { return "Qsqrt:" + std::to_string(c.d); }
    static std::string to_string(const QuadExt& x) {
        return rat_to_string(x.a) + " + " + rat_to_string(x.b) + " sqrt " + std::to_string(x.d);
    }
};

}  // namespace lamext
