#pragma once

#include "series/rational.hpp"
#include "series/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lamext {

// Dense univariate polynomial over Q (variable t unless stated otherwise).
// Canonical: no trailing zeros; zero polynomial = empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rat& constant) {
        if (!lamext::is_zero(constant)) c_.push_back(constant);
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly from_longs(std::vector<long> v) {
        std::vector<Rat> c;
        c.reserve(v.size());
        for (long x : v) c.emplace_back(x);
        return Poly(std::move(c));
    }
    static Poly variable() { return from_longs({0, 1}); }
    // (a + b t)^e convenience for building factored coefficients
    static Poly linear_power(long a, long b, int e) {
        Poly out{Rat(1)};
        Poly lin = from_longs({a, b});
        for (int i = 0; i < e; ++i) out = out * lin;
        return out;
    }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : Rat(0); }
    Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
        return acc;
    }

    int valuation() const {
        for (int k = 0; k < (int)c_.size(); ++k)
            if (!lamext::is_zero(c_[k])) return k;
        return 0;  // zero polynomial: by convention
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const Rat& a, const Poly& b) {
        std::vector<Rat> out = b.c_;
        for (Rat& x : out) x *= a;
        return Poly(std::move(out));
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // quotient/remainder, b != 0
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("Poly division by zero");
        std::vector<Rat> rem = a.c_;
        int da = a.degree(), db = b.degree();
        if (da < db) {
            q = Poly();
            r = a;
            return;
        }
        std::vector<Rat> quo(da - db + 1, Rat(0));
        for (int k = da - db; k >= 0; --k) {
            Rat f = rem[k + db] / b.c_[db];
            quo[k] = f;
            if (!lamext::is_zero(f))
                for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
        }
        q = Poly(std::move(quo));
        r = Poly(std::move(rem));
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        if (a.is_zero()) return a;
        return (Rat(1) / a.leading()) * a;  // monic normalization
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> out(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = Rat((long)k) * c_[k];
        return Poly(std::move(out));
    }

    // substitute t -> t + t0 (Horner in the shifted variable)
    Poly shift(const Rat& t0) const {
        Poly acc;
        Poly lin = Poly(std::vector<Rat>{t0, Rat(1)});
        for (int k = degree(); k >= 0; --k) acc = acc * lin + Poly(c_[k]);
        return acc;
    }

    Series<Rat> to_series(Var v, int n) const {
        auto s = series_zero<Rat>(v, n);
        for (int k = 0; k <= degree() && k < n; ++k) s.c[k] = c_[k];
        return s;
    }

    // content = gcd of numerators / lcm of denominators (positive)
    Rat content() const {
        if (is_zero()) return Rat(0);
        Int g(0), l(1);
        for (const Rat& x : c_) {
            if (lamext::is_zero(x)) continue;
            Int num = x.get_num();
            if (num < 0) num = -num;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            Int den = x.get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        return make_rat(g, l);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int k = 0; k <= degree(); ++k) {
            if (lamext::is_zero(c_[k])) continue;
            std::string term = rat_to_string(c_[k]);
            if (k == 1) term += "*t";
            else if (k > 1) term += "*t^" + std::to_string(k);
            if (!first) out += " + ";
            out += term;
            first = false;
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && lamext::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Reduced fraction of polynomials. Denominator kept monic.
class RatFun {
  public:
    RatFun() : num_(), den_(Rat(1)) {}
    explicit RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFun(Poly num, Poly den) { assign(std::move(num), std::move(den)); }

    static RatFun from_poly(Poly p) { return RatFun(std::move(p), Poly(Rat(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("RatFun division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
    RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
    RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }

    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Laurent-style expansion: series * t^{-pole_shift}, where pole_shift is
    // the order of the denominator zero at t = 0 (numerator valuation is kept
    // in the series so cancellation happens naturally).
    Series<Rat> to_series_with_pole(Var v, int n, int& pole_shift) const {
        Poly d = den_;
        pole_shift = d.is_zero() ? 0 : d.valuation();
        if (pole_shift > 0) {
            std::vector<Rat> dc(d.coeffs().begin() + pole_shift, d.coeffs().end());
            d = Poly(std::move(dc));
        }
        auto ns = num_.to_series(v, n);
        auto ds = d.to_series(v, n);
        return div(ns, ds);
    }

    // plain series expansion; requires den(0) != 0
    Series<Rat> to_series(Var v, int n) const {
        int shift = 0;
        auto s = to_series_with_pole(v, n + 1, shift);
        if (shift > 0) {
            // removable only if the numerator part vanishes to that order
            return truncate(shift_down(s, shift), n);
        }
        return truncate(s, n);
    }

    std::string to_string() const {
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

  private:
    void assign(Poly num, Poly den) {
        if (den.is_zero()) throw std::domain_error("RatFun with zero denominator");
        if (num.is_zero()) {
            num_ = Poly();
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = Poly::gcd(num, den);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divmod(num, g, q, r);
            num = q;
            Poly::divmod(den, g, q, r);
            den = q;
        }
        Rat lead = den.leading();
        num_ = (Rat(1) / lead) * num;
        den_ = (Rat(1) / lead) * den;
    }

    Poly num_, den_;
};

}  // namespace lamext
