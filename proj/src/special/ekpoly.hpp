#pragma once

#include "series/poly.hpp"
#include "series/series.hpp"

#include <map>
#include <string>
#include <utility>

namespace lamext {

// Polynomials in the complete elliptic integrals E and K whose coefficients
// are a(t) + b(t)*s with a, b rational functions and s = sqrt(1-t).
// Closed under d/dt via
//   dE/dt = (E-K)/(2t),  dK/dt = (E-(1-t)K)/(2t(1-t)),  ds/dt = -1/(2s).
class EKPoly {
  public:
    struct Coeff {
        RatFun a, b;
        bool is_zero() const { return a.is_zero() && b.is_zero(); }
    };
    using TermMap = std::map<std::pair<int, int>, Coeff>;  // (e_exp, k_exp) -> coeff

    EKPoly() = default;

    static EKPoly constant(const RatFun& a) { return term(0, 0, Coeff{a, RatFun()}); }
    static EKPoly constant(const Rat& a) { return constant(RatFun(a)); }
    static EKPoly e() { return term(1, 0, Coeff{RatFun(Rat(1)), RatFun()}); }
    static EKPoly k() { return term(0, 1, Coeff{RatFun(Rat(1)), RatFun()}); }
    static EKPoly sqrt1mt() { return term(0, 0, Coeff{RatFun(), RatFun(Rat(1))}); }
    static EKPoly term(int i, int j, Coeff c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // max total degree in (E, K)
    int ek_degree() const;
    bool homogeneous_of_degree(int d) const;

    friend EKPoly operator+(const EKPoly& x, const EKPoly& y);
    friend EKPoly operator-(const EKPoly& x, const EKPoly& y);
    friend EKPoly operator-(const EKPoly& x);
    friend EKPoly operator*(const EKPoly& x, const EKPoly& y);
    EKPoly& operator+=(const EKPoly& y) { return *this = *this + y; }
    EKPoly& operator-=(const EKPoly& y) { return *this = *this - y; }
    EKPoly& operator*=(const EKPoly& y) { return *this = *this * y; }
    friend EKPoly operator*(const RatFun& a, const EKPoly& y);
    friend EKPoly operator*(const Rat& a, const EKPoly& y) { return RatFun(a) * y; }

    // equality via cross-multiplied coefficient comparison (termwise)
    friend bool operator==(const EKPoly& x, const EKPoly& y);

    EKPoly derivative() const;

    // exact t-series; coefficient poles at t=0 must cancel against the series
    // valuations, else this throws with the offending pole order
    SeriesQ eval(int n) const;

    std::string to_string() const;
    static EKPoly parse(const std::string& text);

  private:
    void put(int i, int j, Coeff c);
    TermMap terms_;
};

// memoized E and K expansions
const SeriesQ& elliptic_e_cached(int n);
const SeriesQ& elliptic_k_cached(int n);

}  // namespace lamext
