#pragma once

#include "series/poly.hpp"
#include "series/series.hpp"

#include <string>
#include <vector>

namespace lamext {

// Linear differential operator sum_i p_i(t) D_t^i with polynomial
// coefficients, stored primitive: common denominator cleared, integer content
// removed, leading polynomial's leading coefficient positive.
class LinearODE {
  public:
    LinearODE() = default;
    explicit LinearODE(std::vector<Poly> coeffs);
    static LinearODE from_ratfun(std::vector<RatFun> coeffs);

    int order() const { return (int)c_.size() - 1; }
    const std::vector<Poly>& coeffs() const { return c_; }
    const Poly& coeff(int i) const { return c_[i]; }

    friend bool operator==(const LinearODE& a, const LinearODE& b) { return a.c_ == b.c_; }

    std::string to_string() const;

  private:
    void normalize();
    std::vector<Poly> c_;
};

// sum_i p_i(t) f^{(i)}; f may carry a fractional prefactor exponent, the
// result comes back with prefactor f.prefac - order. Coefficient poles at
// t = 0 are fine: multiply the operator through by a power of t first (the
// primitive form already has polynomial coefficients).
SeriesQ apply(const LinearODE& op, const SeriesQ& f);
SeriesQuad apply_quad(const LinearODE& op, const SeriesQuad& f);

// Operator with exact rational-function coefficients kept as written.
// Intertwiners live here: unlike annihilators they are maps, so the overall
// scalar and rational prefactors matter.
struct RatOperator {
    std::vector<RatFun> coeffs;
    int order() const { return (int)coeffs.size() - 1; }
};

// exact application, valid when the result is a power series (coefficient
// poles at t = 0 must cancel; throws otherwise)
SeriesQ apply_exact(const RatOperator& op, const SeriesQ& f);

// true if op annihilates f through all reliably computed coefficients
bool annihilates(const LinearODE& op, const SeriesQ& f);
bool annihilates_quad(const LinearODE& op, const SeriesQuad& f);

// operator composition: (ab)(f) = a(b(f))
LinearODE multiply(const LinearODE& a, const LinearODE& b);

// w . op . w^{-1} with w = t^{a0} (1-t)^{a1}; annihilates w*(solutions of op)
LinearODE conjugate_by_power(const LinearODE& op, const Rat& a0, const Rat& a1);

// substitute t -> t + t0 (operator acting on series in x = t - t0)
LinearODE shift_operator(const LinearODE& op, const Rat& t0);

// symmetric square of an order-2 operator; solutions are products of
// solutions of the input
LinearODE sym_square_order2(const LinearODE& op);

// D_t as an operator, and the annihilator of t^{a0}(1-t)^{a1}
LinearODE d_t();
LinearODE annihilator_of_power(const Rat& a0, const Rat& a1);

// order-2 annihilator of 2F1([a,b],[c],t)
LinearODE hyp2f1_operator(const Rat& a, const Rat& b, const Rat& c);

struct IndicialResult {
    Poly indicial;               // polynomial in the local exponent
    std::vector<Rat> roots;      // rational roots with multiplicity
    bool regular_singular = true;
};

// indicial data at t0 in {0, 1} (any rational t0 works); throws on an
// irregular singular point
IndicialResult indicial_exponents(const LinearODE& op, const Rat& t0);

// power-series solution basis at an ordinary point t0, unit-triangular
// initial conditions, n coefficients each (series in x = t - t0)
std::vector<SeriesQ> local_solutions(const LinearODE& op, const Rat& t0, int n);

// mutual-annihilation equality of solution spaces, witnessed at the common
// ordinary point t0 with n-term local bases
bool same_solution_space(const LinearODE& a, const LinearODE& b, const Rat& t0, int n);

// first t0 in 1/2, 1/3, 2, 3, ... ordinary for all given operators
Rat common_ordinary_point(const std::vector<LinearODE>& ops);

}  // namespace lamext
