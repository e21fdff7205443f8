#pragma once

#include "diffops/linear_ode.hpp"
#include "series/series.hpp"
#include "special/ekpoly.hpp"

#include <vector>

namespace lamext {

// Linear differential operator whose coefficients are truncated t-series;
// houses the operators with D-finite (E,K-polynomial) coefficients.
class SeriesCoeffODE {
  public:
    SeriesCoeffODE() = default;
    explicit SeriesCoeffODE(std::vector<SeriesQ> coeffs);

    int order() const { return (int)c_.size() - 1; }
    const std::vector<SeriesQ>& coeffs() const { return c_; }

    static SeriesCoeffODE from_linear(const LinearODE& op, int n);
    static SeriesCoeffODE from_ekpoly(const std::vector<EKPoly>& coeffs, int n);

    SeriesQ apply(const SeriesQ& f) const;

    // composition (this . other), Leibniz expansion
    SeriesCoeffODE multiply(const SeriesCoeffODE& other) const;

    // composition with the monic form of a polynomial-coefficient operator
    // (this . lead(b)^{-1} b), pole-cleared by a power of t on the left so the
    // coefficients stay power series; the kernel is unchanged
    SeriesCoeffODE multiply_monic(const LinearODE& b, int n) const;

  private:
    std::vector<SeriesQ> c_;
};

}  // namespace lamext
