#pragma once

#include "series/series.hpp"

namespace lamext {

// Jacobi theta q-series, exact coefficients, in the conventions
//   theta_1(u,q) = 2 q^{1/4} SUM (-1)^n q^{n(n+1)} sin((2n+1)u)
//   theta_2(u,q) = 2 q^{1/4} SUM q^{n(n+1)} cos((2n+1)u)
//   theta_3(u,q) = 1 + 2 SUM q^{n^2} cos(2nu)
//   theta_4(u,q) = 1 + 2 SUM (-1)^n q^{n^2} cos(2nu)
// The u-angles are precisely the ones needed for the algebraic lambda
// subcases; their trig values live in Q, Q(sqrt2) or Q(sqrt3).

enum class Angle { zero, pi6, pi4, pi3, pi2 };

// u/pi as an exact rational
Rat angle_over_pi(Angle u);

// 0 when all theta derivatives at this angle are rational, otherwise the d of
// the quadratic field that houses them
long angle_field(Angle u);

std::string angle_name(Angle u);
Angle angle_from_name(const std::string& s);

struct ThetaSpec {
    int kind = 2;      // 1..4
    Angle u = Angle::zero;
    int deriv = 0;     // partial derivative order in u
    int order = 16;    // q-truncation
};

// q-series over the angle's quadratic field (d = 2 or 3); angles with
// rational trig data are also accepted and give series with zero sqrt parts.
SeriesQuad theta_series_quad(const ThetaSpec& spec, long d);

// q-series over Q; requires the angle/derivative combination to be rational
// (u = 0 or pi/2, or a combination whose sqrt parts cancel). Throws otherwise.
SeriesQ theta_series(const ThetaSpec& spec);

}  // namespace lamext
