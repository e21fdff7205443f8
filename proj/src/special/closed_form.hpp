#pragma once

#include "series/series.hpp"
#include "special/theta.hpp"

namespace lamext {

// The theta closed form of the lambda-extended correlation,
//   -theta_2'(u0, q) / (sin(u0) theta_2(0,q) theta_3(0,q)^2),
// transported to the t variable. The q^{1/4} prefactors cancel in the ratio
// and the sqrt(2)/sqrt(3) constants cancel against sin(u0), so the result is
// an exact rational t-series. Supported at u0 in {pi/6, pi/4, pi/3, pi/2}.
SeriesQ lambda_extension_closed(Angle u0, int n);

// theta_2(0,q) * theta_3(0,q)^2 as a q-series (prefactor exponent 1/4)
SeriesQ theta2_theta3sq(int n);

}  // namespace lamext
