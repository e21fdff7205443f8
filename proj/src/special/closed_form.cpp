#include "special/closed_form.hpp"

#include "special/nome.hpp"

#include <stdexcept>

namespace lamext {

SeriesQ theta2_theta3sq(int n) {
    auto th2 = theta_series(ThetaSpec{2, Angle::zero, 0, n});
    auto th3 = theta_series(ThetaSpec{3, Angle::zero, 0, n});
    return mul(th2, mul(th3, th3));
}

SeriesQ lambda_extension_closed(Angle u0, int n) {
    if (u0 == Angle::zero)
        throw std::invalid_argument("lambda_extension_closed: u0 = 0 is the undeformed E case");
    long d = angle_field(u0);
    if (d == 0) d = 2;  // pi/2 is rational; any ambient field works
    QuadCtx ctx{d};
    auto num = theta_series_quad(ThetaSpec{2, u0, 1, n}, d);
    auto den = lift_to_quad(theta2_theta3sq(n), d);
    auto ratio = neg(div(num, den));  // prefactor exponents cancel
    // sin(u0): pi/6 -> 1/2, pi/4 -> sqrt2/2, pi/3 -> sqrt3/2, pi/2 -> 1
    QuadExt sin_u0{Rat(0), Rat(0), d};
    switch (u0) {
        case Angle::pi6: sin_u0 = QuadExt{make_rat(1, 2), Rat(0), d}; break;
        case Angle::pi4: sin_u0 = QuadExt{Rat(0), make_rat(1, 2), d}; break;
        case Angle::pi3: sin_u0 = QuadExt{Rat(0), make_rat(1, 2), d}; break;
        case Angle::pi2: sin_u0 = QuadExt{Rat(1), Rat(0), d}; break;
        default: throw std::invalid_argument("unsupported angle");
    }
    ratio = scalar_mul(sin_u0.inverse(), ratio);
    auto rq = descend_to_rational(ratio);
    return qseries_to_tseries(rq);
}

}  // namespace lamext
