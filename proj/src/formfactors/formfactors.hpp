#pragma once

#include "series/series.hpp"
#include "special/closed_form.hpp"
#include "special/ekpoly.hpp"
#include "special/theta.hpp"

#include <vector>

namespace lamext {

// ---- theta-derivative ratios transported to t -------------------------------

// theta_1^{(j)}(0,q) / (theta_2(0,q) theta_3(0,q)^2), j odd (even j give 0)
SeriesQ theta1_ratio(int j, int n);

// -theta_2^{(j)}(0,q) / (theta_2(0,q) theta_3(0,q)^2); j = 2 gives E
SeriesQ theta2_ratio_neg(int j, int n);

// theta_4^{(j)}(0,q) / theta_4(0,q)
SeriesQ theta4_ratio(int j, int n);

// ---- form factors around (1-t)^{1/4} ----------------------------------------

// (1-t)^{1/4} * f^{(2k)} via the arccos Taylor machinery (any k)
SeriesQ form_factor_weighted(int k, int n);
SeriesQ form_factor_series(int k, int n);  // f^{(2k)}
EKPoly form_factor_closed(int k);          // transcriptions for k <= 2

// ---- deformation around E ----------------------------------------------------

SeriesQ g_series(int k, int n);
EKPoly g_closed(int k);          // k <= 3
SeriesQ apply_rk(int k, int n);  // R_k applied to E^{2k+1}
SeriesQ rk_theta_ratio(int k, int n);

// closed lambda extension at the algebraic angles (theta pipeline)
SeriesQ lambda_ext(Angle u0, int n);

// ---- S-ratios at the deformation angles --------------------------------------

// theta_2^{(k)}(u0,q) / theta_2'(u0,q) in t, over the angle's field
SeriesQuad S_ratio_quad(Angle u0, int k, int n);
// same with the parity-dependent sqrt factor divided out so the result is
// rational: even k at pi/6 and odd k at pi/3 carry one sqrt(3)
SeriesQ S_ratio(Angle u0, int k, int n);
EKPoly S_ratio_closed_pi4(int k);  // 2 <= k <= 6

// ---- deformations around the algebraic subcases ------------------------------

// exact rho-Taylor coefficient G_k(t) of the deformation at u0; at pi/2 this
// reduces to (-1/4)^k (1-t)^{1/4} f^{(2k)}
SeriesQ G_series(Angle u0, int k, int n);

// the pi/4 base point in its algebraic closed form
// (1-t)^{1/16} ((1 + sqrt(1-t))/2)^{3/4}
SeriesQ G0_closed_pi4(int n);

// scalar weights of S_{p+1} in G_k at u0 (the bracketed combinations); the
// column index is p = 0..k
std::vector<Rat> G_weights(Angle u0, int k);

// ---- C(0,0; lambda) ladder ----------------------------------------------------

// kappa^{(2k)} = f_{0,0}^{(2k)} as a t-series
SeriesQ c00_kappa(int k, int n);
// C(0,0;1) evaluated through the theta closed form (trivially 1)
SeriesQ c00_lambda1(int n);

// ladder matrices: odd rows give S^{(2p+1)}/(2p+1)! in the kappa^{(2k+1)},
// even rows give S_{2p}/(2p)! in the kappa^{(2k)}
std::vector<std::vector<Rat>> kappa_ladder_odd(int rows);
std::vector<std::vector<Rat>> kappa_ladder_even(int rows);

// S^{(2j+1)} = theta_1^{(2j+1)}(0,q)/theta_1'(0,q) in t
SeriesQ S_odd_ratio(int j, int n);

}  // namespace lamext
