#pragma once

#include "series/series.hpp"

#include <optional>
#include <string>

namespace lamext {

// sigma-form Painleve VI machinery for the low-temperature diagonal
// correlation C(N,N), N=1 seeds included.
//
//   sigma = t(t-1) d/dt ln C - t/4
//   (t(t-1) sigma'')^2 = N^2 ((t-1)sigma' - sigma)^2
//                        - 4 sigma' ((t-1)sigma' - sigma - 1/4)(t sigma' - sigma)

template <class R>
Series<R> sigma_of_c(const Series<R>& c, int big_n = 1);

// sigma/(M-4); exact in Q[M], throws if the division is not exact
SeriesM sigma_m_of_c(const SeriesM& c);

// residual of the sigma ODE; the zero series iff C solves it to that order
template <class R>
Series<R> pvi_residual(const Series<R>& c, int big_n = 1);

struct PviSolveInfo {
    bool order2_seeded = false;       // c2 came from the caller/default seeds
    bool symbolic_fallback = false;   // fixed-M solve routed through Q[M]
    int solved_order = 0;
    std::string note;
};

struct PviSeeds {
    Rat c1;
    std::optional<Rat> c2;  // required for N=1 (the order-2 slope vanishes)
};

// Series solution with symbolic M to coefficient t^target inclusive.
// Seeds are the Eq.-level defaults c0=1, c1=-1/4, c2=-(3/64+3M/256).
SeriesM pvi_solve_symbolic(int target, PviSolveInfo* info = nullptr);

// Fixed rational M. At M=4 the sigma recursion degenerates (sigma = 0 has a
// vanishing slope at every order); that case is solved symbolically and
// specialized, and the info struct says so.
SeriesQ pvi_solve_fixed(const Rat& m, int target, PviSolveInfo* info = nullptr);

// default seed value c2(M)
ParamPoly pvi_default_c2_symbolic();
Rat pvi_default_c2(const Rat& m);

}  // namespace lamext
