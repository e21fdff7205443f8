#pragma once

#include "series/series.hpp"

namespace lamext {

// 2F1([a,b],[c],t) truncated to N terms via the term-ratio recurrence
//   term_{n+1} = term_n * (a+n)(b+n) / ((c+n)(n+1)).
// c must not be a non-positive integer.
SeriesQ hyp2f1_series(const Rat& a, const Rat& b, const Rat& c, int n);

// complete elliptic integrals in the 2F1 normalization K = 2F1(1/2,1/2;1;t),
// E = 2F1(1/2,-1/2;1;t)
SeriesQ elliptic_k(int n);
SeriesQ elliptic_e(int n);

}  // namespace lamext
