#pragma once

#include "series/series.hpp"

namespace lamext {

// Nome map: t = k^2 = (theta_2(0,q)/theta_3(0,q))^4 and its reversion.
// A q-truncation of order N transports to a trustworthy t-truncation of the
// same order, because q = t/16 + O(t^2).

// t(q) = 16q - 128q^2 + 704q^3 - ...
SeriesQ nome_t_of_q(int n);

// q(t) = t/16 + t^2/32 + ...
SeriesQ nome_q_of_t(int n);

// compose a pure q-series (zero prefactor exponent) with q(t)
SeriesQ qseries_to_tseries(const SeriesQ& f);
SeriesQuad qseries_to_tseries(const SeriesQuad& f);

// Move a nonnegative-integer prefactor exponent back into the coefficient
// array (order preserved; top coefficients are lost to the shift).
template <class R>
Series<R> materialize_prefac(const Series<R>& f) {
    if (!is_integer(f.prefac) || sgn(f.prefac) < 0)
        throw std::domain_error("materialize_prefac: prefactor exponent not a nonnegative integer");
    long k = f.prefac.get_num().get_si();
    Series<R> out = f;
    out.prefac = Rat(0);
    return shift_up(out, (int)k);
}

}  // namespace lamext
