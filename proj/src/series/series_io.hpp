#pragma once

#include "series/series.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace lamext {

// Shared series text format:
//   var=<tag> prefactor=<num>/<den> order=<N> ring=<Q|Qm|Fp:<p>|Qsqrt:<d>>
// then one coefficient per line:
//   Q      num/den
//   Qm     space-separated rationals, low M-degree first
//   Fp     residue
//   Qsqrt  a_num/a_den + b_num/b_den sqrt d

template <class R>
void write_series(std::ostream& os, const Series<R>& f) {
    os << "var=" << var_name(f.var) << " prefactor=" << rat_to_string(f.prefac)
       << " order=" << f.order() << " ring=" << RingTraits<R>::name(f.ctx) << "\n";
    for (const R& x : f.c) os << RingTraits<R>::to_string(x) << "\n";
}

template <class R>
std::string series_to_text(const Series<R>& f) {
    std::ostringstream os;
    write_series(os, f);
    return os.str();
}

struct SeriesHeader {
    Var var;
    Rat prefac;
    int order;
    std::string ring;
};

SeriesHeader parse_series_header(const std::string& line);

SeriesQ read_series_q(std::istream& is);
SeriesFp read_series_fp(std::istream& is);
SeriesM read_series_m(std::istream& is);
SeriesQuad read_series_quad(std::istream& is);

// Reads whatever ring the header declares and converts to Q, failing loudly
// on Fp / non-rational Qsqrt input.
SeriesQ read_series_any_as_q(std::istream& is);

}  // namespace lamext
