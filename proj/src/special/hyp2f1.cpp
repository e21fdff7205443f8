#include "special/hyp2f1.hpp"

#include <stdexcept>

namespace lamext {

SeriesQ hyp2f1_series(const Rat& a, const Rat& b, const Rat& c, int n) {
    if (is_integer(c) && sgn(c) <= 0)
        throw std::domain_error("hyp2f1: c is a non-positive integer");
    std::vector<Rat> out((size_t)n, Rat(0));
    Rat term(1);
    out[0] = term;
    for (int k = 0; k + 1 < n; ++k) {
        term *= (a + Rat(k)) * (b + Rat(k));
        term /= (c + Rat(k)) * Rat(k + 1);
        out[k + 1] = term;
    }
    return SeriesQ(Var::t, std::move(out));
}

SeriesQ elliptic_k(int n) { return hyp2f1_series(make_rat(1, 2), make_rat(1, 2), Rat(1), n); }
SeriesQ elliptic_e(int n) { return hyp2f1_series(make_rat(1, 2), make_rat(-1, 2), Rat(1), n); }

}  // namespace lamext
