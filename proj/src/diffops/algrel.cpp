#include "diffops/algrel.hpp"

namespace lamext {

AlgRelFp reduce_relation_mod_p(const AlgRelQ& rel, std::uint64_t p) {
    AlgRelFp out;
    for (const auto& [key, c] : rel.terms()) out.add_term(key.first, key.second, rat_mod_p(c, p));
    return out;
}

SeriesQ lift_series_root(const AlgRelQ& rel, const Rat& y0, int n) {
    // dP/dy as a relation
    AlgRelQ dp;
    for (const auto& [key, c] : rel.terms())
        if (key.second >= 1) dp.add_term(key.first, key.second - 1, Rat(key.second) * c);
    {
        auto probe = series_const<Rat>(Var::t, y0, 1);
        if (!is_zero(rel.evaluate(probe).c[0]))
            throw std::domain_error("lift_series_root: y0 is not a root at t=0");
        if (is_zero(dp.evaluate(probe).c[0]))
            throw std::domain_error("lift_series_root: root not simple at t=0");
    }
    // Newton iteration with doubling precision
    auto y = series_const<Rat>(Var::t, y0, 1);
    int prec = 1;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        auto yext = series_zero<Rat>(Var::t, prec);
        for (int k = 0; k < y.order(); ++k) yext.c[k] = y.c[k];
        auto val = rel.evaluate(yext);
        auto der = dp.evaluate(yext);
        y = sub(yext, div(val, der));
    }
    return y;
}

}  // namespace lamext
