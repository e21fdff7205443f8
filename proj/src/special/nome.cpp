#include "special/nome.hpp"

#include "special/theta.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lamext {

namespace {
std::mutex cache_mutex;
std::map<int, SeriesQ> t_of_q_cache;
std::map<int, SeriesQ> q_of_t_cache;
}  // namespace

SeriesQ nome_t_of_q(int n) {
    if (n < 2) throw std::invalid_argument("nome map needs order >= 2");
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = t_of_q_cache.find(n);
        if (it != t_of_q_cache.end()) return it->second;
    }
    auto th2 = theta_series(ThetaSpec{2, Angle::zero, 0, n});
    auto th3 = theta_series(ThetaSpec{3, Angle::zero, 0, n});
    auto ratio4 = div(pow_long(th2, 4), pow_long(th3, 4));  // prefactor exponent 1
    auto t = materialize_prefac(ratio4);
    t.var = Var::q;
    std::lock_guard<std::mutex> lk(cache_mutex);
    t_of_q_cache.emplace(n, t);
    return t;
}

SeriesQ nome_q_of_t(int n) {
    if (n < 2) throw std::invalid_argument("nome map needs order >= 2");
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = q_of_t_cache.find(n);
        if (it != q_of_t_cache.end()) return it->second;
    }
    auto q = revert(nome_t_of_q(n));
    q.var = Var::t;
    std::lock_guard<std::mutex> lk(cache_mutex);
    q_of_t_cache.emplace(n, q);
    return q;
}

SeriesQ qseries_to_tseries(const SeriesQ& f) {
    if (!is_zero(f.prefac))
        throw std::domain_error("q->t transport requires the q^{1/4} prefactors to be cancelled");
    if (f.var != Var::q) throw std::invalid_argument("q->t transport expects a q-series");
    auto g = f;
    g.var = Var::t;
    return compose(g, nome_q_of_t(f.order()));
}

SeriesQuad qseries_to_tseries(const SeriesQuad& f) {
    if (!is_zero(f.prefac))
        throw std::domain_error("q->t transport requires the q^{1/4} prefactors to be cancelled");
    if (f.var != Var::q) throw std::invalid_argument("q->t transport expects a q-series");
    auto g = f;
    g.var = Var::t;
    return compose(g, lift_to_quad(nome_q_of_t(f.order()), f.ctx.d));
}

}  // namespace lamext
