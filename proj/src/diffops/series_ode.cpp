#include "diffops/series_ode.hpp"

#include <stdexcept>

namespace lamext {

SeriesCoeffODE::SeriesCoeffODE(std::vector<SeriesQ> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("zero operator");
    if (c_.back().is_zero()) throw std::invalid_argument("vanishing leading coefficient series");
}

SeriesCoeffODE SeriesCoeffODE::from_linear(const LinearODE& op, int n) {
    std::vector<SeriesQ> c;
    c.reserve((size_t)op.order() + 1);
    for (int i = 0; i <= op.order(); ++i) c.push_back(op.coeff(i).to_series(Var::t, n));
    return SeriesCoeffODE(std::move(c));
}

SeriesCoeffODE SeriesCoeffODE::from_ekpoly(const std::vector<EKPoly>& coeffs, int n) {
    std::vector<SeriesQ> c;
    c.reserve(coeffs.size());
    for (const auto& p : coeffs) c.push_back(p.eval(n));
    return SeriesCoeffODE(std::move(c));
}

SeriesQ SeriesCoeffODE::apply(const SeriesQ& f) const {
    if (!is_zero(f.prefac))
        throw std::invalid_argument("SeriesCoeffODE::apply: zero prefactor expected");
    int r = order();
    int n = f.order() - r;
    if (n < 1) throw std::invalid_argument("series too short for operator order");
    auto acc = series_zero<Rat>(f.var, n);
    SeriesQ fi = f;
    for (int i = 0; i <= r; ++i) {
        acc = add(acc, truncate(mul(truncate(c_[i], std::max(1, std::min(c_[i].order(), n))), truncate(fi, std::max(1, n))), n));
        if (i < r) fi = differentiate(fi);
    }
    return acc;
}

SeriesCoeffODE SeriesCoeffODE::multiply_monic(const LinearODE& b, int n) const {
    int ra = order(), rb = b.order();
    // u_j = b_j / lead(b) as t^{-vc} * (power series); vc = valuation of lead
    Poly lead = b.coeff(rb);
    int vc = lead.valuation();
    Poly lead_reduced = lead;
    if (vc > 0) {
        std::vector<Rat> lc(lead.coeffs().begin() + vc, lead.coeffs().end());
        lead_reduced = Poly(std::move(lc));
    }
    int shift_cap = vc + ra;  // deepest pole the Leibniz derivatives can reach
    int work = n + shift_cap + ra;
    auto lead_inv = inverse(lead_reduced.to_series(Var::t, work));
    std::vector<SeriesQ> out((size_t)(ra + rb + 1), series_zero<Rat>(Var::t, work));
    for (int j = 0; j <= rb; ++j) {
        if (b.coeff(j).is_zero()) continue;
        // u_j = b_j/lead = t^{-vc} w with w = b_j * lead_reduced^{-1};
        // derivatives: d/dt (t^{-s} w) = t^{-s-1} (t w' - s w)
        std::vector<SeriesQ> ders{mul(b.coeff(j).to_series(Var::t, work), lead_inv)};
        std::vector<int> shifts{vc};
        for (int k = 0; k < ra; ++k) {
            const SeriesQ& w = ders.back();
            int s = shifts.back();
            int len = w.order() - 1;
            auto tw1 = shift_up(differentiate(w), 1);
            ders.push_back(sub(truncate(tw1, len), rat_mul(Rat(s), truncate(w, len))));
            shifts.push_back(s + 1);
        }
        for (int i = 0; i <= ra; ++i) {
            if (c_[(size_t)i].is_zero()) continue;
            for (int k = 0; k <= i; ++k) {
                Rat binom(1);
                for (int u = 0; u < k; ++u) binom = binom * Rat(i - u) / Rat(u + 1);
                // align t^{-s} to the common t^{-shift_cap}
                const SeriesQ& w = ders[(size_t)(i - k)];
                int s = shifts[(size_t)(i - k)];
                auto aligned = shift_up(truncate(w, std::min(w.order(), work)), shift_cap - s);
                auto term = rat_mul(binom, mul(truncate(c_[(size_t)i], aligned.order()), aligned));
                out[(size_t)(j + k)] = add(truncate(out[(size_t)(j + k)], term.order()), term);
            }
        }
    }
    // the common t^{-shift_cap} is cleared by left-multiplying with t^{shift_cap}
    int m = work;
    for (const auto& s : out) m = std::min(m, s.order());
    std::vector<SeriesQ> cleared;
    cleared.reserve(out.size());
    for (auto& s : out) cleared.push_back(truncate(s, m));
    return SeriesCoeffODE(std::move(cleared));
}

SeriesCoeffODE SeriesCoeffODE::multiply(const SeriesCoeffODE& other) const {
    int ra = order(), rb = other.order();
    int n = c_[0].order();
    for (const auto& s : c_) n = std::min(n, s.order());
    for (const auto& s : other.c_) n = std::min(n, s.order());
    n -= ra;  // derivatives of the inner coefficients cost ra terms
    if (n < 1) throw std::invalid_argument("coefficient series too short for composition");
    std::vector<SeriesQ> out((size_t)(ra + rb + 1), series_zero<Rat>(Var::t, n));
    for (int i = 0; i <= ra; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j <= rb; ++j) {
            std::vector<SeriesQ> ders;
            ders.push_back(truncate(other.c_[j], n + i));
            for (int k = 0; k < i; ++k) ders.push_back(differentiate(ders.back()));
            for (int k = 0; k <= i; ++k) {
                Rat binom(1);
                for (int u = 0; u < k; ++u) binom = binom * Rat(i - u) / Rat(u + 1);
                // coeff of y^{(j+k)} += a_i * C(i,k) * b_j^{(i-k)}
                auto term = rat_mul(binom, mul(truncate(c_[i], n), truncate(ders[(size_t)(i - k)], n)));
                out[(size_t)(j + k)] = add(out[(size_t)(j + k)], truncate(term, n));
            }
        }
    }
    return SeriesCoeffODE(std::move(out));
}

}  // namespace lamext
