#include "diffops/linear_ode.hpp"

#include <stdexcept>

namespace lamext {

namespace {

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly g = Poly::gcd(a, b);
    Poly q, r;
    Poly::divmod(a * b, g, q, r);
    if (!r.is_zero()) throw std::logic_error("poly_lcm: gcd did not divide");
    return q;
}

}  // namespace

LinearODE::LinearODE(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { normalize(); }

LinearODE LinearODE::from_ratfun(std::vector<RatFun> coeffs) {
    Poly lcm{Rat(1)};
    for (const auto& rf : coeffs)
        if (!rf.is_zero()) lcm = poly_lcm(lcm, rf.den());
    std::vector<Poly> out;
    out.reserve(coeffs.size());
    for (const auto& rf : coeffs) {
        Poly q, r;
        Poly::divmod(lcm, rf.den(), q, r);
        out.push_back(rf.num() * q);
    }
    return LinearODE(std::move(out));
}

void LinearODE::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) throw std::invalid_argument("zero operator");
    // integer-primitive: divide by the rational content of the whole stack
    Rat content(0);
    Int g(0), l(1);
    for (const Poly& p : c_) {
        if (p.is_zero()) continue;
        for (const Rat& x : p.coeffs()) {
            if (lamext::is_zero(x)) continue;
            Int num = x.get_num();
            if (num < 0) num = -num;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            Int den = x.get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
    }
    content = make_rat(g, l);
    if (lamext::is_zero(content)) throw std::invalid_argument("zero operator");
    Rat scale = Rat(1) / content;
    if (sgn(c_.back().leading()) < 0) scale = -scale;
    for (Poly& p : c_) p = scale * p;
}

std::string LinearODE::to_string() const {
    std::string out = "order=" + std::to_string(order());
    for (int i = 0; i <= order(); ++i)
        out += "\ncoeff[" + std::to_string(i) + "] = " + c_[i].to_string();
    return out;
}

namespace {

// derivative of x^{e} * sum c_k x^k: prefactor drops by one, coefficients
// pick up (e+k); no truncation loss in this representation
template <class R>
Series<R> deriv_prefac(const Series<R>& f) {
    Series<R> out = f;
    out.prefac = f.prefac - 1;
    for (int k = 0; k < f.order(); ++k) {
        Rat w = f.prefac + Rat(k);
        out.c[k] = RingTraits<R>::from_rat(f.ctx, w) * f.c[k];
    }
    return out;
}

template <class R>
Series<R> poly_mul_series(const Poly& p, const Series<R>& f) {
    int n = f.order();
    auto out = series_zero<R>(f.var, n, f.ctx);
    out.prefac = f.prefac;
    for (int d = 0; d <= p.degree(); ++d) {
        Rat cd = p.coeff(d);
        if (lamext::is_zero(cd)) continue;
        R c = RingTraits<R>::from_rat(f.ctx, cd);
        for (int k = 0; k + d < n; ++k) out.c[k + d] += c * f.c[k];
    }
    return out;
}

template <class R>
Series<R> apply_impl(const LinearODE& op, const Series<R>& f) {
    int r = op.order();
    // terms share the common prefactor exponent f.prefac - r
    Series<R> acc = series_zero<R>(f.var, f.order(), f.ctx);
    acc.prefac = f.prefac - Rat(r);
    Series<R> fi = f;  // i-th derivative
    for (int i = 0; i <= r; ++i) {
        if (!op.coeff(i).is_zero()) {
            auto term = poly_mul_series(op.coeff(i), fi);
            term = shift_up(term, r - i);
            term.prefac = acc.prefac;
            acc = add(acc, term);
        }
        if (i < r) fi = deriv_prefac(fi);
    }
    return acc;
}

}  // namespace

SeriesQ apply(const LinearODE& op, const SeriesQ& f) { return apply_impl(op, f); }
SeriesQuad apply_quad(const LinearODE& op, const SeriesQuad& f) { return apply_impl(op, f); }

SeriesQ apply_exact(const RatOperator& op, const SeriesQ& f) {
    if (!is_zero(f.prefac))
        throw std::invalid_argument("apply_exact: zero prefactor expected");
    int r = op.order();
    int n = f.order();
    // common pole order at t = 0 across the coefficients
    int pole = 0;
    for (const auto& rf : op.coeffs)
        if (!rf.is_zero()) pole = std::max(pole, rf.den().valuation());
    int work = n + pole;
    // accumulate t^{-pole} * acc
    auto acc = series_zero<Rat>(f.var, work);
    SeriesQ fi = f;
    for (int i = 0; i <= r; ++i) {
        if (!op.coeffs[(size_t)i].is_zero()) {
            int shift = 0;
            auto cs = op.coeffs[(size_t)i].to_series_with_pole(f.var, work, shift);
            auto term = mul(shift_up(cs, pole - shift), truncate(fi, work));
            acc = add(acc, truncate(term, work));
        }
        if (i < r) fi = differentiate(fi);
    }
    for (int k = 0; k < pole; ++k)
        if (!is_zero(acc.c[k]))
            throw std::domain_error("apply_exact: non-removable coefficient pole at t=0");
    auto out = pole > 0 ? shift_down(acc, pole) : acc;
    return truncate(out, std::max(1, n - r));
}

bool annihilates(const LinearODE& op, const SeriesQ& f) { return apply(op, f).is_zero(); }
bool annihilates_quad(const LinearODE& op, const SeriesQuad& f) {
    return apply_quad(op, f).is_zero();
}

LinearODE multiply(const LinearODE& a, const LinearODE& b) {
    int ra = a.order(), rb = b.order();
    std::vector<Poly> out((size_t)(ra + rb + 1));
    for (int i = 0; i <= ra; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= rb; ++j) {
            if (b.coeff(j).is_zero()) continue;
            // D^i (b_j y^{(j)}) = sum_k C(i,k) b_j^{(i-k)} y^{(j+k)}
            std::vector<Poly> ders(i + 1);
            ders[i] = b.coeff(j);
            for (int k = i - 1; k >= 0; --k) ders[k] = ders[k + 1].derivative();
            for (int k = 0; k <= i; ++k) {
                // C(i, k)
                Rat c(1);
                for (int u = 0; u < k; ++u) c = c * Rat(i - u) / Rat(u + 1);
                out[(size_t)(j + k)] += a.coeff(i) * (c * ders[k]);
            }
        }
    }
    return LinearODE(std::move(out));
}

LinearODE conjugate_by_power(const LinearODE& op, const Rat& a0, const Rat& a1) {
    // replace D by D + gamma with gamma = -(a0/t - a1/(1-t)) = (w^{-1})'/w^{-1}
    RatFun gamma = RatFun(Poly(-a0), Poly::variable()) -
                   RatFun(Poly(-a1), Poly::from_longs({1, -1}));
    int r = op.order();
    std::vector<RatFun> acc((size_t)(r + 1));
    std::vector<RatFun> power{RatFun(Rat(1))};  // (D+gamma)^i coefficients
    for (int i = 0; i <= r; ++i) {
        if (!op.coeff(i).is_zero())
            for (size_t j = 0; j < power.size(); ++j)
                acc[j] += RatFun::from_poly(op.coeff(i)) * power[j];
        if (i == r) break;
        std::vector<RatFun> next(power.size() + 1);
        for (size_t j = 0; j < power.size(); ++j) {
            next[j + 1] += power[j];
            next[j] += power[j].derivative() + gamma * power[j];
        }
        power = std::move(next);
    }
    return LinearODE::from_ratfun(std::move(acc));
}

LinearODE shift_operator(const LinearODE& op, const Rat& t0) {
    std::vector<Poly> out;
    out.reserve((size_t)op.order() + 1);
    for (int i = 0; i <= op.order(); ++i) out.push_back(op.coeff(i).shift(t0));
    return LinearODE(std::move(out));
}

LinearODE sym_square_order2(const LinearODE& op) {
    if (op.order() != 2) throw std::invalid_argument("sym_square: order-2 operator required");
    RatFun lead = RatFun::from_poly(op.coeff(2));
    RatFun p = RatFun::from_poly(op.coeff(1)) / lead;
    RatFun q = RatFun::from_poly(op.coeff(0)) / lead;
    // D^3 + 3p D^2 + (2p^2 + p' + 4q) D + (4pq + 2q')
    std::vector<RatFun> c(4);
    c[3] = RatFun(Rat(1));
    c[2] = RatFun(Rat(3)) * p;
    c[1] = RatFun(Rat(2)) * p * p + p.derivative() + RatFun(Rat(4)) * q;
    c[0] = RatFun(Rat(4)) * p * q + RatFun(Rat(2)) * q.derivative();
    return LinearODE::from_ratfun(std::move(c));
}

LinearODE d_t() { return LinearODE(std::vector<Poly>{Poly(), Poly(Rat(1))}); }

LinearODE annihilator_of_power(const Rat& a0, const Rat& a1) {
    // t(1-t) y' - (a0(1-t) - a1 t) y = 0 for y = t^{a0}(1-t)^{a1}
    Poly t = Poly::variable();
    Poly omt = Poly::from_longs({1, -1});
    std::vector<Poly> c(2);
    c[1] = t * omt;
    c[0] = -(Poly(a0) * omt - Poly(a1) * t);
    return LinearODE(std::move(c));
}

LinearODE hyp2f1_operator(const Rat& a, const Rat& b, const Rat& c) {
    // t(1-t) y'' + (c - (a+b+1) t) y' - ab y
    Poly t = Poly::variable();
    std::vector<Poly> p(3);
    p[2] = t * Poly::from_longs({1, -1});
    p[1] = Poly(c) - Poly(a + b + 1) * t;
    p[0] = Poly(-(a * b));
    return LinearODE(std::move(p));
}

namespace {

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return Int(2);
    Int x(2), y(2), d(1), c(1);
    auto f = [&](const Int& v) { return (v * v + c) % n; };
    while (true) {
        x = f(x);
        y = f(f(y));
        Int diff = x - y;
        if (diff < 0) diff = -diff;
        if (diff == 0) {
            c += 1;
            x = 2;
            y = 2;
            d = 1;
            continue;
        }
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        if (d == n) {
            c += 1;
            x = 2;
            y = 2;
            d = 1;
            continue;
        }
        if (d > 1) return d;
    }
}

void factor_into(Int m, std::vector<std::pair<Int, int>>& fac) {
    if (m <= 1) return;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
        for (auto& [p, e] : fac)
            if (p == m) {
                ++e;
                return;
            }
        fac.emplace_back(m, 1);
        return;
    }
    Int d = pollard_rho(m);
    factor_into(d, fac);
    factor_into(m / d, fac);
}

// all positive divisors of n, via full factorization
void int_divisors(const Int& n, std::vector<Int>& out) {
    Int m = n < 0 ? Int(-n) : n;
    std::vector<std::pair<Int, int>> fac;
    Int d(2);
    while (d * d <= m && d <= 100000) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
        d += 1;
    }
    factor_into(m, fac);
    out = {Int(1)};
    for (const auto& [prime, e] : fac) {
        std::vector<Int> next;
        Int pk(1);
        for (int k = 0; k <= e; ++k) {
            for (const Int& x : out) next.push_back(x * pk);
            pk *= prime;
        }
        out = std::move(next);
    }
}

std::vector<Rat> rational_roots(Poly p) {
    std::vector<Rat> roots;
    if (p.is_zero()) return roots;
    // strip roots at 0
    int v = p.valuation();
    if (v > 0) {
        std::vector<Rat> c(p.coeffs().begin() + v, p.coeffs().end());
        for (int i = 0; i < v; ++i) roots.emplace_back(0);
        p = Poly(std::move(c));
    }
    if (p.degree() == 0) return roots;
    // integer-primitive rescale
    Rat content = p.content();
    p = (Rat(1) / content) * p;
    Int a0 = p.coeff(0).get_num();
    Int lead = p.leading().get_num();
    std::vector<Int> ds, dl;
    int_divisors(a0, ds);
    int_divisors(lead, dl);
    std::vector<Rat> candidates;
    for (const Int& num : ds)
        for (const Int& den : dl) {
            candidates.push_back(make_rat(num, den));
            candidates.push_back(make_rat(-num, den));
        }
    for (const Rat& cand : candidates) {
        while (p.degree() > 0 && lamext::is_zero(p.eval(cand))) {
            roots.push_back(cand);
            // deflate by (t - cand)
            Poly q, r;
            Poly::divmod(p, Poly(std::vector<Rat>{-cand, Rat(1)}), q, r);
            p = q;
        }
    }
    return roots;
}

}  // namespace

IndicialResult indicial_exponents(const LinearODE& op, const Rat& t0) {
    LinearODE local = lamext::is_zero(t0) ? op : shift_operator(op, t0);
    int r = local.order();
    if (local.coeff(r).is_zero()) throw std::invalid_argument("degenerate leading coefficient");
    long vr = local.coeff(r).valuation();
    long v = vr - r;
    // Fuchs condition: val(p_i) - i >= val(p_r) - r for all i
    for (int i = 0; i < r; ++i) {
        if (local.coeff(i).is_zero()) continue;
        if (local.coeff(i).valuation() - i < v)
            throw std::domain_error("irregular singular point at t0");
    }
    // indicial polynomial: sum over i with val(p_i) - i = v of
    // lowcoeff(p_i) * s(s-1)...(s-i+1)
    Poly ind;
    for (int i = 0; i <= r; ++i) {
        const Poly& pi = local.coeff(i);
        if (pi.is_zero()) continue;
        long vi = pi.valuation();
        if (vi - i != v) continue;
        Poly falling{Rat(1)};
        for (int k = 0; k < i; ++k)
            falling = falling * Poly(std::vector<Rat>{Rat(-k), Rat(1)});
        ind += pi.coeff((int)vi) * falling;
    }
    IndicialResult out;
    out.indicial = ind;
    out.roots = rational_roots(ind);
    return out;
}

std::vector<SeriesQ> local_solutions(const LinearODE& op, const Rat& t0, int n) {
    LinearODE local = lamext::is_zero(t0) ? op : shift_operator(op, t0);
    int r = local.order();
    if (lamext::is_zero(local.coeff(r).coeff(0)))
        throw std::domain_error("local_solutions: t0 is a singular point");
    Rat lead0 = local.coeff(r).coeff(0);
    std::vector<SeriesQ> basis;
    for (int k = 0; k < r; ++k) {
        auto y = series_zero<Rat>(Var::x, n);
        if (k < n) y.c[k] = Rat(1);
        // coefficient of x^m of sum_i p_i y^{(i)} = 0 determines y_{m+r}
        for (int m = 0; m + r < n; ++m) {
            Rat acc(0);
            for (int i = 0; i <= r; ++i) {
                const Poly& pi = local.coeff(i);
                for (int d = 0; d <= pi.degree(); ++d) {
                    long a = m - d + i;
                    if (a < 0 || a >= n) continue;
                    if (i == r && d == 0) continue;  // the unknown
                    Rat ff(1);
                    for (int u = 0; u < i; ++u) ff *= Rat(a - u);
                    if (lamext::is_zero(ff)) continue;
                    acc += pi.coeff(d) * ff * y.c[a];
                }
            }
            Rat ffr(1);
            for (int u = 0; u < r; ++u) ffr *= Rat(m + r - u);
            y.c[m + r] = -acc / (lead0 * ffr);
        }
        basis.push_back(std::move(y));
    }
    return basis;
}

bool same_solution_space(const LinearODE& a, const LinearODE& b, const Rat& t0, int n) {
    if (a.order() != b.order()) return false;
    auto in_kernel = [&](const LinearODE& op, const LinearODE& other) {
        auto shifted = shift_operator(other, t0);
        for (const auto& y : local_solutions(op, t0, n))
            if (!annihilates(shifted, y)) return false;
        return true;
    };
    return in_kernel(a, b) && in_kernel(b, a);
}

Rat common_ordinary_point(const std::vector<LinearODE>& ops) {
    std::vector<Rat> candidates = {make_rat(1, 2), make_rat(1, 3), make_rat(2, 1),
                                   make_rat(3, 1), make_rat(1, 5), make_rat(5, 1),
                                   make_rat(2, 3), make_rat(3, 2), make_rat(7, 1)};
    for (const Rat& c : candidates) {
        bool ok = true;
        for (const auto& op : ops)
            if (lamext::is_zero(op.coeff(op.order()).eval(c))) {
                ok = false;
                break;
            }
        if (ok) return c;
    }
    throw std::runtime_error("no common ordinary point among candidates");
}

}  // namespace lamext
