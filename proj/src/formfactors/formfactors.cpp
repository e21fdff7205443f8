#include "formfactors/formfactors.hpp"

#include "diffops/catalog.hpp"
#include "diffops/linear_ode.hpp"
#include "special/hyp2f1.hpp"
#include "special/nome.hpp"

#include <stdexcept>

namespace lamext {

namespace {

// arcsin(x) = x * A(x^2); returns A as a series in its own variable
SeriesQ arcsin_even_part(int n) {
    auto sq = series_zero<Rat>(Var::lambda2, 2 * n + 2);
    sq.c[0] = Rat(1);
    sq.c[2] = Rat(-1);
    auto arcsin = integrate(pow_rational(sq, make_rat(-1, 2)));  // odd series in lambda
    auto a = series_zero<Rat>(Var::lambda2, n);
    for (int m = 0; m < n; ++m)
        if (2 * m + 1 < arcsin.order()) a.c[m] = arcsin.c[2 * m + 1];
    return a;
}

// W(x) = arcsin(sqrt x)^2 = x * A(x)^2 and the inverse-sqrt prefactor
SeriesQ arcsin_sq(int n) {
    auto a = arcsin_even_part(n);
    return shift_up(mul(a, a), 1);
}

}  // namespace

SeriesQ theta1_ratio(int j, int n) {
    auto num = theta_series(ThetaSpec{1, Angle::zero, j, n});
    auto ratio = div(num, theta2_theta3sq(n));
    return qseries_to_tseries(ratio);
}

SeriesQ theta2_ratio_neg(int j, int n) {
    auto num = theta_series(ThetaSpec{2, Angle::zero, j, n});
    auto ratio = neg(div(num, theta2_theta3sq(n)));
    return qseries_to_tseries(ratio);
}

SeriesQ theta4_ratio(int j, int n) {
    auto num = theta_series(ThetaSpec{4, Angle::zero, j, n});
    auto den = theta_series(ThetaSpec{4, Angle::zero, 0, n});
    return qseries_to_tseries(div(num, den));
}

SeriesQ form_factor_weighted(int k, int n) {
    // coefficient of x^k (x = lambda^2) in (1-x)^{-1/2} sum_p W^p/(2p)! T_{2p+1}
    int xn = k + 1;
    auto omx = series_zero<Rat>(Var::lambda2, xn);
    omx.c[0] = Rat(1);
    if (xn > 1) omx.c[1] = Rat(-1);
    auto pref = pow_rational(omx, make_rat(-1, 2));
    auto w = arcsin_sq(xn);
    auto acc = series_zero<Rat>(Var::t, n);
    auto wp = series_const<Rat>(Var::lambda2, Rat(1), xn);  // W^p
    Rat fact(1);                                            // (2p)!
    for (int p = 0; p <= k; ++p) {
        if (p > 0) {
            wp = mul(wp, w);
            fact *= Rat(2 * p - 1) * Rat(2 * p);
        }
        Rat ckp = mul(pref, wp).c[k] / fact;
        if (!is_zero(ckp)) acc = add(acc, rat_mul(ckp, theta1_ratio(2 * p + 1, n)));
    }
    return acc;
}

SeriesQ form_factor_series(int k, int n) {
    auto quarter = pow_rational(Poly::from_longs({1, -1}).to_series(Var::t, n), make_rat(1, 4));
    return div(form_factor_weighted(k, n), quarter);
}

EKPoly form_factor_closed(int k) {
    auto pf = [](std::vector<long> v) { return RatFun::from_poly(Poly::from_longs(std::move(v))); };
    RatFun one(Rat(1));
    auto ek = [&](int i, int j) { return EKPoly::term(i, j, EKPoly::Coeff{one, RatFun()}); };
    switch (k) {
        case 0: return EKPoly::constant(Rat(1));
        case 1:
            // (1/2)(1 - 3EK - (t-2)K^2)
            return RatFun(make_rat(1, 2)) *
                   (EKPoly::constant(Rat(1)) - RatFun(Rat(3)) * ek(1, 1) - pf({-2, 1}) * ek(0, 2));
        case 2:
            // (1/24)(9 - 30EK - 10(t-2)K^2 + (t^2-6t+6)K^4 + 15E^2K^2 + 10(t-2)EK^3)
            return RatFun(make_rat(1, 24)) *
                   (EKPoly::constant(Rat(9)) - RatFun(Rat(30)) * ek(1, 1) -
                    (RatFun(Rat(10)) * pf({-2, 1})) * ek(0, 2) + pf({6, -6, 1}) * ek(0, 4) +
                    RatFun(Rat(15)) * ek(2, 2) + (RatFun(Rat(10)) * pf({-2, 1})) * ek(1, 3));
        default: throw std::invalid_argument("form_factor_closed: only k <= 2 transcribed");
    }
}

SeriesQ g_series(int k, int n) {
    // coefficient of M^k in sum_p z^p A(z)^{2p+1}/(2p+1)! Theta_{2p+2}, z = M/4
    int zn = k + 1;
    auto a = arcsin_even_part(zn);
    auto acc = series_zero<Rat>(Var::t, n);
    auto apow = a;  // A^{2p+1}
    auto a2 = mul(a, a);
    Rat fact(1);  // (2p+1)!
    Rat inv4k = pow_rat(make_rat(1, 4), k);
    for (int p = 0; p <= k; ++p) {
        if (p > 0) {
            apow = mul(apow, a2);
            fact *= Rat(2 * p) * Rat(2 * p + 1);
        }
        // [z^k] z^p A^{2p+1} = [z^{k-p}] A^{2p+1}
        Rat ckp = apow.c[k - p] / fact;
        if (!is_zero(ckp)) acc = add(acc, rat_mul(ckp * inv4k, theta2_ratio_neg(2 * p + 2, n)));
    }
    return acc;
}

EKPoly g_closed(int k) {
    auto pf = [](std::vector<long> v) { return RatFun::from_poly(Poly::from_longs(std::move(v))); };
    RatFun one(Rat(1));
    auto ek = [&](int i, int j) { return EKPoly::term(i, j, EKPoly::Coeff{one, RatFun()}); };
    switch (k) {
        case 0: return EKPoly::e();
        case 1:
            // E/24 - K E^2/8 - (t-1) K^3/12
            return RatFun(make_rat(1, 24)) * ek(1, 0) - RatFun(make_rat(1, 8)) * ek(2, 1) -
                   (RatFun(make_rat(1, 12)) * pf({-1, 1})) * ek(0, 3);
        case 2:
            // 3E/640 - E^2 K/64 - (t-1)K^3/96 + E^3 K^2/128 + (t-1)E K^4/64
            //   + (t-1)(t-2) K^5/240
            return RatFun(make_rat(3, 640)) * ek(1, 0) - RatFun(make_rat(1, 64)) * ek(2, 1) -
                   (RatFun(make_rat(1, 96)) * pf({-1, 1})) * ek(0, 3) +
                   RatFun(make_rat(1, 128)) * ek(3, 2) +
                   (RatFun(make_rat(1, 64)) * pf({-1, 1})) * ek(1, 4) +
                   (RatFun(make_rat(1, 240)) * pf({-1, 1}) * pf({-2, 1})) * ek(0, 5);
        case 3:
            // 5E/7168 - 37KE^2/15360 - 37(t-1)K^3/23040 + 5K^2E^3/3072
            //   + 5(t-1)K^4E/1536 + (t-1)(t-2)K^5/1152 - K^3E^4/3072
            //   - (t-1)K^5E^2/768 - (t-1)(t-2)K^6E/1440
            //   - (t-1)(8t^2-33t+33)K^7/80640
            return RatFun(make_rat(5, 7168)) * ek(1, 0) -
                   RatFun(make_rat(37, 15360)) * ek(2, 1) -
                   (RatFun(make_rat(37, 23040)) * pf({-1, 1})) * ek(0, 3) +
                   RatFun(make_rat(5, 3072)) * ek(3, 2) +
                   (RatFun(make_rat(5, 1536)) * pf({-1, 1})) * ek(1, 4) +
                   (RatFun(make_rat(1, 1152)) * pf({-1, 1}) * pf({-2, 1})) * ek(0, 5) -
                   RatFun(make_rat(1, 3072)) * ek(4, 3) -
                   (RatFun(make_rat(1, 768)) * pf({-1, 1})) * ek(2, 5) -
                   (RatFun(make_rat(1, 1440)) * pf({-1, 1}) * pf({-2, 1})) * ek(1, 6) -
                   (RatFun(make_rat(1, 80640)) * pf({-1, 1}) * pf({33, -33, 8})) * ek(0, 7);
        default: throw std::invalid_argument("g_closed: only k <= 3 transcribed");
    }
}

SeriesQ apply_rk(int k, int n) {
    if (k < 1 || k > 3) throw std::invalid_argument("apply_rk: k in {1,2,3}");
    const char* names[] = {"R1", "R2", "R3"};
    const auto& op = paper_intertwiner(names[k - 1]);
    auto e = elliptic_e_cached(n + op.order());
    return truncate(apply_exact(op, pow_long(e, 2 * k + 1)), n);
}

SeriesQ rk_theta_ratio(int k, int n) { return theta2_ratio_neg(2 * k + 2, n); }

SeriesQ lambda_ext(Angle u0, int n) { return lambda_extension_closed(u0, n); }

SeriesQuad S_ratio_quad(Angle u0, int k, int n) {
    if (u0 == Angle::zero || u0 == Angle::pi2)
        throw std::invalid_argument("S_ratio: deformation angles are pi/6, pi/4, pi/3");
    long d = angle_field(u0);
    auto num = theta_series_quad(ThetaSpec{2, u0, k, n}, d);
    auto den = theta_series_quad(ThetaSpec{2, u0, 1, n}, d);
    return qseries_to_tseries(div(num, den));
}

SeriesQ S_ratio(Angle u0, int k, int n) {
    auto s = S_ratio_quad(u0, k, n);
    long d = s.ctx.d;
    // at pi/6 the even-order theta derivatives carry sqrt3, at pi/3 the first
    // derivative in the denominator does; either way even k is sqrt-flavored
    bool sqrt_flavored = (u0 != Angle::pi4) && (k % 2 == 0);
    if (!sqrt_flavored) return descend_to_rational(s);
    // divide by sqrt(d)
    auto inv_sqrt = QuadExt{Rat(0), make_rat(1, d), d};  // 1/sqrt(d) = sqrt(d)/d
    return descend_to_rational(scalar_mul(inv_sqrt, s));
}

EKPoly S_ratio_closed_pi4(int k) {
    auto pf = [](std::vector<long> v) { return RatFun::from_poly(Poly::from_longs(std::move(v))); };
    RatFun t(Poly::variable(), Poly(Rat(1)));
    auto mixed = [&](RatFun a, RatFun b, int i, int j) {
        return EKPoly::term(i, j, EKPoly::Coeff{std::move(a), std::move(b)});
    };
    RatFun zero;
    switch (k) {
        case 2:
            // (2/t)(1 - s) E - (1/(2t))((t-4)s - (3t-4)) K
            return mixed(RatFun(Rat(2)) / t, -(RatFun(Rat(2)) / t), 1, 0) +
                   mixed((RatFun(Rat(1)) / (RatFun(Rat(2)) * t)) * pf({-4, 3}),
                         -(RatFun(Rat(1)) / (RatFun(Rat(2)) * t)) * pf({-4, 1}), 0, 1);
        case 3:
            // (1/4)(6s - (t-2)) K^2 - 3EK
            return mixed(RatFun(make_rat(-1, 4)) * pf({-2, 1}), RatFun(make_rat(3, 2)), 0, 2) +
                   mixed(RatFun(Rat(-3)), zero, 1, 1);
        case 4: {
            // (3/t)((t-4)s - (3t-4)) E K^2 - (6/t)(1-s) E^2 K
            //   + (1/(8t))((t^2-28t+48)s - (21t^2-68t+48)) K^3
            auto c1 = mixed(-(RatFun(Rat(3)) / t) * pf({-4, 3}), (RatFun(Rat(3)) / t) * pf({-4, 1}),
                            1, 2);
            auto c2 = mixed(-(RatFun(Rat(6)) / t), RatFun(Rat(6)) / t, 2, 1);
            auto c3 = mixed(-(RatFun(make_rat(1, 8)) / t) * pf({48, -68, 21}),
                            (RatFun(make_rat(1, 8)) / t) * pf({48, -28, 1}), 0, 3);
            return c1 + c2 + c3;
        }
        case 5: {
            // 15 E^2K^2 - (5/2)(6s - (t-2)) E K^3
            //   - (1/16)(60(t-2)s - (t^2+24t-24)) K^4
            auto c1 = mixed(RatFun(Rat(15)), zero, 2, 2);
            auto c2 = mixed(RatFun(make_rat(5, 2)) * pf({-2, 1}), RatFun(Rat(-15)), 1, 3);
            auto c3 = mixed(RatFun(make_rat(1, 16)) * pf({-24, 24, 1}),
                            RatFun(make_rat(-60, 16)) * pf({-2, 1}), 0, 4);
            return c1 + c2 + c3;
        }
        case 6: {
            // -(1/(32t))((t^3-168t^2+944t-960)s - (183t^3-1160t^2+1936t-960)) K^5
            //   - (15/(8t))((t^2-28t+48)s - (21t^2-68t+48)) E K^4
            //   - (45/(2t))((t-4)s - (3t-4)) E^2 K^3 + (30/t)(1-s) E^3 K^2
            auto c1 = mixed((RatFun(make_rat(1, 32)) / t) * pf({-960, 1936, -1160, 183}),
                            -(RatFun(make_rat(1, 32)) / t) * pf({-960, 944, -168, 1}), 0, 5);
            auto c2 = mixed((RatFun(make_rat(15, 8)) / t) * pf({48, -68, 21}),
                            -(RatFun(make_rat(15, 8)) / t) * pf({48, -28, 1}), 1, 4);
            auto c3 = mixed((RatFun(make_rat(45, 2)) / t) * pf({-4, 3}),
                            -(RatFun(make_rat(45, 2)) / t) * pf({-4, 1}), 2, 3);
            auto c4 = mixed(RatFun(Rat(30)) / t, -(RatFun(Rat(30)) / t), 3, 2);
            return c1 + c2 + c3 + c4;
        }
        default: throw std::invalid_argument("S_ratio_closed_pi4: 2 <= k <= 6");
    }
}

namespace {

Rat m0_of_angle(Angle u0) {
    switch (u0) {
        case Angle::pi6: return Rat(1);
        case Angle::pi4: return Rat(2);
        case Angle::pi3: return Rat(3);
        case Angle::pi2: return Rat(4);
        default: throw std::invalid_argument("G_series: unsupported base angle");
    }
}

// scalar rho-series P * h^p / p! over the angle's field, as a table of
// QuadExt coefficients per p
std::vector<SeriesQuad> g_weight_table(Angle u0, int kmax, long d) {
    Rat m0 = m0_of_angle(u0);
    int rn = kmax + 1;
    QuadCtx ctx{d};
    // h'(rho) = (1/2) (m0(4-m0) + (4-2m0) rho - rho^2)^{-1/2}
    Rat c0 = m0 * (Rat(4) - m0);
    // inner = 1 + ((4-2m0) rho - rho^2)/c0
    auto inner = series_zero<Rat>(Var::rho, rn + 1);
    inner.c[0] = Rat(1);
    if (rn + 1 > 1) inner.c[1] = (Rat(4) - Rat(2) * m0) / c0;
    if (rn + 1 > 2) inner.c[2] = Rat(-1) / c0;
    auto root = pow_rational(inner, make_rat(-1, 2));
    // 1/(2 sqrt(c0)) as a field element: c0 is 3 or 4 at the supported angles
    QuadExt scale{Rat(0), Rat(0), d};
    if (c0 == Rat(4))
        scale = QuadExt{make_rat(1, 4), Rat(0), d};
    else if (c0 == Rat(3))
        scale = QuadExt{Rat(0), make_rat(1, 6), d};  // 1/(2 sqrt 3) = sqrt3/6
    else
        throw std::logic_error("unexpected arcsin offset constant");
    auto hprime = scalar_mul(scale, lift_to_quad(root, d));
    auto h = truncate(integrate(hprime), rn);
    // P = (1 + rho/m0)^{-1/2}
    auto pin = series_zero<Rat>(Var::rho, rn);
    pin.c[0] = Rat(1);
    if (rn > 1) pin.c[1] = Rat(1) / m0;
    auto pref = lift_to_quad(pow_rational(pin, make_rat(-1, 2)), d);
    std::vector<SeriesQuad> rows;
    auto hp = series_const<QuadExt>(Var::rho, RingTraits<QuadExt>::one(ctx), rn);
    Rat fact(1);
    for (int p = 0; p <= kmax; ++p) {
        if (p > 0) {
            hp = mul(hp, h);
            fact *= Rat(p);
        }
        rows.push_back(rat_mul(Rat(1) / fact, mul(pref, hp)));
    }
    return rows;
}

}  // namespace

std::vector<Rat> G_weights(Angle u0, int k) {
    // rational only when the sqrt parts cancel against the S-parity; used for
    // the pi/4 report where everything is rational
    if (u0 != Angle::pi4) throw std::invalid_argument("G_weights: rational table only at pi/4");
    auto rows = g_weight_table(u0, k, 2);
    std::vector<Rat> out;
    for (int p = 0; p <= k; ++p) {
        const QuadExt& c = rows[(size_t)p].c[k];
        if (!is_zero(c.b)) throw std::logic_error("pi/4 weight not rational");
        out.push_back(c.a);
    }
    return out;
}

SeriesQ G_series(Angle u0, int k, int n) {
    if (u0 == Angle::pi2) {
        // rho = M - 4 = -4 lambda^2: G_k = (-1/4)^k (1-t)^{1/4} f^{(2k)}
        return rat_mul(pow_rat(make_rat(-1, 4), k), form_factor_weighted(k, n));
    }
    long d = angle_field(u0);
    auto rows = g_weight_table(u0, k, d);
    QuadCtx ctx{d};
    auto acc = series_zero<QuadExt>(Var::t, n, ctx);
    for (int p = 0; p <= k; ++p) {
        QuadExt w = rows[(size_t)p].c[k];
        if (RingTraits<QuadExt>::is_zero(w)) continue;
        SeriesQuad sp = (p == 0) ? series_const<QuadExt>(Var::t, RingTraits<QuadExt>::one(ctx), n)
                                 : S_ratio_quad(u0, p + 1, n);
        acc = add(acc, scalar_mul(w, sp));
    }
    auto g0 = lift_to_quad(lambda_ext(u0, n), d);
    return descend_to_rational(mul(g0, acc));
}

SeriesQ G0_closed_pi4(int n) {
    auto one_minus_t = Poly::from_longs({1, -1}).to_series(Var::t, n);
    auto sq = pow_rational(one_minus_t, make_rat(1, 2));
    auto half = rat_mul(make_rat(1, 2), add(series_const<Rat>(Var::t, Rat(1), n), sq));
    return mul(pow_rational(one_minus_t, make_rat(1, 16)), pow_rational(half, make_rat(3, 4)));
}

SeriesQ c00_kappa(int k, int n) {
    int xn = k + 1;
    auto w = arcsin_sq(xn);
    auto acc = series_zero<Rat>(Var::t, n);
    auto wp = series_const<Rat>(Var::lambda2, Rat(1), xn);
    Rat fact(1);
    for (int p = 0; p <= k; ++p) {
        if (p > 0) {
            wp = mul(wp, w);
            fact *= Rat(2 * p - 1) * Rat(2 * p);
        }
        Rat ckp = wp.c[k] / fact;
        if (!is_zero(ckp)) acc = add(acc, rat_mul(ckp, theta4_ratio(2 * p, n)));
    }
    return acc;
}

SeriesQ c00_lambda1(int n) {
    auto th3 = theta_series(ThetaSpec{3, Angle::zero, 0, n});
    auto r = div(th3, th3);
    return qseries_to_tseries(r);
}

std::vector<std::vector<Rat>> kappa_ladder_odd(int rows) {
    int vn = 2 * rows + 2;
    auto sq = series_zero<Rat>(Var::x, vn);
    sq.c[0] = Rat(1);
    sq.c[2] = Rat(-1);
    // sin v via cos/sin power series: sin v = sum (-1)^k v^{2k+1}/(2k+1)!
    auto sinv = series_zero<Rat>(Var::x, vn);
    Rat fact(1);
    for (int m = 1; m < vn; m += 2) {
        if (m > 1) fact *= Rat(m - 1) * Rat(m);
        sinv.c[m] = (((m - 1) / 2) % 2 == 0 ? Rat(1) : Rat(-1)) / fact;
    }
    std::vector<std::vector<Rat>> out;
    auto spow = sinv;
    auto s2 = mul(sinv, sinv);
    std::vector<SeriesQ> sin_odd_powers;
    for (int k = 0; k < rows; ++k) {
        sin_odd_powers.push_back(spow);
        spow = mul(spow, s2);
    }
    for (int p = 0; p < rows; ++p) {
        std::vector<Rat> row;
        for (int k = 0; k <= p; ++k) row.push_back(sin_odd_powers[(size_t)k].c[2 * p + 1]);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<Rat>> kappa_ladder_even(int rows) {
    int vn = 2 * rows + 1;
    auto sinv = series_zero<Rat>(Var::x, vn);
    Rat fact(1);
    for (int m = 1; m < vn; m += 2) {
        if (m > 1) fact *= Rat(m - 1) * Rat(m);
        sinv.c[m] = (((m - 1) / 2) % 2 == 0 ? Rat(1) : Rat(-1)) / fact;
    }
    auto s2 = mul(sinv, sinv);
    std::vector<SeriesQ> sin_even_powers;
    auto cur = series_const<Rat>(Var::x, Rat(1), vn);
    for (int k = 0; k < rows; ++k) {
        sin_even_powers.push_back(cur);
        cur = mul(cur, s2);
    }
    std::vector<std::vector<Rat>> out;
    for (int p = 0; p < rows; ++p) {
        std::vector<Rat> row;
        for (int k = 0; k <= p; ++k) row.push_back(sin_even_powers[(size_t)k].c[2 * p]);
        out.push_back(std::move(row));
    }
    return out;
}

SeriesQ S_odd_ratio(int j, int n) {
    return div(theta1_ratio(2 * j + 1, n), theta1_ratio(1, n));
}

}  // namespace lamext
