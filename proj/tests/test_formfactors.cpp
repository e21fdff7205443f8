#include "doctest.h"

#include "diffops/catalog.hpp"
#include "diffops/series_ode.hpp"
#include "formfactors/formfactors.hpp"
#include "painleve/pvi.hpp"
#include "special/hyp2f1.hpp"

using namespace lamext;

namespace {

Rat rs(const char* s) { return rat_from_string(s); }

// coefficient of x^k in c(4 - 4x) for a polynomial c in M
Rat m_to_lambda2_coeff(const ParamPoly& c, int k) {
    Rat out(0);
    for (int j = k; j <= c.degree(); ++j) {
        // C(j,k) 4^{j-k} (-4)^k
        Rat binom(1);
        for (int u = 0; u < k; ++u) binom = binom * Rat(j - u) / Rat(u + 1);
        out += c.coeff(j) * binom * pow_rat(Rat(4), j - k) * pow_rat(Rat(-4), k);
    }
    return out;
}

}  // namespace

TEST_CASE("weighted form factors against the M-expansion through lambda^2") {
    int n = 16;
    auto sym = pvi_solve_symbolic(n - 1);
    for (int k = 0; k <= 2; ++k) {
        auto ff = form_factor_weighted(k, n);
        CAPTURE(k);
        for (int m = 0; m < n; ++m) {
            CHECK(ff.c[m] == m_to_lambda2_coeff(sym.c[(size_t)m], k));
        }
    }
}

TEST_CASE("printed low-order form factor expansions") {
    auto f1 = form_factor_weighted(1, 7);
    CHECK(f1.c[2] == rs("3/64"));
    CHECK(f1.c[3] == rs("9/256"));
    CHECK(f1.c[4] == rs("441/16384"));
    CHECK(f1.c[5] == rs("1407/65536"));
    CHECK(f1.c[6] == rs("2319/131072"));

    // recomputed values (printed denominators are typographically damaged):
    // 5/2^20 t^6, 55/2^22 t^7, 6255/2^28 t^8, 36625/2^30 t^9, 3079025/2^36 t^10
    auto f2 = form_factor_weighted(2, 11);
    CHECK(f2.c[6] == rs("5/1048576"));
    CHECK(f2.c[7] == rs("55/4194304"));
    CHECK(f2.c[8] == rs("6255/268435456"));
    CHECK(f2.c[9] == rs("36625/1073741824"));
    CHECK(f2.c[10] == rs("3079025/68719476736"));

    auto f3 = form_factor_weighted(3, 16);
    CHECK(f3.c[12] == rs("7/4398046511104"));
    CHECK(f3.c[13] == rs("161/17592186044416"));
    CHECK(f3.c[14] == rs("33789/1125899906842624"));
    CHECK(f3.c[15] == rs("332703/4503599627370496"));

    // plain f^{(2)} and f^{(4)}
    auto p1 = form_factor_series(1, 7);
    CHECK(p1.c[2] == rs("3/64"));
    CHECK(p1.c[3] == rs("3/64"));
    CHECK(p1.c[4] == rs("705/16384"));
    CHECK(p1.c[5] == rs("321/8192"));
    CHECK(p1.c[6] == rs("18795/524288"));
    auto p2 = form_factor_series(2, 10);
    CHECK(p2.c[6] == rs("5/1048576"));
    CHECK(p2.c[7] == rs("15/1048576"));
    CHECK(p2.c[8] == rs("7335/268435456"));
    CHECK(p2.c[9] == rs("2855/67108864"));
}

TEST_CASE("closed form factors match the series pipeline") {
    int n = 20;
    for (int k = 0; k <= 2; ++k) {
        CAPTURE(k);
        CHECK(first_mismatch(form_factor_closed(k).eval(n), form_factor_series(k, n)) == -1);
    }
}

TEST_CASE("theta ratios: f^{(0)} row and E") {
    int n = 14;
    auto quarter = pow_rational(Poly::from_longs({1, -1}).to_series(Var::t, n), make_rat(1, 4));
    CHECK(first_mismatch(theta1_ratio(1, n), quarter) == -1);
    CHECK(first_mismatch(theta2_ratio_neg(2, n), elliptic_e(n)) == -1);
}

TEST_CASE("g-series: printed expansion, E base point, M-expansion agreement") {
    auto g1 = g_series(1, 9);
    CHECK(g1.c[2] == rs("-3/256"));
    CHECK(g1.c[3] == rs("-9/1024"));
    CHECK(g1.c[4] == rs("-441/65536"));
    CHECK(g1.c[5] == rs("-1407/262144"));
    CHECK(g1.c[6] == rs("-9281/2097152"));
    CHECK(g1.c[7] == rs("-31405/8388608"));
    CHECK(g1.c[8] == rs("-13877397/4294967296"));

    CHECK(first_mismatch(g_series(0, 16), elliptic_e(16)) == -1);

    int n = 14;
    auto sym = pvi_solve_symbolic(n - 1);
    for (int k = 1; k <= 3; ++k) {
        auto g = g_series(k, n);
        CAPTURE(k);
        for (int m = 0; m < n; ++m) CHECK(g.c[m] == sym.c[(size_t)m].coeff(k));
    }
}

TEST_CASE("closed g against series, and the R_k ladder") {
    int n = 24;
    for (int k = 1; k <= 3; ++k) {
        CAPTURE(k);
        CHECK(first_mismatch(g_closed(k).eval(n), g_series(k, n)) == -1);
        CHECK(first_mismatch(apply_rk(k, n), rk_theta_ratio(k, n)) == -1);
    }
    // g1 = E/24 + R1(E^3)/24
    auto lhs = rat_mul(make_rat(1, 24), add(elliptic_e(n), apply_rk(1, n)));
    CHECK(first_mismatch(lhs, g_series(1, n)) == -1);
    // g2 = 3E/640 + R1(E^3)/192 + R2(E^5)/1920
    auto g2 = add(rat_mul(rs("3/640"), elliptic_e(n)),
                  add(rat_mul(rs("1/192"), apply_rk(1, n)), rat_mul(rs("1/1920"), apply_rk(2, n))));
    CHECK(first_mismatch(g2, g_series(2, n)) == -1);
    // g3 = 5E/7168 + 37R1(E^3)/46080 + R2(E^5)/9216 + R3(E^7)/322560
    // (the R2 coefficient recomputed: with R2 pinned by its theta-ratio
    // identity the combination needs +1/9216)
    auto g3 = add(add(rat_mul(rs("5/7168"), elliptic_e(n)),
                      rat_mul(rs("37/46080"), apply_rk(1, n))),
                  add(rat_mul(rs("1/9216"), apply_rk(2, n)),
                      rat_mul(rs("1/322560"), apply_rk(3, n))));
    CHECK(first_mismatch(g3, g_series(3, n)) == -1);
    // R1 applied to the zero series
    auto zero = series_zero<Rat>(Var::t, n + 6);
    CHECK(apply(paper_operator("R1").op, zero).is_zero());
}

TEST_CASE("the g_n are DD-finite: L1 . L_E kills g1") {
    int n = 38;
    auto [d0, d1] = ddfinite_l1();
    auto l1 = SeriesCoeffODE::from_ekpoly({d0, d1}, n);
    auto le = paper_operator("L_E").op;
    auto l3 = l1.multiply_monic(le, n);
    auto g1 = g_series(1, n + 4);
    auto res = l3.apply(truncate(g1, n));
    CHECK(res.order() >= 31);
    CHECK(res.is_zero());
    // L_E alone does not kill g1, and the composition needs the monic inner
    // factor: the two-step route below is the same computation made explicit
    auto le_series = SeriesCoeffODE::from_linear(le, n);
    auto v = le_series.apply(truncate(g1, n));
    CHECK(!v.is_zero());
    CHECK(v.valuation() >= 1);
    auto t1t = Poly::from_longs({0, 1, -1}).to_series(Var::t, v.order());
    auto vm = div(shift_down(v, 1), shift_down(t1t, 1));
    CHECK(l1.apply(vm).is_zero());
}

TEST_CASE("S-ratios at pi/6 and pi/3 against printed expansions") {
    // (1/sqrt3) S_2 at pi/6
    auto s2_6 = S_ratio(Angle::pi6, 2, 6);
    CHECK(s2_6.c[0] == Rat(1));
    CHECK(s2_6.c[2] == rs("-3/128"));
    CHECK(s2_6.c[3] == rs("-3/128"));
    CHECK(s2_6.c[4] == rs("-339/16384"));

    // -S_3 at pi/6
    auto s3_6 = neg(S_ratio(Angle::pi6, 3, 10));
    CHECK(s3_6.c[0] == Rat(1));
    CHECK(s3_6.c[2] == rs("3/16"));
    CHECK(s3_6.c[3] == rs("3/16"));
    CHECK(s3_6.c[4] == rs("339/2048"));
    CHECK(s3_6.c[5] == rs("147/1024"));
    CHECK(s3_6.c[6] == rs("262047/2097152"));
    CHECK(s3_6.c[7] == rs("230109/2097152"));
    CHECK(s3_6.c[8] == rs("1632105/16777216"));
    CHECK(s3_6.c[9] == rs("365061/4194304"));

    // sqrt3 S_2 at pi/3 is 3 * (S_2/sqrt3)
    auto s2_3 = rat_mul(Rat(3), S_ratio(Angle::pi3, 2, 5));
    CHECK(s2_3.c[0] == Rat(1));
    CHECK(s2_3.c[2] == rs("-9/128"));
    CHECK(s2_3.c[3] == rs("-9/128"));
    CHECK(s2_3.c[4] == rs("-261/4096"));

    // -S_3 at pi/3
    auto s3_3 = neg(S_ratio(Angle::pi3, 3, 12));
    CHECK(s3_3.c[0] == Rat(1));
    CHECK(s3_3.c[1] == Rat(0));
    CHECK(s3_3.c[6] == rs("-15/2097152"));
    CHECK(s3_3.c[7] == rs("-45/2097152"));
    CHECK(s3_3.c[8] == rs("-2745/67108864"));
    CHECK(s3_3.c[9] == rs("-1065/16777216"));
    CHECK(s3_3.c[10] == rs("-3011265/34359738368"));
    CHECK(s3_3.c[11] == rs("-3858885/34359738368"));

    // S_1 is trivially 1
    auto s1 = S_ratio(Angle::pi6, 1, 6);
    CHECK(s1.c[0] == Rat(1));
    for (int k = 1; k < 6; ++k) CHECK(s1.c[k] == Rat(0));
}

TEST_CASE("pi/4 S-ratio closed forms match the theta ratios and are homogeneous") {
    int n = 18;
    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        auto closed = S_ratio_closed_pi4(k);
        CHECK(closed.homogeneous_of_degree(k - 1));
        CHECK(first_mismatch(closed.eval(n), S_ratio(Angle::pi4, k, n)) == -1);
    }
}

TEST_CASE("pi/4 deformation: G0..G3") {
    int n = 18;
    auto g0 = G_series(Angle::pi4, 0, n);
    CHECK(first_mismatch(g0, lambda_ext(Angle::pi4, n)) == -1);
    CHECK(first_mismatch(g0, G0_closed_pi4(n)) == -1);

    auto g1 = G_series(Angle::pi4, 1, 10);
    CHECK(g1.c[2] == rs("-3/256"));
    CHECK(g1.c[3] == rs("-9/1024"));
    CHECK(g1.c[4] == rs("-441/65536"));
    CHECK(g1.c[5] == rs("-1407/262144"));
    CHECK(g1.c[6] == rs("-18557/4194304"));
    CHECK(g1.c[7] == rs("-62755/16777216"));
    CHECK(g1.c[8] == rs("-13852377/4294967296"));
    CHECK(g1.c[9] == rs("-48531703/17179869184"));

    // G1 = G0 (S_2/4 - 1/4)
    auto tilde = rat_mul(make_rat(1, 4),
                         sub(S_ratio(Angle::pi4, 2, n), series_const<Rat>(Var::t, Rat(1), n)));
    CHECK(first_mismatch(g1, truncate(mul(g0, tilde), 10)) == -1);

    auto g2 = G_series(Angle::pi4, 2, 12);
    CHECK(g2.c[6] == rs("5/16777216"));
    CHECK(g2.c[7] == rs("55/67108864"));
    CHECK(g2.c[8] == rs("6255/4294967296"));
    CHECK(g2.c[9] == rs("36625/17179869184"));
    CHECK(g2.c[10] == rs("3079025/1099511627776"));
    CHECK(g2.c[11] == rs("15116115/4398046511104"));

    auto g3 = G_series(Angle::pi4, 3, 18);
    CHECK(g3.c[12] == rs("-7/281474976710656"));
    CHECK(g3.c[13] == rs("-161/1125899906842624"));
    CHECK(g3.c[14] == rs("-33789/72057594037927936"));
    CHECK(g3.c[15] == rs("-332703/288230376151711744"));
    CHECK(g3.c[17] == rs("-318184713/73786976294838206464"));
}

TEST_CASE("printed bracket weights of the pi/4 deformation") {
    auto w1 = G_weights(Angle::pi4, 1);
    CHECK(w1[0] == rs("-1/4"));
    CHECK(w1[1] == rs("1/4"));
    auto w2 = G_weights(Angle::pi4, 2);
    CHECK(w2[0] == rs("3/32"));
    CHECK(w2[1] == rs("-1/16"));
    CHECK(w2[2] == rs("1/32"));
    auto w3 = G_weights(Angle::pi4, 3);
    CHECK(w3[0] == rs("-5/128"));
    CHECK(w3[1] == rs("13/384"));
    CHECK(w3[2] == rs("-1/128"));
    CHECK(w3[3] == rs("1/384"));
    auto w4 = G_weights(Angle::pi4, 4);
    CHECK(w4[0] == rs("35/2048"));
    CHECK(w4[1] == rs("-19/1536"));
    CHECK(w4[2] == rs("17/3072"));
    CHECK(w4[3] == rs("-1/1536"));
    CHECK(w4[4] == rs("1/6144"));
    auto w5 = G_weights(Angle::pi4, 5);
    CHECK(w5[0] == rs("-63/8192"));
    CHECK(w5[1] == rs("263/40960"));
    CHECK(w5[2] == rs("-23/12288"));
    CHECK(w5[3] == rs("7/12288"));
    CHECK(w5[4] == rs("-1/24576"));
    CHECK(w5[5] == rs("1/122880"));
}

TEST_CASE("pi/2 deformation reduces to the weighted form factors") {
    for (int k = 0; k <= 2; ++k) {
        CAPTURE(k);
        auto lhs = G_series(Angle::pi2, k, 12);
        auto rhs = rat_mul(pow_rat(make_rat(-1, 4), k), form_factor_weighted(k, 12));
        CHECK(first_mismatch(lhs, rhs) == -1);
    }
}

TEST_CASE("kappa ladders: printed rows") {
    auto odd = kappa_ladder_odd(5);
    CHECK(odd[0] == std::vector<Rat>{Rat(1)});
    CHECK(odd[1] == std::vector<Rat>{rs("-1/6"), Rat(1)});
    CHECK(odd[2] == std::vector<Rat>{rs("1/120"), rs("-1/2"), Rat(1)});
    CHECK(odd[3] == std::vector<Rat>{rs("-1/5040"), rs("13/120"), rs("-5/6"), Rat(1)});
    CHECK(odd[4] ==
          std::vector<Rat>{rs("1/362880"), rs("-41/3024"), rs("23/72"), rs("-7/6"), Rat(1)});

    auto even = kappa_ladder_even(6);
    CHECK(even[1] == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(even[2] == std::vector<Rat>{Rat(0), rs("-1/3"), Rat(1)});
    CHECK(even[3] == std::vector<Rat>{Rat(0), rs("2/45"), rs("-2/3"), Rat(1)});
    CHECK(even[4] == std::vector<Rat>{Rat(0), rs("-1/315"), rs("1/5"), Rat(-1), Rat(1)});
    CHECK(even[5] == std::vector<Rat>{Rat(0), rs("2/14175"), rs("-34/945"), rs("7/15"),
                                      rs("-4/3"), Rat(1)});
}

TEST_CASE("kappa ladders close the theta ratios") {
    int n = 14;
    // odd: S^{(2p+1)}/(2p+1)! = sum_k L[p][k] kappa^{(2k+1)},
    // kappa^{(2k+1)} = f^{(2k)}/(2k+1)
    auto odd = kappa_ladder_odd(4);
    Rat fact(1);
    for (int p = 0; p < 4; ++p) {
        if (p > 0) fact *= Rat(2 * p) * Rat(2 * p + 1);
        auto lhs = rat_mul(Rat(1) / fact, S_odd_ratio(p, n));
        auto rhs = series_zero<Rat>(Var::t, n);
        for (int k = 0; k <= p; ++k)
            rhs = add(rhs, rat_mul(odd[p][(size_t)k] / Rat(2 * k + 1), form_factor_series(k, n)));
        CAPTURE(p);
        CHECK(first_mismatch(lhs, rhs) == -1);
    }
    // even: S_{2p}/(2p)! = sum_k L[p][k] kappa^{(2k)}
    auto even = kappa_ladder_even(4);
    Rat efact(1);
    for (int p = 0; p < 4; ++p) {
        if (p > 0) efact *= Rat(2 * p - 1) * Rat(2 * p);
        auto lhs = rat_mul(Rat(1) / efact, theta4_ratio(2 * p, n));
        auto rhs = series_zero<Rat>(Var::t, n);
        for (int k = 0; k <= p; ++k) rhs = add(rhs, rat_mul(even[p][(size_t)k], c00_kappa(k, n)));
        CAPTURE(p);
        CHECK(first_mismatch(lhs, rhs) == -1);
    }
    // lambda = 1 endpoint
    auto one = c00_lambda1(8);
    CHECK(one.c[0] == Rat(1));
    for (int k = 1; k < 8; ++k) CHECK(one.c[k] == Rat(0));
}
