#include "doctest.h"

#include "painleve/pvi.hpp"
#include "series/poly.hpp"
#include "special/closed_form.hpp"
#include "special/hyp2f1.hpp"

using namespace lamext;

namespace {

ParamPoly pp(const char* c0, const char* c1 = nullptr, const char* c2 = nullptr) {
    std::vector<Rat> c{rat_from_string(c0)};
    if (c1) c.push_back(rat_from_string(c1));
    if (c2) c.push_back(rat_from_string(c2));
    return ParamPoly(std::move(c));
}

}  // namespace

TEST_CASE("sigma transform basics") {
    auto one = series_const<Rat>(Var::t, Rat(1), 6);
    auto sig = sigma_of_c(one);
    CHECK(sig.c[1] == rat_from_string("-1/4"));
    for (int k : {0, 2, 3, 4}) CHECK(sig.c[k] == Rat(0));

    auto zero_c = series_zero<Rat>(Var::t, 4);
    CHECK_THROWS_AS(sigma_of_c(zero_c), std::domain_error);
}

TEST_CASE("sigma_M of the symbolic solution matches the printed expansion") {
    auto c = pvi_solve_symbolic(8);
    auto sm = sigma_m_of_c(c);
    CHECK(sm.c[2] == pp("3/128"));
    CHECK(sm.c[3] == pp("3/256"));
    // (3/32768)(74 + 3M), (3/65536)(94 + 9M), (3/8388608)(8176 + 1270M + 9M^2)
    CHECK(sm.c[4] == pp("111/16384", "9/32768"));
    CHECK(sm.c[5] == pp("141/32768", "27/65536"));
    CHECK(sm.c[6] == pp("1533/524288", "1905/4194304", "27/8388608"));
}

TEST_CASE("pvi_residual vanishes on solutions and flags non-solutions") {
    int n = 32;
    CHECK(pvi_residual(elliptic_e(n)).is_zero());
    auto quarter = pow_rational(Poly::from_longs({1, -1}).to_series(Var::t, n), make_rat(1, 4));
    CHECK(pvi_residual(quarter).is_zero());

    auto bad = series_from_longs(Var::t, {1, 1, 0, 0, 0, 0, 0, 0});
    CHECK(!pvi_residual(bad).is_zero());
}

TEST_CASE("symbolic solve reproduces the printed M-expansion") {
    auto c = pvi_solve_symbolic(12);
    CHECK(c.c[0] == pp("1/1"));
    CHECK(c.c[1] == pp("-1/4"));
    CHECK(c.c[2] == pp("-3/64", "-3/256"));
    CHECK(c.c[3] == pp("-5/256", "-9/1024"));
    CHECK(c.c[4] == pp("-175/16384", "-441/65536"));
    CHECK(c.c[5] == pp("-441/65536", "-1407/262144"));
    CHECK(c.c[6] == pp("-4851/1048576", "-9281/2097152", "5/16777216"));
}

TEST_CASE("rescaled symbolic solve has the printed integer polynomials") {
    auto c = pvi_solve_symbolic(10);
    // t -> 16t
    SeriesM g = c;
    Rat p16(1);
    for (int k = 1; k <= 10; ++k) {
        p16 *= Rat(16);
        g.c[(size_t)k] = ParamPoly(p16) * c.c[(size_t)k];
    }
    CHECK(g.c[1] == pp("-4"));
    CHECK(g.c[2] == pp("-12", "-3"));
    CHECK(g.c[3] == pp("-80", "-36"));
    CHECK(g.c[4] == pp("-700", "-441"));
    CHECK(g.c[5] == pp("-7056", "-5628"));
    CHECK(g.c[6] == pp("-77616", "-74248", "5"));
    CHECK(g.c[7] == pp("-906048", "-1004960", "220"));
    CHECK(g.c[8] == pp("-11042460", "-13877397", "6255"));
    CHECK(g.c[9] == pp("-139053200", "-194712812", "146500"));
    CHECK(g.c[10] == pp("-1796567344", "-2767635832", "3079025"));
}

TEST_CASE("fixed-M solves: E at M=0, quarter-root at M=4, integers at M=5") {
    PviSolveInfo info;
    auto m0 = pvi_solve_fixed(Rat(0), 20, &info);
    CHECK(first_mismatch(m0, elliptic_e(21)) == -1);
    CHECK(!info.symbolic_fallback);

    PviSolveInfo info4;
    auto m4 = pvi_solve_fixed(Rat(4), 16, &info4);
    CHECK(info4.symbolic_fallback);
    auto quarter = pow_rational(Poly::from_longs({1, -1}).to_series(Var::t, 17), make_rat(1, 4));
    CHECK(first_mismatch(m4, quarter) == -1);

    auto m5 = scale_var(pvi_solve_fixed(Rat(5), 13), Rat(16));
    std::vector<long long> want = {1,          -4,         -27,          -260,
                                   -2905,      -35196,     -448731,      -5925348,
                                   -80273070,  -1108954760, -15557770879, -220998916404,
                                   -3171743667652, -45915042520880};
    for (size_t k = 0; k < want.size(); ++k) {
        CHECK(m5.c[k] == Rat(Int(std::to_string(want[k]))));
    }
}

TEST_CASE("specialization commutes with solving") {
    auto sym = pvi_solve_symbolic(14);
    for (long m : {-1L, 1L, 2L, 3L, 5L, 7L}) {
        auto direct = pvi_solve_fixed(Rat(m), 14);
        CHECK(first_mismatch(direct, specialize_m(sym, Rat(m))) == -1);
    }
    // and a non-integer rational value
    auto half = pvi_solve_fixed(make_rat(1, 2), 10);
    CHECK(first_mismatch(half, specialize_m(sym, make_rat(1, 2))) == -1);
}

TEST_CASE("solutions satisfy the sigma ODE at every seeded M") {
    for (long m : {-1L, 0L, 1L, 2L, 3L, 4L, 5L, 7L}) {
        auto c = pvi_solve_fixed(Rat(m), 24);
        CHECK(pvi_residual(c).is_zero());
    }
    auto sym = pvi_solve_symbolic(12);
    CHECK(pvi_residual(sym).is_zero());
}

TEST_CASE("theta pipeline and PVI solver agree at the algebraic angles") {
    // quick cross-check at modest order; the acceptance suite runs O(t^40)
    struct Row {
        Angle u;
        long m;
    };
    for (auto [u, m] : {Row{Angle::pi6, 1}, Row{Angle::pi4, 2}, Row{Angle::pi3, 3}}) {
        auto closed = lambda_extension_closed(u, 20);
        auto solved = pvi_solve_fixed(Rat(m), 19);
        CHECK(first_mismatch(closed, solved) == -1);
    }
}
