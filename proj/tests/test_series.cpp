#include "doctest.h"

#include "series/poly.hpp"
#include "series/series.hpp"
#include "series/series_io.hpp"
#include "test_util.hpp"

#include <sstream>

using namespace lamext;
using lamext::testutil::Rng;

namespace {

SeriesQ q_series(std::vector<const char*> raw, Var v = Var::t) {
    std::vector<Rat> c;
    c.reserve(raw.size());
    for (auto* s : raw) c.push_back(rat_from_string(s));
    return SeriesQ(v, std::move(c));
}

// truncated expansions of E and K, copied by hand from the 2F1 term recurrence
const SeriesQ kE = q_series({"1/1", "-1/4", "-3/64", "-5/256", "-175/16384"});
const SeriesQ kK = q_series({"1/1", "1/4", "9/64", "25/256", "1225/16384"});

}  // namespace

TEST_CASE("difference of squares") {
    auto one_plus = series_from_longs(Var::t, {1, 1, 0, 0});
    auto one_minus = series_from_longs(Var::t, {1, -1, 0, 0});
    auto prod = mul(one_plus, one_minus);
    CHECK(prod.c[0] == Rat(1));
    CHECK(prod.c[1] == Rat(0));
    CHECK(prod.c[2] == Rat(-1));
    CHECK(prod.c[3] == Rat(0));
}

TEST_CASE("E*K product through t^3") {
    auto ek = mul(kE, kK);
    CHECK(ek.c[0] == Rat(1));
    CHECK(ek.c[1] == Rat(0));
    CHECK(ek.c[2] == rat_from_string("1/32"));
    CHECK(ek.c[3] == rat_from_string("1/32"));
}

TEST_CASE("ring/prefactor preconditions") {
    auto f = series_from_longs(Var::t, {1, 2});
    auto g = series_from_longs(Var::q, {1, 2});
    CHECK_THROWS_AS(add(f, g), std::invalid_argument);
    auto h = series_from_longs(Var::t, {0, 1});
    CHECK_THROWS_AS(inverse(h), std::domain_error);
}

TEST_CASE("compose basics") {
    auto f = series_from_longs(Var::t, {1, 1, 1});
    auto g = series_from_longs(Var::t, {0, 2, 0});
    auto fg = compose(f, g);
    CHECK(fg.c[0] == Rat(1));
    CHECK(fg.c[1] == Rat(2));
    CHECK(fg.c[2] == Rat(4));

    auto zero = series_zero<Rat>(Var::t, 3);
    auto f0 = compose(f, zero);
    CHECK(f0.c[0] == Rat(1));
    CHECK(f0.c[1] == Rat(0));

    auto bad = series_from_longs(Var::t, {1, 1});
    CHECK_THROWS_AS(compose(f, bad), std::domain_error);
}

TEST_CASE("revert x + x^2") {
    auto f = series_from_longs(Var::t, {0, 1, 1, 0, 0});
    auto g = revert(f);
    CHECK(g.c[1] == Rat(1));
    CHECK(g.c[2] == Rat(-1));
    CHECK(g.c[3] == Rat(2));
    CHECK(g.c[4] == Rat(-5));

    auto idf = revert(series_from_longs(Var::t, {0, 1, 0}));
    CHECK(idf.c[1] == Rat(1));
    CHECK(idf.c[2] == Rat(0));
}

TEST_CASE("pow_rational quarter root of 1-t") {
    auto base = series_from_longs(Var::t, {1, -1, 0, 0, 0});
    auto r = pow_rational(base, make_rat(1, 4));
    CHECK(r.c[0] == Rat(1));
    CHECK(r.c[1] == rat_from_string("-1/4"));
    CHECK(r.c[2] == rat_from_string("-3/32"));
    CHECK(r.c[3] == rat_from_string("-7/128"));
    CHECK(r.c[4] == rat_from_string("-77/2048"));

    auto p0 = pow_rational(base, Rat(0));
    CHECK(p0.c[0] == Rat(1));
    CHECK(p0.is_zero() == false);
    CHECK(p0.c[1] == Rat(0));

    auto fourth = pow_long(r, 4);
    CHECK(fourth.c[0] == Rat(1));
    CHECK(fourth.c[1] == Rat(-1));
    CHECK(fourth.c[2] == Rat(0));
    CHECK(fourth.c[3] == Rat(0));

    CHECK_THROWS_AS(pow_rational(series_from_longs(Var::t, {2, 1}), make_rat(1, 2)),
                    std::domain_error);
}

TEST_CASE("differentiate and integrate") {
    auto f = q_series({"1/1", "-1/4"});
    auto d = differentiate(f);
    CHECK(d.c[0] == rat_from_string("-1/4"));

    // d/dt E = (E - K)/(2t) as a series identity
    auto dE = differentiate(kE);
    auto rhs = shift_down(sub(kE, kK), 1);
    rhs = rat_mul(make_rat(1, 2), rhs);
    CHECK(first_mismatch(dE, rhs) == -1);

    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        auto g = testutil::random_series_q(rng, Var::t, 9);
        auto back = integrate(differentiate(g));
        auto expect = g;
        expect.c[0] = Rat(0);
        CHECK(first_mismatch(back, expect) == -1);
    }
}

TEST_CASE("reduce_mod_p on printed M=5 coefficients") {
    auto m5 = series_from_longs(Var::t, {1, -4, -27, -260, -2905});
    auto mod3 = reduce_mod_p(m5, 3);
    CHECK(mod3.c[0].v == 1);
    CHECK(mod3.c[1].v == 2);
    CHECK(mod3.c[2].v == 0);
    CHECK(mod3.c[3].v == 1);
    CHECK(mod3.c[4].v == 2);

    auto mod5 = reduce_mod_p(m5, 5);
    CHECK(mod5.c[0].v == 1);
    CHECK(mod5.c[1].v == 1);
    CHECK(mod5.c[2].v == 3);
    CHECK(mod5.c[3].v == 0);
    CHECK(mod5.c[4].v == 0);

    auto lin = series_from_longs(Var::t, {1, -1});
    auto mod2 = reduce_mod_p(lin, 2);
    CHECK(mod2.c[0].v == 1);
    CHECK(mod2.c[1].v == 1);

    auto half = q_series({"1/3", "1/2"});
    CHECK_THROWS_AS(reduce_mod_p(half, 2), ModPError);
    try {
        reduce_mod_p(half, 2);
    } catch (const ModPError& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("ring axioms on randomized inputs") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Rat a = rng.rat(), b = rng.rat(), c = rng.rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!is_zero(a)) CHECK(a * (Rat(1) / a) == Rat(1));

        ParamPoly pa(std::vector<Rat>{rng.rat(), rng.rat()});
        ParamPoly pb(std::vector<Rat>{rng.rat(), rng.rat(), rng.rat()});
        ParamPoly pc(std::vector<Rat>{rng.rat()});
        CHECK((pa + pb) + pc == pa + (pb + pc));
        CHECK(pa * (pb + pc) == pa * pb + pa * pc);
        CHECK((pa * pb) * pc == pa * (pb * pc));

        Fp fa{(std::uint64_t)rng.small(0, 12), 13}, fb{(std::uint64_t)rng.small(0, 12), 13},
            fc{(std::uint64_t)rng.small(0, 12), 13};
        CHECK((fa + fb) + fc == fa + (fb + fc));
        CHECK(fa * (fb + fc) == fa * fb + fa * fc);
        if (!fa.is_zero()) CHECK((fa * fa.inverse()).v == 1);

        QuadExt qa{rng.rat(), rng.rat(), 3}, qb{rng.rat(), rng.rat(), 3}, qc{rng.rat(), rng.rat(), 3};
        CHECK((qa * qb) * qc == qa * (qb * qc));
        CHECK(qa * (qb + qc) == qa * qb + qa * qc);
        if (!qa.is_zero()) CHECK(qa * qa.inverse() == QuadExt(Rat(1), Rat(0), 3));
    }
}

TEST_CASE("mul/div round trip") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = testutil::random_series_q(rng, Var::t, 10);
        auto g = testutil::random_unit_series_q(rng, Var::t, 10);
        auto back = div(mul(f, g), g);
        CHECK(first_mismatch(back, f) == -1);
    }
}

TEST_CASE("compose(revert(f), f) is the identity") {
    Rng rng(37);
    for (int trial = 0; trial < 8; ++trial) {
        auto f = testutil::random_series_q(rng, Var::t, 9);
        f.c[0] = Rat(0);
        f.c[1] = rat_from_string("1/1");
        auto g = revert(f);
        auto idf = compose(g, f);
        CHECK(idf.c[0] == Rat(0));
        CHECK(idf.c[1] == Rat(1));
        for (int k = 2; k < idf.order(); ++k) CHECK(idf.c[k] == Rat(0));
    }
}

TEST_CASE("pow_rational inverse pairs") {
    Rng rng(41);
    for (int trial = 0; trial < 8; ++trial) {
        auto f = testutil::random_unit_series_q(rng, Var::t, 9);
        Rat r = make_rat(rng.small(-5, 5), rng.small(1, 4));
        auto prod = mul(pow_rational(f, r), pow_rational(f, -r));
        CHECK(prod.c[0] == Rat(1));
        for (int k = 1; k < prod.order(); ++k) CHECK(prod.c[k] == Rat(0));
    }
}

TEST_CASE("reduce_mod_p is a ring homomorphism") {
    Rng rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        auto f = testutil::random_series_q(rng, Var::t, 8);
        auto g = testutil::random_series_q(rng, Var::t, 8);
        std::uint64_t p = 11;
        auto lhs = reduce_mod_p(mul(f, g), p);
        auto rhs = mul(reduce_mod_p(f, p), reduce_mod_p(g, p));
        CHECK(first_mismatch(lhs, rhs) == -1);
    }
}

TEST_CASE("series text format round trip") {
    auto f = q_series({"1/1", "-1/4", "-3/64"});
    f.prefac = make_rat(1, 4);
    auto text = series_to_text(f);
    std::istringstream is(text);
    auto g = read_series_q(is);
    CHECK(equal_series(f, g));
    CHECK(g.prefac == make_rat(1, 4));

    SeriesFp fp(Var::t, {Fp{1, 7}, Fp{3, 7}}, FpCtx{7});
    std::istringstream is2(series_to_text(fp));
    auto fp2 = read_series_fp(is2);
    CHECK(first_mismatch(fp, fp2) == -1);

    SeriesQuad sq(Var::q, {QuadExt{Rat(1), make_rat(1, 2), 3}, QuadExt{Rat(0), Rat(2), 3}},
                  QuadCtx{3});
    std::istringstream is3(series_to_text(sq));
    auto sq2 = read_series_quad(is3);
    CHECK(first_mismatch(sq, sq2) == -1);

    SeriesM sm(Var::t, {ParamPoly(std::vector<Rat>{Rat(1), make_rat(3, 4)}), ParamPoly(Rat(0))},
               NoCtx{});
    std::istringstream is4(series_to_text(sm));
    auto sm2 = read_series_m(is4);
    CHECK(first_mismatch(sm, sm2) == -1);
}

TEST_CASE("ParamPoly exact division") {
    ParamPoly m = ParamPoly::variable();
    ParamPoly m4 = m - ParamPoly(Rat(4));
    ParamPoly prod = m4 * ParamPoly(std::vector<Rat>{Rat(3), Rat(0), make_rat(1, 2)});
    auto quo = ParamPoly::divexact(prod, m4);
    CHECK(quo == ParamPoly(std::vector<Rat>{Rat(3), Rat(0), make_rat(1, 2)}));
    CHECK_THROWS_AS(ParamPoly::divexact(prod + ParamPoly(Rat(1)), m4), std::domain_error);
}

TEST_CASE("Poly gcd and RatFun reduction") {
    Poly a = Poly::from_longs({-1, 0, 1});  // t^2 - 1
    Poly b = Poly::from_longs({1, 1});      // t + 1
    auto g = Poly::gcd(a, b);
    CHECK(g == b);

    RatFun f(Poly::from_longs({0, 2, 2}), Poly::from_longs({0, 0, 4}));  // (2t+2t^2)/(4t^2)
    // reduced with a monic denominator: (1/2 + t/2)/t
    CHECK(f.num() == Poly(std::vector<Rat>{make_rat(1, 2), make_rat(1, 2)}));
    CHECK(f.den() == Poly::from_longs({0, 1}));

    auto s = RatFun(Poly::from_longs({1}), Poly::from_longs({1, -1})).to_series(Var::t, 4);
    CHECK(s.c[0] == Rat(1));
    CHECK(s.c[3] == Rat(1));

    Poly sh = Poly::from_longs({0, 0, 1}).shift(Rat(1));  // (t+1)^2
    CHECK(sh == Poly::from_longs({1, 2, 1}));
}
