#include "doctest.h"

#include "diffops/algrel.hpp"
#include "diffops/catalog.hpp"
#include "diffops/linear_ode.hpp"
#include "diffops/series_ode.hpp"
#include "special/hyp2f1.hpp"
#include "test_util.hpp"

using namespace lamext;
using lamext::testutil::Rng;

TEST_CASE("defining operators annihilate E and K") {
    const auto& le = paper_operator("L_E");
    const auto& lk = paper_operator("L_K");
    CHECK(annihilates(le.op, elliptic_e(32)));
    CHECK(annihilates(lk.op, elliptic_k(32)));
    CHECK(!annihilates(le.op, elliptic_k(32)));
}

TEST_CASE("operator product: D_t t = t D_t + 1 and associativity") {
    auto d = d_t();
    auto t_op = LinearODE(std::vector<Poly>{Poly::variable()});
    auto prod = multiply(d, t_op);
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        auto f = testutil::random_series_q(rng, Var::t, 12);
        auto lhs = apply(prod, f);
        // t f' + f
        auto rhs0 = add(mul(Poly::variable().to_series(Var::t, 12), differentiate(f)),
                        truncate(f, 11));
        auto lhs_cmp = lhs;
        lhs_cmp.prefac = Rat(0);
        auto shifted = shift_up(rhs0, 1);  // align with the prefac -1 representation
        CHECK(first_mismatch(lhs_cmp, shifted) == -1);
    }
    // associativity checked by application
    auto a = paper_operator("L_E").op;
    auto b = d_t();
    auto c = LinearODE(std::vector<Poly>{Poly::from_longs({1, 2}), Poly::variable()});
    auto left = multiply(multiply(a, b), c);
    auto right = multiply(a, multiply(b, c));
    for (int trial = 0; trial < 5; ++trial) {
        auto f = testutil::random_series_q(rng, Var::t, 14);
        auto la = apply(left, f);
        auto ra = apply(right, f);
        CHECK(first_mismatch(la, ra) == -1);
    }
}

TEST_CASE("catalog operators annihilate their companion series") {
    for (const auto& name : catalog_operator_names()) {
        const auto& entry = paper_operator(name);
        if (!entry.companion) continue;
        CAPTURE(name);
        auto f = entry.companion(40);
        CHECK(annihilates(entry.op, f));
    }
}

TEST_CASE("symmetric square of L_K") {
    auto lk = paper_operator("L_K").op;
    auto sym = sym_square_order2(lk);
    CHECK(sym.order() == 3);
    int n = 30;
    auto k2 = mul(elliptic_k(n), elliptic_k(n));
    CHECK(annihilates(sym, k2));
    // E solves L_E, not L_K, so mixed products are outside this space
    CHECK(!annihilates(sym, mul(elliptic_e(n), elliptic_k(n))));

    // genuine closure: all pairwise products of an L_K solution basis
    auto basis = local_solutions(lk, make_rat(1, 2), 24);
    auto sym_shifted = shift_operator(sym, make_rat(1, 2));
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a; b < basis.size(); ++b)
            CHECK(annihilates(sym_shifted, mul(basis[a], basis[b])));

    // square of the pi/3 algebraic solution is killed by Sym^2(A2)
    auto sym_a2 = sym_square_order2(paper_operator("A2_pi3").op);
    auto sol = paper_operator("A2_pi3").companion(34);
    CHECK(annihilates(sym_a2, mul(sol, sol)));

    CHECK_THROWS_AS(sym_square_order2(d_t()), std::invalid_argument);
}

TEST_CASE("conjugation by powers of t and 1-t") {
    // annihilator of (1-t)^{1/16} 2F1([-3/8,1/8],[1/4],t)
    auto base = hyp2f1_operator(make_rat(-3, 8), make_rat(1, 8), make_rat(1, 4));
    auto conj = conjugate_by_power(base, Rat(0), make_rat(1, 16));
    int n = 24;
    auto h = hyp2f1_series(make_rat(-3, 8), make_rat(1, 8), make_rat(1, 4), n);
    auto w = pow_rational(Poly::from_longs({1, -1}).to_series(Var::t, n), make_rat(1, 16));
    CHECK(annihilates(conj, mul(w, h)));
    CHECK(!annihilates(conj, h));
}

TEST_CASE("indicial exponents") {
    auto le = indicial_exponents(paper_operator("L_E").op, Rat(0));
    REQUIRE(le.roots.size() == 2);
    CHECK(le.roots[0] == Rat(0));
    CHECK(le.roots[1] == Rat(0));

    // first-order operator for (1-t)^{1/4} has exponent 1/4 at t=1
    auto quarter_op = annihilator_of_power(Rat(0), make_rat(1, 4));
    auto iq = indicial_exponents(quarter_op, Rat(1));
    REQUIRE(iq.roots.size() == 1);
    CHECK(iq.roots[0] == make_rat(1, 4));

    auto m1 = indicial_exponents(paper_operator("M1_order4").op, Rat(1));
    bool has_36 = false;
    for (const auto& r : m1.roots) has_36 = has_36 || (r == make_rat(1, 36));
    CHECK(has_36);

    auto m3 = indicial_exponents(paper_operator("M3_order4").op, Rat(1));
    bool has_9 = false;
    for (const auto& r : m3.roots) has_9 = has_9 || (r == make_rat(1, 9));
    CHECK(has_9);

    // irregular point is refused
    auto irr = LinearODE(std::vector<Poly>{Poly(Rat(1)), Poly(), Poly::from_longs({0, 0, 0, 1})});
    CHECK_THROWS_AS(indicial_exponents(irr, Rat(0)), std::domain_error);
}

TEST_CASE("local solution bases at ordinary points") {
    auto basis = local_solutions(paper_operator("L_K").op, make_rat(1, 2), 18);
    REQUIRE(basis.size() == 2);
    for (const auto& y : basis)
        CHECK(annihilates(shift_operator(paper_operator("L_K").op, make_rat(1, 2)), y));
    CHECK(basis[0].c[0] == Rat(1));
    CHECK(basis[0].c[1] == Rat(0));
    CHECK(basis[1].c[0] == Rat(0));
    CHECK(basis[1].c[1] == Rat(1));

    auto d2 = LinearODE(std::vector<Poly>{Poly(), Poly(), Poly(Rat(1))});
    auto flat = local_solutions(d2, Rat(0), 8);
    CHECK(flat[0].c[0] == Rat(1));
    CHECK(flat[1].c[1] == Rat(1));
    for (int k = 2; k < 8; ++k) {
        CHECK(flat[0].c[k] == Rat(0));
        CHECK(flat[1].c[k] == Rat(0));
    }

    auto a4 = paper_operator("A4_abs").op;
    auto ab = local_solutions(a4, Rat(1), 20);
    REQUIRE(ab.size() == 4);
    for (const auto& y : ab) CHECK(annihilates(shift_operator(a4, Rat(1)), y));

    CHECK_THROWS_AS(local_solutions(paper_operator("L_K").op, Rat(0), 8), std::domain_error);
}

TEST_CASE("solution-space equality via mutual annihilation") {
    auto lk = paper_operator("L_K").op;
    // a nontrivial left multiple has a bigger space
    auto bigger = multiply(d_t(), lk);
    CHECK(!same_solution_space(lk, bigger, make_rat(1, 2), 16));
    // conjugating by 1 is the identity
    CHECK(same_solution_space(lk, lk, make_rat(1, 2), 16));
    // scalar multiples agree
    auto scaled = LinearODE(std::vector<Poly>{Rat(7) * lk.coeff(0), Rat(7) * lk.coeff(1),
                                              Rat(7) * lk.coeff(2)});
    CHECK(same_solution_space(lk, scaled, make_rat(1, 2), 16));
}

TEST_CASE("algebraic relation checks and root lifting") {
    // y^2 - (1 - t) annihilates sqrt(1-t)
    AlgRelQ rel;
    rel.add_term(0, 2, Rat(1));
    rel.add_poly_term(Poly::from_longs({1, -1}), 0, Rat(-1));
    auto root = pow_rational(Poly::from_longs({1, -1}).to_series(Var::t, 20), make_rat(1, 2));
    CHECK(rel.first_failure(root) == -1);
    // E^2 - (1-t) vanishes at t=0 but not beyond
    CHECK(rel.first_failure(elliptic_e(20)) == 1);

    // trivial relation y - f
    AlgRelQ triv;
    triv.add_term(0, 1, Rat(1));
    auto e = elliptic_e(10);
    AlgRelQ triv2 = triv;
    for (int k = 0; k < 10; ++k) triv2.add_term(k, 0, -e.c[k]);
    CHECK(triv2.first_failure(e) == -1);

    // lifting the sqrt branch back out of its quadratic
    auto lifted = lift_series_root(rel, Rat(1), 20);
    CHECK(first_mismatch(lifted, root) == -1);

    // octic for the pi/6 hypergeometric factor
    const auto& alg = paper_relation("alg_H_pi6");
    auto h = hyp2f1_series(make_rat(7, 6), make_rat(5, 2), make_rat(7, 3), 40);
    CHECK(alg.rel.first_failure(h) == -1);
}

TEST_CASE("series-coefficient operator composition matches application") {
    Rng rng(131);
    int n = 16;
    auto a = SeriesCoeffODE::from_linear(paper_operator("L_E").op, n + 4);
    auto b = SeriesCoeffODE::from_linear(d_t(), n + 4);
    auto ab = a.multiply(b);
    for (int trial = 0; trial < 4; ++trial) {
        auto f = testutil::random_series_q(rng, Var::t, n + 6);
        auto lhs = ab.apply(f);
        auto rhs = a.apply(b.apply(f));
        int m = std::min(lhs.order(), rhs.order());
        CHECK(first_mismatch(truncate(lhs, m), truncate(rhs, m)) == -1);
    }
}

TEST_CASE("mod-p relations from the catalog parse and normalize") {
    const auto& r53 = paper_relation("modp_M5_p3");
    CHECK(r53.modulus == 3);
    auto rel = reduce_relation_mod_p(r53.rel, 3);
    CHECK(rel.y_degree() == 16);
}
