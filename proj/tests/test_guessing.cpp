#include "doctest.h"

#include "diffops/catalog.hpp"
#include "guessing/guess.hpp"
#include "painleve/pvi.hpp"
#include "special/closed_form.hpp"
#include "special/hyp2f1.hpp"

using namespace lamext;

TEST_CASE("guessing the geometric series annihilator") {
    // 1/(1-t); the recurrence basis represents (1-t)D - 1 via its t-multiple
    auto f = series_const<Rat>(Var::t, Rat(1), 40);
    for (int k = 0; k < 40; ++k) f.c[(size_t)k] = Rat(1);
    auto g = guess_linear_ode(f, GuessBudget{3, 3, 8});
    REQUIRE(g.found);
    CHECK(g.order == 1);
    CHECK(g.degree == 1);
    CHECK(apply(g.op, f).is_zero());

    // constant series: D_t (its t-multiple)
    auto one = series_const<Rat>(Var::t, Rat(1), 30);
    auto g1 = guess_linear_ode(one, GuessBudget{2, 2, 8});
    REQUIRE(g1.found);
    CHECK(g1.order == 1);
    CHECK(g1.degree == 0);
}

TEST_CASE("guessing is deterministic and stable under budget growth") {
    auto f = elliptic_e(60);
    auto a = guess_linear_ode(f, GuessBudget{4, 6, 10});
    auto b = guess_linear_ode(f, GuessBudget{4, 6, 10});
    auto c = guess_linear_ode(f, GuessBudget{6, 12, 10});
    REQUIRE(a.found);
    CHECK(a.op == b.op);
    CHECK(a.op == c.op);
    CHECK(a.order == 2);
    // the canonical annihilator of E in this basis
    CHECK(same_solution_space(a.op, paper_operator("L_E").op, make_rat(1, 2), 24));
}

TEST_CASE("guess soundness under guard doubling") {
    // guess on a short prefix, re-apply on a longer series from the pipeline
    auto longer = lambda_extension_closed(Angle::pi6, 140);
    auto prefix = truncate(longer, 90);
    auto g = guess_linear_ode(prefix, GuessBudget{4, 8, 8});
    REQUIRE(g.found);
    CHECK(g.order == 4);
    CHECK(apply(g.op, longer).is_zero());
    CHECK(same_solution_space(g.op, paper_operator("M1_order4").op, make_rat(1, 2), 40));
}

TEST_CASE("algebraic guessing over Q") {
    auto root = pow_rational(Poly::from_longs({1, -1}).to_series(Var::t, 30), make_rat(1, 2));
    auto g = guess_algebraic(root, 4, 4, 8);
    REQUIRE(g.found);
    CHECK(g.deg_y == 2);
    CHECK(g.deg_t == 1);
    CHECK(g.rel.first_failure(root) == -1);
    // normalized: y^2 - 1 + t up to sign/scale; verify by evaluating on -root too
    CHECK(g.rel.first_failure(neg(root)) == -1);
}

namespace {

// operator equality mod p up to a scalar in F_p^*
bool same_op_mod_p(const LinearODE& a, const LinearODE& b, std::uint64_t p) {
    if (a.order() != b.order()) return false;
    auto entry = [&](const LinearODE& op, int i, int d) {
        return rat_mod_p(op.coeff(i).coeff(d), p);
    };
    Fp scale_a{0, p}, scale_b{0, p};
    for (int i = 0; i <= a.order() && scale_a.is_zero(); ++i)
        for (int d = 0; d <= std::max(a.coeff(i).degree(), b.coeff(i).degree()); ++d) {
            auto ea = entry(a, i, d), eb = entry(b, i, d);
            if (!ea.is_zero() || !eb.is_zero()) {
                if (ea.is_zero() || eb.is_zero()) return false;
                scale_a = ea;
                scale_b = eb;
                break;
            }
        }
    for (int i = 0; i <= a.order(); ++i)
        for (int d = 0; d <= std::max(a.coeff(i).degree(), b.coeff(i).degree()); ++d)
            if (!(entry(a, i, d) * scale_b == entry(b, i, d) * scale_a)) return false;
    return true;
}

}  // namespace

TEST_CASE("mod-p guesses reproduce the printed small-prime operators") {
    auto m5 = scale_var(pvi_solve_fixed(Rat(5), 220), Rat(16));
    {
        auto fp = reduce_mod_p(m5, 3);
        auto g = guess_linear_ode(fp, GuessBudget{4, 4, 10});
        REQUIRE(g.found);
        CHECK(g.order == 1);
        CHECK(g.degree == 1);
        // printed operator: 2t + (t+2) t D
        auto want = LinearODE(std::vector<Poly>{Poly::from_longs({0, 2}),
                                                Poly::from_longs({0, 2, 1})});
        CHECK(annihilates_mod_p(want, fp));
        CHECK(same_op_mod_p(g.op, want, 3));
    }
    {
        auto fp = reduce_mod_p(m5, 5);
        auto g = guess_linear_ode(fp, GuessBudget{4, 4, 10});
        REQUIRE(g.found);
        CHECK(g.order == 1);
        CHECK(g.degree == 2);
        // printed operator: 3t(t+1) + (t^2+2t+2) t D
        auto want = LinearODE(std::vector<Poly>{Poly::from_longs({0, 3, 3}),
                                                Poly::from_longs({0, 2, 2, 1})});
        CHECK(annihilates_mod_p(want, fp));
        CHECK(same_op_mod_p(g.op, want, 5));
    }
    {
        // p = 7: order and degree both 3. The digits printed for this operator
        // do not annihilate the series (checked independently), so only the
        // recovered operator is asserted here; it re-verifies on all terms.
        auto fp = reduce_mod_p(m5, 7);
        auto g = guess_linear_ode(fp, GuessBudget{6, 6, 10});
        REQUIRE(g.found);
        CHECK(g.order == 3);
        CHECK(g.degree == 3);
        CHECK(annihilates_mod_p(g.op, fp));
    }
}

TEST_CASE("mod-p algebraic relations recovered for M=5") {
    auto m5 = scale_var(pvi_solve_fixed(Rat(5), 220), Rat(16));
    {
        auto fp = reduce_mod_p(m5, 3);
        auto g = guess_algebraic(fp, 16, 8, 10);
        REQUIRE(g.found);
        auto want = reduce_relation_mod_p(paper_relation("modp_M5_p3").rel, 3);
        want.monic_normalize();
        CHECK(g.rel == want);
    }
    {
        auto fp = reduce_mod_p(m5, 5);
        auto g = guess_algebraic(fp, 8, 10, 10);
        REQUIRE(g.found);
        auto want = reduce_relation_mod_p(paper_relation("modp_M5_p5").rel, 5);
        want.monic_normalize();
        CHECK(g.rel == want);
    }
}

TEST_CASE("mod-p scan rows and the half-prime law") {
    auto m5 = scale_var(pvi_solve_fixed(Rat(5), 260), Rat(16));
    auto rows = modp_scan(m5, {3, 5, 7, 11, 4}, GuessBudget{8, 8, 10}, 2);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].order == 1);
    CHECK(rows[0].degree == 1);
    CHECK(rows[1].order == 1);
    CHECK(rows[1].degree == 2);
    CHECK(!rows[1].law_half_pm1);
    CHECK(rows[2].order == 3);
    CHECK(rows[2].degree == 3);
    CHECK(rows[2].law_half_pm1);
    CHECK(rows[3].order == 5);
    CHECK(rows[3].degree == 5);
    CHECK(rows[3].law_half_pm1);
    CHECK(rows[4].skipped);  // 4 is not prime
}

TEST_CASE("globally bounded rescale") {
    auto m5 = pvi_solve_fixed(Rat(5), 120);
    auto r = globally_bounded_rescale(m5);
    REQUIRE(r.found);
    CHECK(r.scale == 16);

    auto ints = series_from_longs(Var::t, {1, -4, -27, -260});
    auto r1 = globally_bounded_rescale(ints);
    REQUIRE(r1.found);
    CHECK(r1.scale == 1);

    // M = 1/2 also rescales by a power of two
    auto half = pvi_solve_fixed(make_rat(1, 2), 120);
    auto r2 = globally_bounded_rescale(half);
    REQUIRE(r2.found);
    Int s = r2.scale;
    bool pow2 = true;
    while (s > 1) {
        if (s % 2 != 0) pow2 = false;
        s /= 2;
    }
    CHECK(pow2);
    CHECK(r2.scale >= 16);
}

TEST_CASE("exterior square via Wronskians: the textbook example") {
    auto a4 = paper_operator("A4_abs").op;
    auto ext = exterior_square_via_wronskians(a4, Rat(1), 80, GuessBudget{6, 10, 10});
    CHECK(ext.op_x.order() == 5);
    // direct-sum factors, shifted to x = t-1: D and the order-four summand
    auto shifted_d = shift_operator(d_t(), Rat(1));
    auto big = shift_operator(paper_operator("A4_abs_ext2_summand").op, Rat(1));
    // the guessed operator annihilates the full solution space of both factors
    auto const_one = series_const<Rat>(Var::x, Rat(1), 40);
    CHECK(annihilates(ext.op_x, const_one));
    for (const auto& y : local_solutions(big, Rat(0), 40)) CHECK(annihilates(ext.op_x, y));
    // and each factor kills nothing extra: orders add up 1 + 4 = 5
    CHECK(shifted_d.order() + big.order() == ext.op_x.order());
}
