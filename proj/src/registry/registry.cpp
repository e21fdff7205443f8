#include "registry/registry.hpp"

#include "diffops/catalog.hpp"
#include "diffops/series_ode.hpp"
#include "formfactors/formfactors.hpp"
#include "guessing/guess.hpp"
#include "painleve/pvi.hpp"
#include "series/series_io.hpp"
#include "special/hyp2f1.hpp"
#include "special/nome.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace lamext {

namespace {

IdentityReport ok(const std::string& name, int order, std::string detail = "") {
    return IdentityReport{name, order, true, -1, std::move(detail)};
}

IdentityReport fail(const std::string& name, int order, int idx, std::string detail = "") {
    return IdentityReport{name, order, false, idx, std::move(detail)};
}

IdentityReport from_mismatch(const std::string& name, int order, int idx,
                             std::string detail = "") {
    return idx < 0 ? ok(name, order, std::move(detail)) : fail(name, order, idx, std::move(detail));
}

SeriesQ quarter_root(int n) {
    return pow_rational(Poly::from_longs({1, -1}).to_series(Var::t, n), make_rat(1, 4));
}

// expected-value helper: compare a series against frozen leading coefficients
int check_prefix(const SeriesQ& s, const std::vector<std::pair<int, const char*>>& want) {
    for (const auto& [idx, txt] : want)
        if (!(s[idx] == rat_from_string(txt))) return idx;
    return -1;
}

ParamPoly pp(std::vector<const char*> coeffs) {
    std::vector<Rat> c;
    for (auto* s : coeffs) c.push_back(rat_from_string(s));
    return ParamPoly(std::move(c));
}

// ---- recipes -----------------------------------------------------------------

IdentityReport run_pvi_symbolic(int order) {
    if (order < 12) order = 12;
    auto c = pvi_solve_symbolic(order);
    std::vector<std::pair<int, ParamPoly>> frozen = {
        {0, pp({"1/1"})},
        {1, pp({"-1/4"})},
        {2, pp({"-3/64", "-3/256"})},
        {3, pp({"-5/256", "-9/1024"})},
        {4, pp({"-175/16384", "-441/65536"})},
        {5, pp({"-441/65536", "-1407/262144"})},
        {6, pp({"-4851/1048576", "-9281/2097152", "5/16777216"})},
    };
    for (const auto& [idx, want] : frozen)
        if (!(c.c[(size_t)idx] == want)) return fail("pvi-symbolic", order, idx);
    // after t -> 16t the printed integer polynomials through t^10
    std::vector<std::pair<int, ParamPoly>> glob = {
        {1, pp({"-4"})},
        {2, pp({"-12", "-3"})},
        {3, pp({"-80", "-36"})},
        {4, pp({"-700", "-441"})},
        {5, pp({"-7056", "-5628"})},
        {6, pp({"-77616", "-74248", "5"})},
        {7, pp({"-906048", "-1004960", "220"})},
        {8, pp({"-11042460", "-13877397", "6255"})},
        {9, pp({"-139053200", "-194712812", "146500"})},
        {10, pp({"-1796567344", "-2767635832", "3079025"})},
    };
    Rat p16(1);
    for (int k = 1; k <= 10; ++k) {
        p16 *= Rat(16);
        if (!(ParamPoly(p16) * c.c[(size_t)k] == glob[(size_t)(k - 1)].second))
            return fail("pvi-symbolic", order, k, "rescaled polynomial mismatch");
    }
    if (!pvi_residual(c).is_zero()) return fail("pvi-symbolic", order, -2, "residual nonzero");
    return ok("pvi-symbolic", order, "M-expansion and its 16t rescale match the frozen rows");
}

IdentityReport dual_pipeline(const std::string& name, Angle u, long m, int order) {
    auto closed = lambda_ext(u, order + 1);
    auto solved = pvi_solve_fixed(Rat(m), order);
    return from_mismatch(name, order, first_mismatch(closed, solved),
                         "theta closed form vs sigma-recursion series");
}

IdentityReport run_actually_m2(int order) {
    if (order < 7) order = 7;
    auto closed = lambda_ext(Angle::pi4, order);
    int bad = check_prefix(closed, {{0, "1/1"},
                                    {1, "-1/4"},
                                    {2, "-9/128"},
                                    {3, "-19/512"},
                                    {4, "-791/32768"},
                                    {5, "-2289/131072"},
                                    {6, "-56523/4194304"}});
    if (bad >= 0) return fail("actually-M2", order, bad, "printed coefficient mismatch");
    int idx = first_mismatch(closed, G0_closed_pi4(order));
    if (idx >= 0) return fail("actually-M2", order, idx, "algebraic reconstruction mismatch");
    auto h = hyp2f1_series(make_rat(-3, 8), make_rat(1, 8), make_rat(1, 4), order);
    auto viahyp = mul(pow_rational(Poly::from_longs({1, -1}).to_series(Var::t, order),
                                   make_rat(1, 16)),
                      h);
    idx = first_mismatch(closed, viahyp);
    if (idx >= 0) return fail("actually-M2", order, idx, "hypergeometric route mismatch");
    return ok("actually-M2", order,
              "closed form = (1-t)^{1/16}((1+sqrt(1-t))/2)^{3/4} = hypergeometric route");
}

IdentityReport run_quartic(const std::string& name, const std::string& rel_name, Angle u,
                           int power, int order) {
    auto s = lambda_ext(u, order + 1);
    auto sp = pow_long(s, power);
    const auto& rel = paper_relation(rel_name).rel;
    int idx = rel.first_failure(sp);
    return from_mismatch(name, order, idx,
                         "quartic on the " + std::to_string(power) + "th power");
}

IdentityReport run_gg(const std::string& name, int k, int order) {
    int idx = first_mismatch(g_closed(k).eval(order), g_series(k, order));
    return from_mismatch(name, order, idx, "closed E,K form vs theta series pipeline");
}

IdentityReport run_rk(const std::string& name, int k, int order) {
    int idx = first_mismatch(apply_rk(k, order), rk_theta_ratio(k, order));
    return from_mismatch(name, order, idx, "intertwiner image vs theta-derivative ratio");
}

IdentityReport run_g_combination(int order) {
    // g1, g2, g3 as linear combinations of E and the R_k images; the g3
    // R2-coefficient is the recomputed +1/9216
    auto e = elliptic_e(order);
    auto r1 = apply_rk(1, order), r2 = apply_rk(2, order), r3 = apply_rk(3, order);
    auto comb1 = rat_mul(make_rat(1, 24), add(e, r1));
    int idx = first_mismatch(comb1, g_series(1, order));
    if (idx >= 0) return fail("g-combinations", order, idx, "g1 combination");
    auto comb2 = add(rat_mul(rat_from_string("3/640"), e),
                     add(rat_mul(rat_from_string("1/192"), r1),
                         rat_mul(rat_from_string("1/1920"), r2)));
    idx = first_mismatch(comb2, g_series(2, order));
    if (idx >= 0) return fail("g-combinations", order, idx, "g2 combination");
    auto comb3 = add(add(rat_mul(rat_from_string("5/7168"), e),
                         rat_mul(rat_from_string("37/46080"), r1)),
                     add(rat_mul(rat_from_string("1/9216"), r2),
                         rat_mul(rat_from_string("1/322560"), r3)));
    idx = first_mismatch(comb3, g_series(3, order));
    if (idx >= 0) return fail("g-combinations", order, idx, "g3 combination (recomputed sign)");
    return ok("g-combinations", order, "g1, g2, g3 as E/R1/R2/R3 combinations");
}

IdentityReport run_ddfinite(int order) {
    int n = order + 8;
    auto [d0, d1] = ddfinite_l1();
    auto l1 = SeriesCoeffODE::from_ekpoly({d0, d1}, n);
    auto l3 = l1.multiply_monic(paper_operator("L_E").op, n);
    auto g1 = g_series(1, n);
    auto res = l3.apply(truncate(g1, n));
    if (res.order() < order)
        return fail("ddfinite-g1", order, -2, "not enough residual terms computed");
    for (int k = 0; k < res.order(); ++k)
        if (!is_zero(res.c[(size_t)k])) return fail("ddfinite-g1", order, k);
    return ok("ddfinite-g1", res.order(), "order-three composition annihilates g1");
}

IdentityReport run_guess_m(const std::string& name, Angle u, const std::string& catalog_name,
                           int order) {
    if (order < 120) order = 120;
    auto series = lambda_ext(u, order);
    auto g = guess_linear_ode(series, GuessBudget{4, 12, 10});
    if (!g.found) return fail(name, order, -2, g.note);
    if (g.order != 4) return fail(name, order, -2, "order " + std::to_string(g.order));
    const auto& want = paper_operator(catalog_name).op;
    if (!same_solution_space(g.op, want, make_rat(1, 2), 60))
        return fail(name, order, -2, "solution spaces differ");
    return ok(name, order, "order-4 operator recovered; mutual annihilation with the catalog");
}

IdentityReport run_modp_campaign(int order) {
    if (order < 600) order = 600;
    auto m5 = scale_var(pvi_solve_fixed(Rat(5), order - 1), Rat(16));
    std::vector<std::uint64_t> primes = {3, 5, 7, 11, 13, 17, 19, 23};
    auto rows = modp_scan(m5, primes, GuessBudget{14, 14, 10}, 0);
    struct Want {
        std::uint64_t p;
        int order, degree;
    };
    std::vector<Want> want = {{3, 1, 1},  {5, 1, 2},  {7, 3, 3},   {11, 5, 5},
                              {13, 6, 6}, {17, 8, 8}, {19, 9, 9}, {23, 11, 11}};
    std::string detail;
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        detail += (detail.empty() ? "" : ", ") + std::to_string(r.p) + ":(" +
                  std::to_string(r.order) + "," + std::to_string(r.degree) + ")";
        if (r.skipped || !r.found || r.order != want[i].order || r.degree != want[i].degree)
            return fail("modp-campaign-M5", order, (int)i, detail);
        if (r.p >= 7 && !r.law_half_pm1)
            return fail("modp-campaign-M5", order, (int)i, "half-prime law not flagged");
    }
    return ok("modp-campaign-M5", order, detail);
}

IdentityReport run_modp_algebraic(int order) {
    if (order < 400) order = 400;
    struct Case {
        long m;
        std::uint64_t p;
        const char* rel;
        int max_dy, max_dt;
    };
    std::vector<Case> cases = {{5, 3, "modp_M5_p3", 16, 8},
                               {5, 5, "modp_M5_p5", 8, 10},
                               {6, 3, "modp_M6_p3", 4, 4},
                               {7, 3, "modp_M7_p3", 4, 4},
                               {11, 3, "modp_M11_p3", 16, 8}};
    for (const auto& c : cases) {
        auto series = scale_var(pvi_solve_fixed(Rat(c.m), order - 1), Rat(16));
        auto fp = reduce_mod_p(series, c.p);
        auto g = guess_algebraic(fp, c.max_dy, c.max_dt, 10);
        if (!g.found)
            return fail("modp-algebraic", order, -2,
                        "M=" + std::to_string(c.m) + " p=" + std::to_string(c.p) + ": " + g.note);
        auto want = reduce_relation_mod_p(paper_relation(c.rel).rel, c.p);
        want.monic_normalize();
        if (!(g.rel == want))
            return fail("modp-algebraic", order, -2,
                        "M=" + std::to_string(c.m) + " p=" + std::to_string(c.p) +
                            ": relation differs from the printed one");
    }
    // (M,p) = (7,7): verified against the printed polynomial directly
    auto m7 = scale_var(pvi_solve_fixed(Rat(7), order - 1), Rat(16));
    auto fp77 = reduce_mod_p(m7, 7);
    auto rel77 = reduce_relation_mod_p(paper_relation("modp_M7_p7").rel, 7);
    int idx = rel77.first_failure(fp77);
    if (idx >= 0) return fail("modp-algebraic", order, idx, "(7,7) printed relation fails");
    return ok("modp-algebraic", order, "five relations re-guessed, (7,7) checked directly");
}

IdentityReport run_rescale(int order) {
    if (order < 201) order = 201;
    for (long m : {5L, 6L, 7L, -1L}) {
        auto series = pvi_solve_fixed(Rat(m), order - 1);
        auto r = globally_bounded_rescale(series);
        if (!r.found || !(r.scale == 16))
            return fail("rescale-16", order, -2,
                        "M=" + std::to_string(m) + ": " + r.diagnostics);
        auto scaled = scale_var(series, Rat(16));
        for (int k = 0; k < std::min(scaled.order(), 200); ++k)
            if (scaled.c[(size_t)k].get_den() != 1)
                return fail("rescale-16", order, k, "non-integral after rescale");
    }
    return ok("rescale-16", order, "M in {5,6,7,-1} all rescale by 16 with integral prefixes");
}

IdentityReport run_indicial(int order) {
    auto contains = [](const std::vector<Rat>& roots, const Rat& r) {
        for (const auto& x : roots)
            if (x == r) return true;
        return false;
    };
    auto quarter_op = annihilator_of_power(Rat(0), make_rat(1, 4));
    if (!contains(indicial_exponents(quarter_op, Rat(1)).roots, make_rat(1, 4)))
        return fail("indicial-exponents", order, 0, "1/4 missing for the quarter-root operator");
    auto pi4op = conjugate_by_power(hyp2f1_operator(make_rat(-3, 8), make_rat(1, 8), make_rat(1, 4)),
                                    Rat(0), make_rat(1, 16));
    if (!contains(indicial_exponents(pi4op, Rat(1)).roots, make_rat(1, 16)))
        return fail("indicial-exponents", order, 1, "1/16 missing for the pi/4 operator");
    if (!contains(indicial_exponents(paper_operator("M1_order4").op, Rat(1)).roots,
                  make_rat(1, 36)))
        return fail("indicial-exponents", order, 2, "1/36 missing for the M=1 operator");
    if (!contains(indicial_exponents(paper_operator("M3_order4").op, Rat(1)).roots,
                  make_rat(1, 9)))
        return fail("indicial-exponents", order, 3, "1/9 missing for the M=3 operator");
    return ok("indicial-exponents", order, "t=1 exponents contain (u/pi)^2 in all four cases");
}

IdentityReport run_s_ladder_pi4(int order) {
    for (int k = 2; k <= 6; ++k) {
        auto closed = S_ratio_closed_pi4(k);
        if (!closed.homogeneous_of_degree(k - 1))
            return fail("s-ladder-pi4", order, k, "not homogeneous");
        int idx = first_mismatch(closed.eval(order), S_ratio(Angle::pi4, k, order));
        if (idx >= 0)
            return fail("s-ladder-pi4", order, idx, "S_" + std::to_string(k) + " mismatch");
    }
    return ok("s-ladder-pi4", order, "S_2..S_6 closed E,K forms match the theta ratios");
}

IdentityReport run_g_pi4(int order) {
    if (order < 18) order = 18;
    auto g0 = G_series(Angle::pi4, 0, order);
    int idx = first_mismatch(g0, G0_closed_pi4(order));
    if (idx >= 0) return fail("G-pi4", order, idx, "G0 vs algebraic closed form");
    auto g1 = G_series(Angle::pi4, 1, order);
    int bad = check_prefix(g1, {{2, "-3/256"},
                                {3, "-9/1024"},
                                {4, "-441/65536"},
                                {5, "-1407/262144"},
                                {6, "-18557/4194304"},
                                {7, "-62755/16777216"},
                                {8, "-13852377/4294967296"},
                                {9, "-48531703/17179869184"}});
    if (bad >= 0) return fail("G-pi4", order, bad, "G1 printed coefficients");
    // G1 = G0 * (S2/4 - 1/4)
    auto tilde = rat_mul(make_rat(1, 4), sub(S_ratio(Angle::pi4, 2, order),
                                             series_const<Rat>(Var::t, Rat(1), order)));
    idx = first_mismatch(g1, mul(g0, tilde));
    if (idx >= 0) return fail("G-pi4", order, idx, "G1 product identity");
    auto g2 = G_series(Angle::pi4, 2, order);
    bad = check_prefix(g2, {{6, "5/16777216"},
                            {7, "55/67108864"},
                            {8, "6255/4294967296"},
                            {9, "36625/17179869184"},
                            {10, "3079025/1099511627776"},
                            {11, "15116115/4398046511104"}});
    if (bad >= 0) return fail("G-pi4", order, bad, "G2 printed coefficients");
    auto g3 = G_series(Angle::pi4, 3, order);
    bad = check_prefix(g3, {{12, "-7/281474976710656"},
                            {13, "-161/1125899906842624"},
                            {14, "-33789/72057594037927936"},
                            {15, "-332703/288230376151711744"},
                            {16, "-43793127/18446744073709551616"},
                            {17, "-318184713/73786976294838206464"}});
    if (bad >= 0) return fail("G-pi4", order, bad, "G3 coefficients (t^16 recomputed)");
    return ok("G-pi4", order, "G0..G3 match the printed/recomputed expansions");
}

IdentityReport run_decomposition(const std::string& name, Angle u, const char* l3_name,
                                 const char* a3_name, const char* quartic_name, int order) {
    int n = order + 2;
    // closed solution of the order-three block
    RatFun one(Rat(1));
    auto ek = [&](int i, int j) { return EKPoly::term(i, j, EKPoly::Coeff{one, RatFun()}); };
    EKPoly sol_l3_closed =
        (u == Angle::pi6)
            ? RatFun(Poly::linear_power(-2, 1, 3), Poly::from_longs({1, -1, 1})) * ek(0, 2) +
                  RatFun(Rat(9)) * ek(1, 1)
            : (RatFun(Rat(4)) * RatFun::from_poly(Poly::from_longs({-2, 1}))) * ek(0, 2) +
                  RatFun(Rat(9)) * ek(1, 1);
    auto sol_l3 = sol_l3_closed.eval(n);
    if (!annihilates(paper_operator(l3_name).op, sol_l3))
        return fail(name, order, -2, "closed block solution not annihilated");
    // frozen leading coefficients of the block solutions
    int bad = (u == Angle::pi6)
                  ? check_prefix(sol_l3, {{0, "1/1"},
                                          {2, "177/32"},
                                          {3, "177/32"},
                                          {4, "1095/8192"},
                                          {5, "-21561/4096"},
                                          {6, "-1384095/262144"},
                                          {7, "22467/262144"},
                                          {8, "2927958291/536870912"},
                                          {9, "730823955/134217728"}})
                  : check_prefix(sol_l3, {{0, "1/1"},
                                          {2, "-15/32"},
                                          {3, "-15/32"},
                                          {4, "-3513/8192"},
                                          {5, "-1593/4096"},
                                          {6, "-92895/262144"},
                                          {7, "-85245/262144"},
                                          {8, "-161330925/536870912"},
                                          {9, "-37507821/134217728"}});
    if (bad >= 0) return fail(name, order, bad, "printed block solution coefficients");
    // algebraic block solution by root lifting, checked against its operator
    auto sol_a3 = lift_series_root(paper_relation(quartic_name).rel, Rat(1), n);
    if (!annihilates(paper_operator(a3_name).op, sol_a3))
        return fail(name, order, -2, "lifted quartic root not annihilated by the block operator");
    bad = (u == Angle::pi6) ? check_prefix(sol_a3, {{0, "1/1"},
                                                    {1, "-1/2"},
                                                    {2, "-165/64"},
                                                    {3, "-165/128"},
                                                    {4, "26655/16384"},
                                                    {5, "101085/32768"},
                                                    {6, "6546741/4194304"},
                                                    {7, "-12198135/8388608"},
                                                    {8, "-3182706057/1073741824"},
                                                    {9, "-3159215679/2147483648"}})
                            : check_prefix(sol_a3, {{0, "1/1"},
                                                    {1, "-1/2"},
                                                    {2, "9/64"},
                                                    {3, "9/128"},
                                                    {4, "747/16384"},
                                                    {5, "1089/32768"},
                                                    {6, "108603/4194304"},
                                                    {7, "176679/8388608"},
                                                    {8, "18959247/1073741824"},
                                                    {9, "32508009/2147483648"}});
    if (bad >= 0) return fail(name, order, bad, "printed algebraic block coefficients");
    // product block and the printed S3 decomposition
    auto k2 = pow_long(elliptic_k_cached(n), 2);
    auto sol_l9 = mul(sol_a3, k2);
    bad = (u == Angle::pi6) ? check_prefix(sol_l9, {{0, "1/1"},
                                                    {2, "-159/64"},
                                                    {3, "-159/64"},
                                                    {4, "2973/16384"},
                                                    {5, "23325/8192"},
                                                    {6, "11858901/4194304"},
                                                    {7, "510591/4194304"},
                                                    {8, "-2771276211/1073741824"},
                                                    {9, "-695778099/268435456"}})
                            : check_prefix(sol_l9, {{0, "1/1"},
                                                    {2, "15/64"},
                                                    {3, "15/64"},
                                                    {4, "3513/16384"},
                                                    {5, "1593/8192"},
                                                    {6, "743115/4194304"},
                                                    {7, "681825/4194304"},
                                                    {8, "161265045/1073741824"},
                                                    {9, "37482261/268435456"}});
    if (bad >= 0) return fail(name, order, bad, "printed product block coefficients");
    auto minus_s3 = neg(S_ratio(u, 3, n));
    auto comb = add(rat_mul(make_rat(1, 3), sol_l3), rat_mul(make_rat(2, 3), sol_l9));
    int idx = first_mismatch(minus_s3, comb);
    if (idx >= 0) return fail(name, order, idx, "-S3 decomposition");
    return ok(name, order, "-S3 = (1/3) block + (2/3) quartic-root * K^2, all pieces pinned");
}

IdentityReport run_c00(int order) {
    auto one = c00_lambda1(order);
    if (!(one.c[0] == Rat(1))) return fail("c00-ladders", order, 0);
    for (int k = 1; k < one.order(); ++k)
        if (!is_zero(one.c[(size_t)k])) return fail("c00-ladders", order, k, "C(0,0;1) != 1");
    auto odd = kappa_ladder_odd(5);
    std::vector<std::vector<const char*>> odd_want = {
        {"1/1"},
        {"-1/6", "1/1"},
        {"1/120", "-1/2", "1/1"},
        {"-1/5040", "13/120", "-5/6", "1/1"},
        {"1/362880", "-41/3024", "23/72", "-7/6", "1/1"}};
    for (size_t p = 0; p < odd_want.size(); ++p)
        for (size_t k = 0; k < odd_want[p].size(); ++k)
            if (!(odd[p][k] == rat_from_string(odd_want[p][k])))
                return fail("c00-ladders", order, (int)p, "odd ladder row");
    auto even = kappa_ladder_even(6);
    std::vector<std::vector<const char*>> even_want = {
        {"1/1"},
        {"0/1", "1/1"},
        {"0/1", "-1/3", "1/1"},
        {"0/1", "2/45", "-2/3", "1/1"},
        {"0/1", "-1/315", "1/5", "-1/1", "1/1"},
        {"0/1", "2/14175", "-34/945", "7/15", "-4/3", "1/1"}};
    for (size_t p = 0; p < even_want.size(); ++p)
        for (size_t k = 0; k < even_want[p].size(); ++k)
            if (!(even[p][k] == rat_from_string(even_want[p][k])))
                return fail("c00-ladders", order, (int)p, "even ladder row");
    // the two susceptibility-style rows
    if (!(odd[2][0] == rat_from_string("1/120") && odd[2][1] == rat_from_string("-1/2")))
        return fail("c00-ladders", order, 2, "fifth-order row");
    if (!(even[3][1] == rat_from_string("2/45") && even[3][2] == rat_from_string("-2/3")))
        return fail("c00-ladders", order, 3, "sixth-order row");
    // series-level closure at modest order
    int n = std::min(order, 14);
    Rat fact(1);
    for (int p = 0; p < 4; ++p) {
        if (p > 0) fact *= Rat(2 * p) * Rat(2 * p + 1);
        auto lhs = rat_mul(Rat(1) / fact, S_odd_ratio(p, n));
        auto rhs = series_zero<Rat>(Var::t, n);
        for (int k = 0; k <= p; ++k)
            rhs = add(rhs, rat_mul(odd[(size_t)p][(size_t)k] / Rat(2 * k + 1),
                                   form_factor_series(k, n)));
        int idx = first_mismatch(lhs, rhs);
        if (idx >= 0) return fail("c00-ladders", order, idx, "odd ladder closure");
    }
    Rat efact(1);
    for (int p = 0; p < 4; ++p) {
        if (p > 0) efact *= Rat(2 * p - 1) * Rat(2 * p);
        auto lhs = rat_mul(Rat(1) / efact, theta4_ratio(2 * p, n));
        auto rhs = series_zero<Rat>(Var::t, n);
        for (int k = 0; k <= p; ++k)
            rhs = add(rhs, rat_mul(even[(size_t)p][(size_t)k], c00_kappa(k, n)));
        int idx = first_mismatch(lhs, rhs);
        if (idx >= 0) return fail("c00-ladders", order, idx, "even ladder closure");
    }
    return ok("c00-ladders", order, "printed rows and series closure both hold");
}

IdentityReport run_resummation(int order) {
    // E = (1-t)^{1/4} (1 + sum_{k<=5} f^{(2k)}), valid through t^41
    int n = std::min(order, 41);
    auto acc = series_const<Rat>(Var::t, Rat(1), n);
    for (int k = 1; k <= 5; ++k) acc = add(acc, form_factor_series(k, n));
    auto lhs = mul(quarter_root(n), acc);
    int idx = first_mismatch(lhs, elliptic_e(n));
    if (idx >= 0) return fail("resummation", order, idx, "E resummation");
    // (1-t)^{1/4} = E + sum 4^n g_n, through t^29 with four correction terms
    int n2 = std::min(order, 29);
    auto rhs = elliptic_e(n2);
    Rat p4(1);
    for (int k = 1; k <= 4; ++k) {
        p4 *= Rat(4);
        rhs = add(rhs, rat_mul(p4, g_series(k, n2)));
    }
    idx = first_mismatch(quarter_root(n2), rhs);
    if (idx >= 0) return fail("resummation", order, idx, "quarter-root resummation");
    // weighted f^{(2)} = -sum n 4^n g_n
    auto rhs2 = series_zero<Rat>(Var::t, n2);
    p4 = Rat(1);
    for (int k = 1; k <= 4; ++k) {
        p4 *= Rat(4);
        rhs2 = sub(rhs2, rat_mul(Rat(k) * p4, g_series(k, n2)));
    }
    idx = first_mismatch(form_factor_weighted(1, n2), rhs2);
    if (idx >= 0) return fail("resummation", order, idx, "first-moment resummation");
    // first-moment inverse: g1 = -(1-t)^{1/4}/4 sum n f^{(2n)}
    auto gm1 = series_zero<Rat>(Var::t, n);
    for (int k = 1; k <= 5; ++k) gm1 = add(gm1, rat_mul(Rat(k), form_factor_series(k, n)));
    gm1 = rat_mul(make_rat(-1, 4), mul(quarter_root(n), gm1));
    idx = first_mismatch(gm1, g_series(1, n));
    if (idx >= 0) return fail("resummation", order, idx, "first-moment inverse");
    // the (1/32) sum n(n-1) f^{(2n)} combination: labeled as g3 in the text,
    // but the binomial algebra makes it g2; both candidates are tested and
    // the series decide
    auto comb = series_zero<Rat>(Var::t, n);
    for (int k = 1; k <= 5; ++k)
        comb = add(comb, rat_mul(Rat(k) * Rat(k - 1), form_factor_series(k, n)));
    comb = rat_mul(make_rat(1, 32), mul(quarter_root(n), comb));
    bool is_g2 = first_mismatch(comb, g_series(2, n)) == -1;
    bool is_g3 = first_mismatch(truncate(comb, n2), g_series(3, n2)) == -1;
    if (!is_g2 || is_g3)
        return fail("resummation", order, -2,
                    std::string("second-moment combination: g2? ") + (is_g2 ? "yes" : "no") +
                        ", g3? " + (is_g3 ? "yes" : "no"));
    return ok("resummation", order,
              "resummations hold; the n(n-1)/32 combination equals g2 (not g3 as labeled)");
}

IdentityReport run_ext2_absolute(int order) {
    if (order < 60) order = 60;
    auto a4 = paper_operator("A4_abs").op;
    auto ext = exterior_square_via_wronskians(a4, Rat(1), order, GuessBudget{6, 10, 10});
    if (ext.op_x.order() != 5)
        return fail("ext2-absolute", order, -2,
                    "exterior square order " + std::to_string(ext.op_x.order()));
    auto big = shift_operator(paper_operator("A4_abs_ext2_summand").op, Rat(1));
    auto const_one = series_const<Rat>(Var::x, Rat(1), 40);
    if (!annihilates(ext.op_x, const_one))
        return fail("ext2-absolute", order, -2, "D summand solutions not annihilated");
    for (const auto& y : local_solutions(big, Rat(0), 40))
        if (!annihilates(ext.op_x, y))
            return fail("ext2-absolute", order, -2, "order-four summand solutions not annihilated");
    return ok("ext2-absolute", order,
              "guessed exterior square = direct sum of the two printed factors");
}

IdentityReport run_ext2_symprod(int order) {
    // Ext^2(SymProd(L2, M2)) = w_M Sym^2(L2) w_M^{-1}  (+)  w_L Sym^2(M2) w_L^{-1}
    // on pairs with polynomial Wronskians; three deterministic pseudo-random pairs
    if (order < 60) order = 60;
    struct Pair {
        Poly wl, wm;
        RatFun l, m;
    };
    std::vector<Pair> pairs = {
        {Poly::from_longs({1, 1}), Poly::from_longs({1, 0, 1}), RatFun(Rat(1)),
         RatFun(Poly::from_longs({0, 1}), Poly::from_longs({1, 2}))},
        {Poly::from_longs({2, 0, 1}), Poly::from_longs({1, 3}),
         RatFun(Poly::from_longs({1, 1}), Poly::from_longs({3, 0, 0, 1})), RatFun(make_rat(1, 2))},
        {Poly::from_longs({1, 2, 2}), Poly::from_longs({3, 1}), RatFun(Rat(-1)),
         RatFun(Poly::from_longs({0, 0, 1}), Poly::from_longs({5, 1}))},
    };
    int idx = 0;
    for (const auto& pr : pairs) {
        // L2 = D^2 - (w'/w) D + l
        auto mk = [](const Poly& w, const RatFun& q) {
            std::vector<RatFun> c(3);
            c[2] = RatFun(Rat(1));
            c[1] = -(RatFun(w.derivative(), Poly(Rat(1))) / RatFun(w, Poly(Rat(1))));
            c[0] = q;
            return LinearODE::from_ratfun(std::move(c));
        };
        auto l2 = mk(pr.wl, pr.l);
        auto m2 = mk(pr.wm, pr.m);
        Rat t0 = common_ordinary_point({l2, m2});
        int n = order;
        auto bl = local_solutions(l2, t0, n);
        auto bm = local_solutions(m2, t0, n);
        // product solutions and their pairwise Wronskians
        std::vector<SeriesQ> prods;
        for (const auto& y : bl)
            for (const auto& z : bm) prods.push_back(mul(y, z));
        std::vector<SeriesQ> wrons;
        for (size_t a = 0; a < prods.size(); ++a)
            for (size_t b = a + 1; b < prods.size(); ++b)
                wrons.push_back(sub(mul(prods[a], differentiate(prods[b])),
                                    mul(prods[b], differentiate(prods[a]))));
        // conjugated symmetric squares, shifted to x = t - t0
        auto conj = [&](const LinearODE& sym, const Poly& w) {
            // w Sym^2 w^{-1}: substitute D -> D - w'/w
            int r = sym.order();
            RatFun gamma = RatFun(w.derivative(), Poly(Rat(1))) / RatFun(w, Poly(Rat(1)));
            std::vector<RatFun> acc((size_t)r + 1);
            std::vector<RatFun> power{RatFun(Rat(1))};
            for (int i = 0; i <= r; ++i) {
                if (!sym.coeff(i).is_zero())
                    for (size_t j = 0; j < power.size(); ++j)
                        acc[j] += RatFun::from_poly(sym.coeff(i)) * power[j];
                if (i == r) break;
                std::vector<RatFun> next(power.size() + 1);
                for (size_t j = 0; j < power.size(); ++j) {
                    next[j + 1] += power[j];
                    next[j] += power[j].derivative() - gamma * power[j];
                }
                power = std::move(next);
            }
            return LinearODE::from_ratfun(std::move(acc));
        };
        auto left = shift_operator(conj(sym_square_order2(l2), pr.wm), t0);
        auto right = shift_operator(conj(sym_square_order2(m2), pr.wl), t0);
        // prods[0] = y0 z0, prods[1] = y0 z1: W = y0^2 W(z0,z1) ~ y0^2 w_M,
        // a w_M-multiple of a Sym^2(L2) solution
        auto w_ll = sub(mul(prods[0], differentiate(prods[1])),
                        mul(prods[1], differentiate(prods[0])));
        if (!annihilates(left, w_ll))
            return fail("ext2-symprod", order, idx, "z-Wronskian not annihilated");
        // prods[2] = y1 z0: W(y0 z0, y1 z0) = z0^2 w_L
        auto w_mm = sub(mul(prods[0], differentiate(prods[2])),
                        mul(prods[2], differentiate(prods[0])));
        if (!annihilates(right, w_mm))
            return fail("ext2-symprod", order, idx, "y-Wronskian not annihilated");
        // membership of every pairwise Wronskian in the 6-dimensional direct
        // sum of the two conjugated symmetric-square solution spaces, by exact
        // linear algebra on the series
        std::vector<SeriesQ> span = local_solutions(left, Rat(0), n - 1);
        for (auto& y : local_solutions(right, Rat(0), n - 1)) span.push_back(std::move(y));
        for (const auto& w : wrons) {
            int rows = w.order();
            int cols = (int)span.size();
            // augmented elimination [span | w]
            std::vector<std::vector<Rat>> m((size_t)rows, std::vector<Rat>((size_t)cols + 1));
            for (int rr = 0; rr < rows; ++rr) {
                for (int cc = 0; cc < cols; ++cc) m[(size_t)rr][(size_t)cc] = span[(size_t)cc][rr];
                m[(size_t)rr][(size_t)cols] = w[rr];
            }
            int prow = 0;
            for (int col = 0; col < cols && prow < rows; ++col) {
                int pr2 = -1;
                for (int i = prow; i < rows; ++i)
                    if (!is_zero(m[(size_t)i][(size_t)col])) {
                        pr2 = i;
                        break;
                    }
                if (pr2 < 0) continue;
                std::swap(m[(size_t)pr2], m[(size_t)prow]);
                for (int i = 0; i < rows; ++i) {
                    if (i == prow || is_zero(m[(size_t)i][(size_t)col])) continue;
                    Rat f = m[(size_t)i][(size_t)col] / m[(size_t)prow][(size_t)col];
                    for (int jj = col; jj <= cols; ++jj)
                        m[(size_t)i][(size_t)jj] -= f * m[(size_t)prow][(size_t)jj];
                }
                ++prow;
            }
            for (int i = prow; i < rows; ++i)
                if (!is_zero(m[(size_t)i][(size_t)cols]))
                    return fail("ext2-symprod", order, idx,
                                "Wronskian outside the direct-sum span");
        }
        ++idx;
    }
    return ok("ext2-symprod", order, "identity verified on three coefficient pairs");
}

IdentityReport run_quartic_h(int order) {
    auto h = hyp2f1_series(make_rat(7, 6), make_rat(5, 2), make_rat(7, 3), order);
    int idx = paper_relation("alg_H_pi6").rel.first_failure(h);
    return from_mismatch("quartic-H-pi6", order, idx, "octic on the hypergeometric factor");
}

IdentityReport run_catalog_annihilation(int order) {
    for (const auto& name : catalog_operator_names()) {
        const auto& entry = paper_operator(name);
        if (!entry.companion) continue;
        if (!annihilates(entry.op, entry.companion(order)))
            return fail("catalog-annihilation", order, -2, name + " fails on its companion");
    }
    return ok("catalog-annihilation", order, "every companioned catalog operator annihilates");
}

std::map<std::string, IdentityEntry> build_registry() {
    std::map<std::string, IdentityEntry> reg;
    auto put = [&](std::string name, std::string summary, int order,
                   std::function<IdentityReport(int)> run) {
        reg.emplace(name, IdentityEntry{name, std::move(summary), order, std::move(run)});
    };
    put("pvi-symbolic", "symbolic-M series solve against the frozen printed rows", 12,
        run_pvi_symbolic);
    put("dual-pipeline-M1", "theta closed form vs sigma recursion at M=1", 40,
        [](int n) { return dual_pipeline("dual-pipeline-M1", Angle::pi6, 1, n); });
    put("dual-pipeline-M2", "theta closed form vs sigma recursion at M=2", 40,
        [](int n) { return dual_pipeline("dual-pipeline-M2", Angle::pi4, 2, n); });
    put("dual-pipeline-M3", "theta closed form vs sigma recursion at M=3", 40,
        [](int n) { return dual_pipeline("dual-pipeline-M3", Angle::pi3, 3, n); });
    put("dual-pipeline-M4", "theta closed form vs sigma recursion at M=4", 40,
        [](int n) { return dual_pipeline("dual-pipeline-M4", Angle::pi2, 4, n); });
    put("actually-M2", "the M=2 extension in algebraic closed form", 24, run_actually_m2);
    put("algM6", "quartic for the 12th power of the M=1 extension", 60, [](int n) {
        return run_quartic("algM6", "algM6", Angle::pi6, 12, n);
    });
    put("algM3", "quartic for the 6th power of the M=3 extension", 60, [](int n) {
        return run_quartic("algM3", "algM3", Angle::pi3, 6, n);
    });
    put("gg1", "closed E,K form of g1", 40, [](int n) { return run_gg("gg1", 1, n); });
    put("gg2", "closed E,K form of g2", 40, [](int n) { return run_gg("gg2", 2, n); });
    put("gg3", "closed E,K form of g3", 40, [](int n) { return run_gg("gg3", 3, n); });
    put("r1", "R1(E^3) against its theta ratio", 40, [](int n) { return run_rk("r1", 1, n); });
    put("r2", "R2(E^5) against its theta ratio", 40, [](int n) { return run_rk("r2", 2, n); });
    put("r3", "R3(E^7) against its theta ratio", 40, [](int n) { return run_rk("r3", 3, n); });
    put("g-combinations", "g1..g3 as E/R_k linear combinations", 40, run_g_combination);
    put("ddfinite-g1", "the order-three series-coefficient composition kills g1", 30,
        run_ddfinite);
    put("guess-M1", "operator recovery from 120 terms of the M=1 series", 120, [](int n) {
        return run_guess_m("guess-M1", Angle::pi6, "M1_order4", n);
    });
    put("guess-M3", "operator recovery from 120 terms of the M=3 series", 120, [](int n) {
        return run_guess_m("guess-M3", Angle::pi3, "M3_order4", n);
    });
    put("modp-campaign-M5", "minimal mod-p operators of the M=5 series", 600, run_modp_campaign);
    put("modp-algebraic", "mod-p algebraic relations for small M", 400, run_modp_algebraic);
    put("rescale-16", "globally bounded rescale of the integer-M series", 201, run_rescale);
    put("indicial-exponents", "local exponents (u/pi)^2 at t=1", 1, run_indicial);
    put("s-ladder-pi4", "closed S_2..S_6 at pi/4", 30, run_s_ladder_pi4);
    put("G-pi4", "pi/4 deformation coefficients G0..G3", 18, run_g_pi4);
    put("pi6-decomposition", "S3 block decomposition at pi/6", 30, [](int n) {
        return run_decomposition("pi6-decomposition", Angle::pi6, "L3_pi6", "A3_pi6",
                                 "quartic_A3_pi6", n);
    });
    put("pi3-decomposition", "S3 block decomposition at pi/3", 30, [](int n) {
        return run_decomposition("pi3-decomposition", Angle::pi3, "L3_pi3", "A3_pi3",
                                 "quartic_A3_pi3", n);
    });
    put("c00-ladders", "kappa/S ladders of both parities", 14, run_c00);
    put("resummation", "form-factor resummations around both base points", 41, run_resummation);
    put("ext2-absolute", "exterior square of the textbook operator by guessing", 60,
        run_ext2_absolute);
    put("ext2-symprod", "exterior square of symmetric products on random pairs", 60,
        run_ext2_symprod);
    put("quartic-H-pi6", "octic for the pi/6 hypergeometric factor", 40, run_quartic_h);
    put("catalog-annihilation", "catalog operators kill their companions", 40,
        run_catalog_annihilation);
    return reg;
}

const std::map<std::string, IdentityEntry>& registry() {
    static const auto reg = build_registry();
    return reg;
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : registry()) out.push_back(k);
        return out;
    }();
    return names;
}

const IdentityEntry& identity(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown identity: " + name);
    return it->second;
}

IdentityReport run_identity(const std::string& name, int order) {
    const auto& e = identity(name);
    return e.run(order > 0 ? order : e.default_order);
}

}  // namespace lamext
