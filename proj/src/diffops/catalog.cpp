#include "diffops/catalog.hpp"

#include "special/closed_form.hpp"
#include "special/hyp2f1.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lamext {

namespace {

Poly P(std::vector<long> low_first) { return Poly::from_longs(std::move(low_first)); }

RatFun frac(const Rat& scale, Poly num, Poly den) {
    return RatFun(scale * num, std::move(den));
}

const Poly kT = Poly::variable();
const Poly kTm1 = P({-1, 1});   // t - 1
const Poly k1mT = P({1, -1});   // 1 - t
const Poly kTT = P({1, -1, 1});  // t^2 - t + 1

Poly tpow(int e) {
    std::vector<Rat> c((size_t)e + 1, Rat(0));
    c[(size_t)e] = Rat(1);
    return Poly(std::move(c));
}

Poly pow(Poly b, int e) {
    Poly out{Rat(1)};
    for (int i = 0; i < e; ++i) out = out * b;
    return out;
}

// annihilator of the M=1 lambda extension (order four)
LinearODE make_m1_op() {
    std::vector<RatFun> c(5);
    c[4] = RatFun(Rat(1));
    c[3] = frac(make_rat(1, 3), P({-14, 36, -30, 19}), kTm1 * kTT * kT);
    c[2] = frac(make_rat(1, 216), P({680, -3628, 5091, -3439, 1625}),
                pow(kTm1, 2) * kTT * tpow(2));
    c[1] = frac(make_rat(1, 11664), P({880, 16160, -55334, 53854, -26608, 10033}),
                pow(kTm1, 3) * kTT * tpow(3));
    c[0] = frac(make_rat(1, 186624), P({-3520, 5200, 8, 2573, -6725, 3689}),
                pow(kTm1, 4) * kTT * tpow(3));
    return LinearODE::from_ratfun(std::move(c));
}

// annihilator of the M=3 lambda extension (order four)
LinearODE make_m3_op() {
    std::vector<RatFun> c(5);
    c[4] = RatFun(Rat(1));
    c[3] = frac(make_rat(2, 3), P({-7, 11}), kTm1 * kT);
    c[2] = frac(make_rat(1, 54), P({170, -737, 587}), pow(kTm1, 2) * tpow(2));
    c[1] = frac(make_rat(1, 1458), P({110, 2130, -5223, 2855}), pow(kTm1, 3) * tpow(3));
    c[0] = frac(make_rat(1, 11664), P({-220, 1785, -702, 161}), pow(kTm1, 4) * tpow(3));
    return LinearODE::from_ratfun(std::move(c));
}

// intertwiners carrying the odd theta-derivative ratios onto powers of E
RatOperator make_r1_exact() {
    // (3/8) R1 = (t-1)t^3 D^3 + (3/2)(t-1)t^2 D^2 - (1/4)(3t+1)t D + (3/8)(t^2+1)/(t-1)
    std::vector<RatFun> c(4);
    c[3] = RatFun::from_poly(kTm1 * tpow(3));
    c[2] = frac(make_rat(3, 2), kTm1 * tpow(2), Poly(Rat(1)));
    c[1] = frac(make_rat(-1, 4), P({1, 3}) * kT, Poly(Rat(1)));
    c[0] = frac(make_rat(3, 8), P({1, 0, 1}), kTm1);
    for (auto& x : c) x = RatFun(make_rat(8, 3)) * x;
    return RatOperator{std::move(c)};
}

RatOperator make_r2_exact() {
    // -(5/8) R2 = (4/3)(t-1)(t-2)t^5 D^5 + (5/2)(t-1)(4t-9)t^4 D^4
    //   + 5(2t-3)(t-3)t^3 D^3 - (5/24)(24t^3-122t^2+59t+103)/(t-1) t^2 D^2
    //   + (1/24)(90t^4-488t^3-7t^2+774t-1)/(t-1)^2 t D
    //   - (5/96)(36t^5-205t^4-59t^3+409t^2+23t-12)/(t-1)^3
    std::vector<RatFun> c(6);
    c[5] = frac(make_rat(4, 3), kTm1 * P({-2, 1}) * tpow(5), Poly(Rat(1)));
    c[4] = frac(make_rat(5, 2), kTm1 * P({-9, 4}) * tpow(4), Poly(Rat(1)));
    c[3] = frac(Rat(5), P({-3, 2}) * P({-3, 1}) * tpow(3), Poly(Rat(1)));
    c[2] = frac(make_rat(-5, 24), P({103, 59, -122, 24}) * tpow(2), kTm1);
    c[1] = frac(make_rat(1, 24), P({-1, 774, -7, -488, 90}) * kT, pow(kTm1, 2));
    c[0] = frac(make_rat(-5, 96), P({-12, 23, 409, -59, -205, 36}), pow(kTm1, 3));
    for (auto& x : c) x = RatFun(make_rat(-8, 5)) * x;
    return RatOperator{std::move(c)};
}

RatOperator make_r3_exact() {
    // (256/315) R3 = (1/8)(t-1)(8t^2-33t+33)t^7 D^7
    //   + (7/16)(t-1)(40t^2-173t+181)t^6 D^6
    //   + (7/32)(360t^3-2077t^2+3795t-2166)t^5 D^5
    //   + (35/64)(120t^4-975t^3+2968t^2-3933t+1900)/(t-1) t^4 D^4
    //   - (7/128) q5/(t-1)^2 t^3 D^3 + (7/256) q6/(t-1)^3 t^2 D^2
    //   - (1/512) q7/(t-1)^4 t D + (7/1024) q8/(t-1)^5
    Poly q5 = P({13854, -8708, -15061, 16550, -5379, 600});
    Poly q6 = P({4402, 51338, -59739, -9695, 30197, -10287, 1080});
    Poly q7 = P({4016, 142022, 868060, -1210745, 108127, 346295, -125991, 12600});
    Poly q8 = P({180, 1378, 40936, 147125, -233350, 43466, 47986, -18801, 1800});
    std::vector<RatFun> c(8);
    c[7] = frac(make_rat(1, 8), kTm1 * P({33, -33, 8}) * tpow(7), Poly(Rat(1)));
    c[6] = frac(make_rat(7, 16), kTm1 * P({181, -173, 40}) * tpow(6), Poly(Rat(1)));
    c[5] = frac(make_rat(7, 32), P({-2166, 3795, -2077, 360}) * tpow(5), Poly(Rat(1)));
    c[4] = frac(make_rat(35, 64), P({1900, -3933, 2968, -975, 120}) * tpow(4), kTm1);
    c[3] = frac(make_rat(-7, 128), q5 * tpow(3), pow(kTm1, 2));
    c[2] = frac(make_rat(7, 256), q6 * tpow(2), pow(kTm1, 3));
    c[1] = frac(make_rat(-1, 512), q7 * kT, pow(kTm1, 4));
    c[0] = frac(make_rat(7, 1024), q8, pow(kTm1, 5));
    // the overall scale is fixed by the theta-ratio identity the operator
    // must satisfy (the bracketed block enters with 256/315, not its inverse)
    for (auto& x : c) x = RatFun(make_rat(256, 315)) * x;
    return RatOperator{std::move(c)};
}

LinearODE primitive_of(const RatOperator& op) {
    return LinearODE::from_ratfun(op.coeffs);
}

// the two order-two symmetric-product factors at u = pi/6
LinearODE make_pi6_factor1() {
    std::vector<RatFun> c(3);
    c[2] = RatFun(Rat(1));
    c[1] = frac(make_rat(1, 3), P({-2, 9, -15, 10}), kTT * kT * kTm1);
    c[0] = frac(make_rat(1, 12), P({-5, 11, 3, -39, 47, -33, 11}),
                tpow(2) * pow(kTm1, 2) * pow(kTT, 2));
    return LinearODE::from_ratfun(std::move(c));
}

LinearODE make_pi6_factor2() {
    std::vector<RatFun> c(3);
    c[2] = RatFun(Rat(1));
    c[0] = frac(make_rat(1, 4), P({1, -3, 15, -25, 15, -3, 1}),
                tpow(2) * pow(kTm1, 2) * pow(kTT, 2));
    return LinearODE::from_ratfun(std::move(c));
}

// order-three block of the S3 annihilator at u = pi/6, with the E*K^2 solution
LinearODE make_l3_pi6() {
    Poly q12 = P({-1, 7, -528, 4084, -16458, 33849, -31302, 2028, 18414, -12625, 2536, -6, 1});
    Poly q6 = P({1, -3, 1518, -3031, 1518, -3, 1});
    Poly r12 = P({-2, 15, 2304, -5105, -20496, 90597, -120498, 48198, 24459, -24350, 4881, -6, 1});
    Poly r6 = P({59, -177, 4512, -8729, 4512, -177, 59});
    Poly tp1 = P({1, 1});
    Poly tm2 = P({-2, 1});
    Poly two_tm1 = P({-1, 2});
    std::vector<RatFun> c(4);
    c[3] = RatFun(Rat(1));
    c[2] = frac(Rat(6), q12, q6 * kTm1 * tp1 * tm2 * two_tm1 * kTT * kT);
    c[1] = frac(Rat(1), r12, q6 * pow(kTm1, 2) * tp1 * tm2 * kTT * tpow(2));
    c[0] = frac(make_rat(3, 2), r6, q6 * kTm1 * tp1 * tm2 * two_tm1 * kT);
    return LinearODE::from_ratfun(std::move(c));
}

// order-three algebraic block at u = pi/6
LinearODE make_a3_pi6() {
    Poly r6 = P({52, -156, -3009, 6278, -3009, -156, 52});
    Poly r6p = r6 - Rat(2106) * (kT * kTm1 * P({-2, 1}) * P({1, 1}));
    Poly q6 = Rat(5) * r6 + Rat(16038) * (tpow(2) * pow(kTm1, 2));
    Poly r8 = Rat(5) * (r6 * kTT) + Rat(17172) * (tpow(2) * pow(kTm1, 2)) +
              Rat(15471) * (tpow(3) * pow(kTm1, 3));
    Poly two_tm1 = P({-1, 2});
    std::vector<RatFun> c(4);
    c[3] = RatFun(Rat(1));
    c[2] = frac(Rat(1), r8 * two_tm1, q6 * kT * kTm1 * kTT);
    c[1] = frac(make_rat(-5, 9), r6 * kTT, q6 * tpow(2) * pow(kTm1, 2));
    c[0] = frac(make_rat(5, 18), r6p * two_tm1, q6 * tpow(2) * pow(kTm1, 2));
    return LinearODE::from_ratfun(std::move(c));
}

// order-four factor of the S2 annihilator at u = pi/3
LinearODE make_l4_pi3() {
    std::vector<RatFun> c(5);
    c[4] = RatFun(Rat(1));
    c[3] = frac(make_rat(4, 3), P({-5, 9}), kTm1 * kT);
    c[2] = frac(make_rat(1, 9), P({73, -373, 337}), pow(kTm1, 2) * tpow(2));
    c[1] = frac(make_rat(1, 54), P({-42, 1085, -2627, 1590}), pow(kTm1, 3) * tpow(3));
    c[0] = frac(make_rat(1, 162), P({-84, 485, -769, 350}), pow(kTm1, 4) * tpow(3));
    return LinearODE::from_ratfun(std::move(c));
}

// order-two operator with algebraic hypergeometric solutions at u = pi/3
LinearODE make_a2_pi3() {
    std::vector<RatFun> c(3);
    c[2] = RatFun(Rat(1));
    c[1] = frac(make_rat(2, 3), P({-4, 7}), kT * kTm1);
    c[0] = frac(make_rat(1, 36), P({21, -133, 117}), tpow(2) * pow(kTm1, 2));
    return LinearODE::from_ratfun(std::move(c));
}

// order-three block of the S3 annihilator at u = pi/3
LinearODE make_l3_pi3() {
    Poly q2 = P({-1, 1, 128});  // 128t^2 + t - 1
    Poly tm2 = P({-2, 1});
    std::vector<RatFun> c(4);
    c[3] = RatFun(Rat(1));
    c[2] = frac(Rat(6), P({-1, 3, 40, -170, 64}), q2 * kTm1 * tm2 * kT);
    c[1] = frac(Rat(1), P({2, -11, 218, -55, -410, 128}), q2 * pow(kTm1, 2) * tm2 * tpow(2));
    c[0] = frac(make_rat(-3, 2), P({-5, 5, 32}), q2 * pow(kTm1, 2) * tm2 * kT);
    return LinearODE::from_ratfun(std::move(c));
}

// order-three algebraic block at u = pi/3
LinearODE make_a3_pi3() {
    Poly q2 = P({55, -55, 16});
    std::vector<RatFun> c(4);
    c[3] = RatFun(Rat(1));
    c[2] = frac(Rat(1), P({-55, 165, -94, 16}), kT * kTm1 * q2);
    c[1] = frac(make_rat(1, 9), P({-55, 110, 75, -130, 32}), tpow(2) * pow(kTm1, 2) * q2);
    c[0] = frac(make_rat(-1, 18), P({55, 165, -240, 64}), tpow(2) * pow(kTm1, 2) * q2);
    return LinearODE::from_ratfun(std::move(c));
}

// textbook absolutely-reducible order-four operator and the order-four
// summand of its exterior square
LinearODE make_a4_abs() {
    std::vector<RatFun> c(5);
    c[4] = RatFun(Rat(1));
    c[3] = frac(Rat(-1), Poly(Rat(1)), kT);
    c[2] = frac(make_rat(3, 4), Poly(Rat(1)), tpow(2));
    c[0] = RatFun::from_poly(-kT);
    return LinearODE::from_ratfun(std::move(c));
}

LinearODE make_a4_abs_ext2_summand() {
    std::vector<RatFun> c(5);
    c[4] = RatFun(Rat(1));
    c[3] = frac(make_rat(-3, 2), Poly(Rat(1)), kT);
    c[2] = frac(make_rat(9, 4), Poly(Rat(1)), tpow(2));
    c[1] = frac(make_rat(-15, 8), Poly(Rat(1)), tpow(3));
    c[0] = RatFun::from_poly(Rat(4) * kT);
    return LinearODE::from_ratfun(std::move(c));
}

SeriesQ pi6_factor1_solution(int n) {
    // t^{5/6} (1-t)^{5/6} (t^2-t+1)^{-1/2} 2F1([7/6,5/2],[7/3],t)
    auto h = hyp2f1_series(make_rat(7, 6), make_rat(5, 2), make_rat(7, 3), n);
    auto a = pow_rational(k1mT.to_series(Var::t, n), make_rat(5, 6));
    auto b = pow_rational(kTT.to_series(Var::t, n), make_rat(-1, 2));
    auto out = mul(h, mul(a, b));
    out.prefac = make_rat(5, 6);
    return out;
}

SeriesQ pi6_factor2_solution(int n) {
    // t^{1/2}(1-t)^{1/2}(t^2-t+1)^{-1/4} 2F1([-1/12,7/12],[1], 27/4 t^2(1-t)^2/(t^2-t+1)^3)
    auto arg =
        rat_mul(make_rat(27, 4),
                mul(mul(tpow(2).to_series(Var::t, n), pow_long(k1mT.to_series(Var::t, n), 2)),
                    pow_rational(kTT.to_series(Var::t, n), Rat(-3))));
    auto h = compose(hyp2f1_series(make_rat(-1, 12), make_rat(7, 12), Rat(1), n), arg);
    auto out = mul(h, mul(pow_rational(k1mT.to_series(Var::t, n), make_rat(1, 2)),
                          pow_rational(kTT.to_series(Var::t, n), make_rat(-1, 4))));
    out.prefac = make_rat(1, 2);
    return out;
}

SeriesQ a2_pi3_solution(int n) {
    // t^{-1/2} (1-t)^{-1/6} 2F1([5/6,3/2],[5/3],t)
    auto h = hyp2f1_series(make_rat(5, 6), make_rat(3, 2), make_rat(5, 3), n);
    auto out = mul(h, pow_rational(k1mT.to_series(Var::t, n), make_rat(-1, 6)));
    out.prefac = make_rat(-1, 2);
    return out;
}

SeriesQ a2_pi3_solution2(int n) {
    // t^{-7/6} (1-t)^{-1/6} 2F1([1/6,5/6],[1/3],t)
    auto h = hyp2f1_series(make_rat(1, 6), make_rat(5, 6), make_rat(1, 3), n);
    auto out = mul(h, pow_rational(k1mT.to_series(Var::t, n), make_rat(-1, 6)));
    out.prefac = make_rat(-7, 6);
    return out;
}

std::map<std::string, CatalogEntry> build_operator_catalog();
std::map<std::string, RelationEntry> build_relation_catalog();

std::mutex catalog_mutex;

const std::map<std::string, CatalogEntry>& operator_catalog() {
    std::lock_guard<std::mutex> lk(catalog_mutex);
    static const std::map<std::string, CatalogEntry> cat = build_operator_catalog();
    return cat;
}

const std::map<std::string, RelationEntry>& relation_catalog() {
    std::lock_guard<std::mutex> lk(catalog_mutex);
    static const std::map<std::string, RelationEntry> cat = build_relation_catalog();
    return cat;
}

std::map<std::string, CatalogEntry> build_operator_catalog() {
    std::map<std::string, CatalogEntry> cat;
    auto put = [&](std::string name, std::string role, LinearODE op,
                   std::function<SeriesQ(int)> companion) {
        cat.emplace(name, CatalogEntry{name, std::move(role), std::move(op), std::move(companion)});
    };
    put("L_E", "annihilator of the complete elliptic integral E",
        hyp2f1_operator(make_rat(1, 2), make_rat(-1, 2), Rat(1)),
        [](int n) { return elliptic_e(n); });
    put("L_K", "annihilator of the complete elliptic integral K",
        hyp2f1_operator(make_rat(1, 2), make_rat(1, 2), Rat(1)),
        [](int n) { return elliptic_k(n); });
    put("M1_order4", "order-four annihilator of the M=1 lambda extension", make_m1_op(),
        [](int n) { return lambda_extension_closed(Angle::pi6, n); });
    put("M3_order4", "order-four annihilator of the M=3 lambda extension", make_m3_op(),
        [](int n) { return lambda_extension_closed(Angle::pi3, n); });
    put("R1", "order-three intertwiner mapping E^3 onto a theta-derivative ratio",
        primitive_of(make_r1_exact()), nullptr);
    put("R2", "order-five intertwiner mapping E^5 onto a theta-derivative ratio",
        primitive_of(make_r2_exact()), nullptr);
    put("R3", "order-seven intertwiner mapping E^7 onto a theta-derivative ratio",
        primitive_of(make_r3_exact()), nullptr);
    put("L4_pi6_factor1", "first order-two factor of the pi/6 S2 block", make_pi6_factor1(),
        pi6_factor1_solution);
    put("L4_pi6_factor2", "second order-two factor of the pi/6 S2 block", make_pi6_factor2(),
        pi6_factor2_solution);
    put("L3_pi6", "order-three block of the pi/6 S3 annihilator with the K^2/EK solution",
        make_l3_pi6(), nullptr);
    put("A3_pi6", "order-three algebraic block of the pi/6 S3 annihilator", make_a3_pi6(),
        nullptr);
    put("L4_pi3", "order-four factor of the pi/3 S2 annihilator", make_l4_pi3(), nullptr);
    put("A2_pi3", "order-two operator with algebraic pullback solutions at pi/3", make_a2_pi3(),
        a2_pi3_solution);
    put("A2_pi3_sol2", "same operator; second algebraic solution witness", make_a2_pi3(),
        a2_pi3_solution2);
    put("L3_pi3", "order-three block of the pi/3 S3 annihilator with the K^2/EK solution",
        make_l3_pi3(), nullptr);
    put("A3_pi3", "order-three algebraic block of the pi/3 S3 annihilator", make_a3_pi3(),
        nullptr);
    put("A4_abs", "textbook absolutely reducible order-four operator", make_a4_abs(), nullptr);
    put("A4_abs_ext2_summand", "order-four direct summand of its exterior square",
        make_a4_abs_ext2_summand(), nullptr);
    return cat;
}

std::map<std::string, RelationEntry> build_relation_catalog() {
    std::map<std::string, RelationEntry> cat;
    auto put = [&](std::string name, std::string role, AlgRelQ rel, std::uint64_t p = 0) {
        cat.emplace(name, RelationEntry{name, std::move(role), std::move(rel), p});
    };

    {
        // quartic for the 12th power of the M=1 lambda extension
        Poly p6 = P({5, -15, 138, -251, 138, -15, 5});
        Poly p12 = P({113, -678, 5829, -22930, 148410, -463518, 665661, -463518, 148410, -22930,
                      5829, -678, 113});
        Poly p24 = P({64,        -768,        4965,       -22231,      3243192,  -31880523,
                      66263383,  309635262,   -1791331236, 3209457458, -698769519, -6199132605,
                      10265065180, -6199132605, -698769519, 3209457458, -1791331236, 309635262,
                      66263383,  -31880523,   3243192,    -22231,      4965,     -768,
                      64});
        AlgRelQ rel;
        Rat one(1);
        rel.add_poly_term(Rat(pow_int(Int(3), 36)) * tpow(8), 4, one);
        rel.add_poly_term(Rat(pow_int(Int(2), 10) * pow_int(Int(3), 26)) * (tpow(6) * kTm1 * p6),
                          3, one);
        rel.add_poly_term(
            Rat(pow_int(Int(2), 17) * pow_int(Int(3), 15)) * (tpow(4) * p12 * pow(kTm1, 2)), 2,
            one);
        rel.add_poly_term(Rat(pow_int(Int(2), 26)) * (kTm1 * p24), 1, one);
        rel.add_poly_term(Rat(pow_int(Int(2), 32)) * (pow(kTm1, 4) * pow(kTT, 12)), 0, one);
        put("algM6", "quartic satisfied by the 12th power of the M=1 extension", rel);
    }
    {
        // quartic for the 6th power of the M=3 lambda extension
        Poly p8 = P({-1, 4, 6914, -20756, 64151, -93704, 82304, -38912, 8192});
        Poly p4 = P({5, -10, -5307, 5312, 3584});
        AlgRelQ rel;
        Rat one(1);
        rel.add_poly_term(Rat(pow_int(Int(3), 27)) * tpow(4), 4, one);
        rel.add_poly_term(Rat(-pow_int(Int(2), 10) * pow_int(Int(3), 20)) *
                              (tpow(4) * kTm1 * P({-2, 1})),
                          3, one);
        rel.add_poly_term(
            Rat(pow_int(Int(2), 9) * pow_int(Int(3), 11)) * (tpow(2) * p4 * pow(kTm1, 2)), 2, one);
        rel.add_poly_term(Rat(pow_int(Int(2), 15)) * (P({-2, 1}) * p8 * pow(kTm1, 2)), 1, one);
        rel.add_poly_term(Rat(-pow_int(Int(2), 16)) * pow(kTm1, 8), 0, one);
        put("algM3", "quartic satisfied by the 6th power of the M=3 extension", rel);
    }
    {
        // octic satisfied by 2F1([7/6,5/2],[7/3],t)
        AlgRelQ rel;
        Rat one(1);
        rel.add_poly_term(Rat(pow_int(Int(3), 21)) * (tpow(8) * pow(kTm1, 8)), 8, one);
        rel.add_poly_term(Rat(pow_int(Int(2), 17) * pow_int(Int(3), 11)) *
                              (tpow(4) * kTT * pow(kTm1, 4)),
                          4, one);
        rel.add_poly_term(Rat(pow_int(Int(2), 26)) *
                              (P({-2, 1}) * P({-1, 2}) * P({1, 1}) *
                               P({32, -96, 219, -278, 219, -96, 32})),
                          2, one);
        rel.add_poly_term(Rat(-pow_int(Int(2), 32)) * pow(kTT, 2), 0, one);
        put("alg_H_pi6", "octic satisfied by the first pi/6 hypergeometric factor solution", rel);
    }
    {
        // quartic for the algebraic block solutions at pi/6
        Poly P6 = Rat(4) * pow(kTT, 3) - Rat(243) * (tpow(2) * pow(kTm1, 2));
        AlgRelQ rel;
        Rat one(1);
        rel.add_poly_term(Rat(432) * pow(kTT, 4), 4, one);
        rel.add_poly_term(Rat(-72) * (P6 * pow(kTT, 2)), 2, one);
        rel.add_poly_term(Rat(-16) * (P({-2, 1}) * P({-1, 2}) * P({1, 1}) * kTT *
                                      (P6 + Rat(972) * (tpow(2) * pow(kTm1, 2)))),
                          1, one);
        rel.add_poly_term(Rat(6480) * (tpow(2) * pow(kTm1, 2) * pow(kTT, 3)) - P6 * P6, 0, one);
        put("quartic_A3_pi6", "quartic satisfied by the pi/6 algebraic block solutions", rel);
    }
    {
        // quartic for the algebraic block solutions at pi/3
        AlgRelQ rel;
        Rat one(1);
        rel.add_poly_term(Poly(Rat(27)), 4, one);
        rel.add_poly_term(Rat(-18) * P({1, -1, 16}), 2, one);
        rel.add_poly_term(Rat(-4) * (P({-2, 1}) * P({-1, 1, 128})), 1, one);
        rel.add_poly_term(-P({1, -2, 753, -752, 256}), 0, one);
        put("quartic_A3_pi3", "quartic satisfied by the pi/3 algebraic block solutions", rel);
    }

    auto modp = [&](std::string name, std::string role, std::uint64_t p, AlgRelQ rel) {
        put(std::move(name), std::move(role), std::move(rel), p);
    };
    {
        AlgRelQ rel;  // y^16 + 2(t^2+t+1) y^8 + (t+2) t^6
        rel.add_poly_term(Poly(Rat(1)), 16, Rat(1));
        rel.add_poly_term(Rat(2) * P({1, 1, 1}), 8, Rat(1));
        rel.add_poly_term(P({2, 1}) * tpow(6), 0, Rat(1));
        AlgRelQ rel_copy = rel;
        modp("modp_M5_p3", "mod-3 algebraic relation of the M=5 series", 3, std::move(rel));
        modp("modp_M11_p3", "mod-3 algebraic relation of the M=11 series", 3, std::move(rel_copy));
    }
    {
        AlgRelQ rel;  // (t^2+4t+1)^5 y^4 + 4 (t+3)^4 (t+4)^4
        rel.add_poly_term(pow(P({1, 4, 1}), 5), 4, Rat(1));
        rel.add_poly_term(Rat(4) * (pow(P({3, 1}), 4) * pow(P({4, 1}), 4)), 0, Rat(1));
        modp("modp_M5_p5", "mod-5 algebraic relation of the M=5 series", 5, rel);
    }
    {
        AlgRelQ rel;  // (t^3+1) y^2 + 2(t^2+t+1)
        rel.add_poly_term(P({1, 0, 0, 1}), 2, Rat(1));
        rel.add_poly_term(Rat(2) * P({1, 1, 1}), 0, Rat(1));
        modp("modp_M6_p3", "mod-3 algebraic relation of the M=6 series", 3, rel);
    }
    {
        AlgRelQ rel;  // y^4 + (t+2)
        rel.add_poly_term(Poly(Rat(1)), 4, Rat(1));
        rel.add_poly_term(P({2, 1}), 0, Rat(1));
        modp("modp_M7_p3", "mod-3 algebraic relation of the M=7 series", 3, rel);
    }
    {
        AlgRelQ rel;  // (t+1)^7 (t+3)^7 (t+5)^7 y^6 + 6 (t+6)^6 (t^2+2t+5)^6
        rel.add_poly_term(pow(P({1, 1}), 7) * pow(P({3, 1}), 7) * pow(P({5, 1}), 7), 6, Rat(1));
        rel.add_poly_term(Rat(6) * (pow(P({6, 1}), 6) * pow(P({5, 2, 1}), 6)), 0, Rat(1));
        modp("modp_M7_p7", "mod-7 algebraic relation of the M=7 series", 7, rel);
    }
    return cat;
}

}  // namespace

const std::vector<std::string>& catalog_operator_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : operator_catalog()) out.push_back(k);
        return out;
    }();
    return names;
}

const CatalogEntry& paper_operator(const std::string& name) {
    const auto& cat = operator_catalog();
    auto it = cat.find(name);
    if (it == cat.end()) throw std::invalid_argument("unknown catalog operator: " + name);
    return it->second;
}

const RatOperator& paper_intertwiner(const std::string& name) {
    static const std::map<std::string, RatOperator> ops = [] {
        std::map<std::string, RatOperator> out;
        out.emplace("R1", make_r1_exact());
        out.emplace("R2", make_r2_exact());
        out.emplace("R3", make_r3_exact());
        return out;
    }();
    auto it = ops.find(name);
    if (it == ops.end()) throw std::invalid_argument("unknown intertwiner: " + name);
    return it->second;
}

const std::vector<std::string>& catalog_relation_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : relation_catalog()) out.push_back(k);
        return out;
    }();
    return names;
}

const RelationEntry& paper_relation(const std::string& name) {
    const auto& cat = relation_catalog();
    auto it = cat.find(name);
    if (it == cat.end()) throw std::invalid_argument("unknown catalog relation: " + name);
    return it->second;
}

std::pair<EKPoly, EKPoly> ddfinite_l1() {
    RatFun one(Rat(1));
    auto pf = [](std::vector<long> v) { return RatFun::from_poly(Poly::from_longs(std::move(v))); };
    auto ek = [&](int i, int j) { return EKPoly::term(i, j, EKPoly::Coeff{one, RatFun()}); };
    // D-coefficient: 2((t-2)E^3 - 5(t-1)KE^2 - 2(t-1)(t-2)EK^2 + (t-1)^2 K^3)(t-1)t
    EKPoly d1 = pf({-2, 1}) * ek(3, 0) - pf({-5, 5}) * ek(2, 1) -
                (pf({-2, 1}) * pf({-2, 2})) * ek(1, 2) + (pf({1, -2, 1})) * ek(0, 3);
    d1 = (pf({0, -2, 2})) * d1;  // times 2(t-1)t
    // constant coefficient
    EKPoly d0 = (pf({1, -2, 1}) * pf({-3, 5})) * ek(0, 3) -
                (pf({-1, 1}) * pf({13, -27, 10})) * ek(1, 2) -
                (pf({-1, 1}) * pf({-17, 26})) * ek(2, 1) + pf({7, -14, 3}) * ek(3, 0);
    return {d0, d1};
}

}  // namespace lamext
