#include "special/theta.hpp"

#include <stdexcept>

namespace lamext {

Rat angle_over_pi(Angle u) {
    switch (u) {
        case Angle::zero: return Rat(0);
        case Angle::pi6: return make_rat(1, 6);
        case Angle::pi4: return make_rat(1, 4);
        case Angle::pi3: return make_rat(1, 3);
        case Angle::pi2: return make_rat(1, 2);
    }
    throw std::invalid_argument("bad angle");
}

long angle_field(Angle u) {
    switch (u) {
        case Angle::zero:
        case Angle::pi2: return 0;
        case Angle::pi4: return 2;
        case Angle::pi6:
        case Angle::pi3: return 3;
    }
    throw std::invalid_argument("bad angle");
}

std::string angle_name(Angle u) {
    switch (u) {
        case Angle::zero: return "0";
        case Angle::pi6: return "pi/6";
        case Angle::pi4: return "pi/4";
        case Angle::pi3: return "pi/3";
        case Angle::pi2: return "pi/2";
    }
    return "?";
}

Angle angle_from_name(const std::string& s) {
    if (s == "0") return Angle::zero;
    if (s == "pi/6") return Angle::pi6;
    if (s == "pi/4") return Angle::pi4;
    if (s == "pi/3") return Angle::pi3;
    if (s == "pi/2") return Angle::pi2;
    throw std::invalid_argument("unsupported angle: " + s + " (use 0, pi/6, pi/4, pi/3, pi/2)");
}

namespace {

// cos(r*pi) for r with denominator dividing 12, expressed as a + b*sqrt(d).
// Only the multiples of pi/6 and pi/4 ever arise here; odd multiples of pi/12
// (which would need sqrt6) are rejected.
struct TrigVal {
    Rat a{0}, b{0};
    long d = 0;  // 0 = rational
};

TrigVal cos_pi_frac(Rat r) {
    // reduce r mod 2 into [0, 2)
    Rat two(2);
    Int num = r.get_num();
    Int den2 = r.get_den() * 2;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den2.get_mpz_t());
    r -= Rat(q) * two;
    Rat k12 = r * Rat(12);
    if (!is_integer(k12)) throw std::domain_error("angle not a multiple of pi/12");
    long k = (long)k12.get_num().get_si();  // 0..23
    // cos(k pi/12), via cos((24-k)pi/12) = cos(k pi/12) and cos(pi - x) = -cos x
    long sign = 1;
    if (k > 12) k = 24 - k;
    if (k > 6) {
        k = 12 - k;
        sign = -1;
    }
    TrigVal v;
    switch (k) {
        case 0: v = TrigVal{Rat(1), Rat(0), 0}; break;
        case 2: v = TrigVal{Rat(0), make_rat(1, 2), 3}; break;   // sqrt3/2
        case 3: v = TrigVal{Rat(0), make_rat(1, 2), 2}; break;   // sqrt2/2
        case 4: v = TrigVal{make_rat(1, 2), Rat(0), 0}; break;
        case 6: v = TrigVal{Rat(0), Rat(0), 0}; break;
        default: throw std::domain_error("trig value outside Q(sqrt2)/Q(sqrt3)");
    }
    if (sign < 0) {
        v.a = -v.a;
        v.b = -v.b;
    }
    return v;
}

TrigVal sin_pi_frac(const Rat& r) { return cos_pi_frac(make_rat(1, 2) - r); }

QuadExt to_field(const TrigVal& v, long d) {
    if (v.d != 0 && v.d != d)
        throw std::domain_error("trig value lives in Q(sqrt" + std::to_string(v.d) +
                                "), not Q(sqrt" + std::to_string(d) + ")");
    return QuadExt{v.a, v.b, d};
}

}  // namespace

SeriesQuad theta_series_quad(const ThetaSpec& spec, long d) {
    if (spec.kind < 1 || spec.kind > 4) throw std::invalid_argument("theta kind must be 1..4");
    if (spec.order < 1) throw std::invalid_argument("theta order must be >= 1");
    long fd = angle_field(spec.u);
    if (fd != 0 && fd != d)
        throw std::invalid_argument("angle needs field Q(sqrt" + std::to_string(fd) + ")");
    QuadCtx ctx{d};
    int n = spec.order;
    auto out = series_zero<QuadExt>(Var::q, n, ctx);
    Rat u = angle_over_pi(spec.u);
    Rat halfpi_shift = make_rat(spec.deriv, 2);  // d^j/du^j cos(mu) = m^j cos(mu + j pi/2)
    bool half_kind = (spec.kind == 1 || spec.kind == 2);
    out.prefac = half_kind ? make_rat(1, 4) : Rat(0);
    if (!half_kind && spec.deriv == 0) out.c[0] = RingTraits<QuadExt>::one(ctx);
    for (long m = half_kind ? 0 : 1;; ++m) {
        long expo = half_kind ? m * (m + 1) : m * m;
        if (expo >= n) break;
        long freq = half_kind ? 2 * m + 1 : 2 * m;
        Rat arg = Rat(freq) * u + halfpi_shift;
        TrigVal tv = (spec.kind == 1) ? sin_pi_frac(arg) : cos_pi_frac(arg);
        QuadExt val = to_field(tv, d);
        Rat scale = Rat(2) * pow_rat(Rat(freq), spec.deriv);
        if ((spec.kind == 1 || spec.kind == 4) && (m % 2 == 1)) scale = -scale;
        out.c[expo] += QuadExt{scale, Rat(0), d} * val;
    }
    return out;
}

SeriesQ theta_series(const ThetaSpec& spec) {
    long fd = angle_field(spec.u);
    auto s = theta_series_quad(spec, fd == 0 ? 2 : fd);
    return descend_to_rational(s);
}

}  // namespace lamext
