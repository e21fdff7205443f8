#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lamext {

// Exact arithmetic base types. mpq_class keeps values canonical
// (reduced, positive denominator) as long as two-integer constructions
// go through make_rat below.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "num/den", reduced; integers keep an explicit /1 so files round-trip
// through one grammar.
inline std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos) {
        r = Rat(Int(s), 1);
    } else {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator: " + s);
        r = Rat(num, den);
    }
    r.canonicalize();
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// base^e for integer e (negative allowed when base != 0).
inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    if (e < 0) {
        if (is_zero(base)) throw std::domain_error("0^negative");
        b = Rat(base.get_den(), base.get_num());
        b.canonicalize();
        e = -e;
    }
    Rat num(pow_int(b.get_num(), (unsigned long)e), pow_int(b.get_den(), (unsigned long)e));
    num.canonicalize();
    return num;
}

// p-adic valuation of a nonzero integer.
inline long val_p(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

}  // namespace lamext
