#include "special/ekpoly.hpp"

#include "special/hyp2f1.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lamext {

namespace {
std::mutex ek_mutex;
std::map<int, SeriesQ> e_cache, k_cache;
}  // namespace

const SeriesQ& elliptic_e_cached(int n) {
    std::lock_guard<std::mutex> lk(ek_mutex);
    auto it = e_cache.find(n);
    if (it == e_cache.end()) it = e_cache.emplace(n, elliptic_e(n)).first;
    return it->second;
}

const SeriesQ& elliptic_k_cached(int n) {
    std::lock_guard<std::mutex> lk(ek_mutex);
    auto it = k_cache.find(n);
    if (it == k_cache.end()) it = k_cache.emplace(n, elliptic_k(n)).first;
    return it->second;
}

EKPoly EKPoly::term(int i, int j, Coeff c) {
    EKPoly p;
    p.put(i, j, std::move(c));
    return p;
}

void EKPoly::put(int i, int j, Coeff c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, std::move(c));
    } else {
        it->second.a += c.a;
        it->second.b += c.b;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int EKPoly::ek_degree() const {
    int d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
    return d;
}

bool EKPoly::homogeneous_of_degree(int d) const {
    for (const auto& [key, c] : terms_)
        if (key.first + key.second != d) return false;
    return true;
}

EKPoly operator+(const EKPoly& x, const EKPoly& y) {
    EKPoly out = x;
    for (const auto& [key, c] : y.terms_) out.put(key.first, key.second, c);
    return out;
}

EKPoly operator-(const EKPoly& x) {
    EKPoly out;
    for (const auto& [key, c] : x.terms_)
        out.put(key.first, key.second, EKPoly::Coeff{-c.a, -c.b});
    return out;
}

EKPoly operator-(const EKPoly& x, const EKPoly& y) { return x + (-y); }

EKPoly operator*(const EKPoly& x, const EKPoly& y) {
    EKPoly out;
    RatFun one_minus_t = RatFun::from_poly(Poly::from_longs({1, -1}));
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            // (a1 + b1 s)(a2 + b2 s) = a1 a2 + (1-t) b1 b2 + (a1 b2 + a2 b1) s
            EKPoly::Coeff c;
            c.a = cx.a * cy.a + one_minus_t * (cx.b * cy.b);
            c.b = cx.a * cy.b + cx.b * cy.a;
            out.put(kx.first + ky.first, kx.second + ky.second, std::move(c));
        }
    }
    return out;
}

EKPoly operator*(const RatFun& a, const EKPoly& y) {
    EKPoly out;
    for (const auto& [key, c] : y.terms_)
        out.put(key.first, key.second, EKPoly::Coeff{a * c.a, a * c.b});
    return out;
}

bool operator==(const EKPoly& x, const EKPoly& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    auto ix = x.terms_.begin();
    auto iy = y.terms_.begin();
    for (; ix != x.terms_.end(); ++ix, ++iy) {
        if (ix->first != iy->first) return false;
        if (!(ix->second.a == iy->second.a) || !(ix->second.b == iy->second.b)) return false;
    }
    return true;
}

EKPoly EKPoly::derivative() const {
    RatFun t = RatFun::from_poly(Poly::variable());
    RatFun one(Rat(1));
    RatFun half = RatFun(make_rat(1, 2));
    RatFun one_minus_t = RatFun::from_poly(Poly::from_longs({1, -1}));
    // dE = (E-K)/(2t), dK = (E-(1-t)K)/(2t(1-t))
    RatFun inv2t = half / t;
    RatFun inv2t1t = inv2t / one_minus_t;
    EKPoly out;
    for (const auto& [key, c] : terms_) {
        int i = key.first, j = key.second;
        // coefficient derivative: a' + (b' - b/(2(1-t))) s
        Coeff dc{c.a.derivative(), c.b.derivative() - (half / one_minus_t) * c.b};
        out.put(i, j, dc);
        // i E^{i-1} dE K^j  with dE = inv2t*E - inv2t*K
        if (i > 0) {
            RatFun fi = RatFun(Rat(i));
            out.put(i, j, Coeff{fi * inv2t * c.a, fi * inv2t * c.b});
            out.put(i - 1, j + 1, Coeff{-(fi * inv2t) * c.a, -(fi * inv2t) * c.b});
        }
        // j K^{j-1} dK E^i  with dK = inv2t1t*E - inv2t*K
        if (j > 0) {
            RatFun fj = RatFun(Rat(j));
            out.put(i + 1, j - 1, Coeff{fj * inv2t1t * c.a, fj * inv2t1t * c.b});
            out.put(i, j, Coeff{-(fj * inv2t) * c.a, -(fj * inv2t) * c.b});
        }
    }
    return out;
}

SeriesQ EKPoly::eval(int n) const {
    if (terms_.empty()) return series_zero<Rat>(Var::t, n);
    // common pole order at t = 0 across all coefficients
    int pole = 0;
    for (const auto& [key, c] : terms_) {
        if (!c.a.is_zero()) pole = std::max(pole, c.a.den().valuation());
        if (!c.b.is_zero()) pole = std::max(pole, c.b.den().valuation());
    }
    int work = n + pole;
    const SeriesQ& e = elliptic_e_cached(work);
    const SeriesQ& k = elliptic_k_cached(work);
    auto s = pow_rational(Poly::from_longs({1, -1}).to_series(Var::t, work), make_rat(1, 2));
    auto acc = series_zero<Rat>(Var::t, work);
    for (const auto& [key, c] : terms_) {
        auto coeff = series_zero<Rat>(Var::t, work);
        int sa = 0, sb = 0;
        if (!c.a.is_zero()) {
            auto as = c.a.to_series_with_pole(Var::t, work, sa);
            coeff = add(coeff, shift_up(as, pole - sa));
        }
        if (!c.b.is_zero()) {
            auto bs = c.b.to_series_with_pole(Var::t, work, sb);
            coeff = add(coeff, mul(shift_up(bs, pole - sb), s));
        }
        auto termval = mul(coeff, mul(pow_long(e, key.first), pow_long(k, key.second)));
        acc = add(acc, termval);
    }
    for (int i = 0; i < pole; ++i)
        if (!lamext::is_zero(acc.c[i]))
            throw std::domain_error("EKPoly eval: non-removable pole of order " +
                                    std::to_string(pole - i) + " at t=0");
    return pole > 0 ? shift_down(acc, pole) : acc;
}

std::string EKPoly::to_string() const {
    if (terms_.empty()) return "[(0)/(1) + (0)/(1)*s] * E^0 * K^0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "[(" + c.a.num().to_string() + ")/(" + c.a.den().to_string() + ") + (" +
               c.b.num().to_string() + ")/(" + c.b.den().to_string() + ")*s] * E^" +
               std::to_string(key.first) + " * K^" + std::to_string(key.second);
    }
    return out;
}

namespace {

// "c0 + c1*t + c2*t^2" with rational c_k
Poly parse_poly(const std::string& s) {
    std::vector<Rat> coeffs;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    };
    skip_ws();
    if (pos < s.size() && s.compare(pos, 1, "0") == 0 && pos + 1 == s.size()) return Poly();
    while (pos < s.size()) {
        size_t term_end = s.find(" + ", pos);
        std::string term = s.substr(pos, term_end == std::string::npos ? std::string::npos
                                                                       : term_end - pos);
        pos = term_end == std::string::npos ? s.size() : term_end + 3;
        size_t star = term.find('*');
        std::string coeff = term.substr(0, star);
        int deg = 0;
        if (star != std::string::npos) {
            std::string v = term.substr(star + 1);
            if (v == "t") deg = 1;
            else if (v.rfind("t^", 0) == 0) deg = std::stoi(v.substr(2));
            else throw std::invalid_argument("bad polynomial term: " + term);
        }
        if ((int)coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
        coeffs[deg] += rat_from_string(coeff);
    }
    return Poly(std::move(coeffs));
}

}  // namespace

EKPoly EKPoly::parse(const std::string& text) {
    EKPoly out;
    size_t pos = 0;
    while ((pos = text.find('[', pos)) != std::string::npos) {
        auto need = [&](const std::string& token) {
            if (text.compare(pos, token.size(), token) != 0)
                throw std::invalid_argument("EKPoly parse: expected '" + token + "' at " +
                                            std::to_string(pos));
            pos += token.size();
        };
        auto until = [&](const std::string& stop) {
            size_t end = text.find(stop, pos);
            if (end == std::string::npos) throw std::invalid_argument("EKPoly parse: truncated");
            std::string piece = text.substr(pos, end - pos);
            pos = end;
            return piece;
        };
        need("[(");
        Poly an = parse_poly(until(")/("));
        need(")/(");
        Poly ad = parse_poly(until(") + ("));
        need(") + (");
        Poly bn = parse_poly(until(")/("));
        need(")/(");
        Poly bd = parse_poly(until(")*s] * E^"));
        need(")*s] * E^");
        size_t star = text.find(" * K^", pos);
        int i = std::stoi(text.substr(pos, star - pos));
        pos = star + 5;
        size_t end = pos;
        while (end < text.size() && (isdigit(text[end]))) ++end;
        int j = std::stoi(text.substr(pos, end - pos));
        pos = end;
        out.put(i, j, Coeff{RatFun(an, ad), RatFun(bn, bd)});
    }
    return out;
}

}  // namespace lamext
