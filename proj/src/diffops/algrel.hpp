#pragma once

#include "series/poly.hpp"
#include "series/series.hpp"

#include <map>
#include <string>
#include <utility>

namespace lamext {

// Bivariate relation P(t, y) = sum c_{ij} t^i y^j asserted to annihilate a
// series y(t). Template on the coefficient ring so the mod-p relations live
// in their own field.
template <class R>
class AlgebraicRelation {
  public:
    using TermMap = std::map<std::pair<int, int>, R>;  // (t_deg, y_deg) -> coeff

    AlgebraicRelation() = default;
    explicit AlgebraicRelation(TermMap terms) : terms_(std::move(terms)) { prune(); }

    void add_term(int t_deg, int y_deg, const R& coeff) {
        if (RingTraits<R>::is_zero(coeff)) return;
        auto key = std::make_pair(t_deg, y_deg);
        auto it = terms_.find(key);
        if (it == terms_.end())
            terms_.emplace(key, coeff);
        else {
            it->second += coeff;
            if (RingTraits<R>::is_zero(it->second)) terms_.erase(it);
        }
    }

    // c(t) * y^j with polynomial coefficient
    void add_poly_term(const Poly& c, int y_deg, const R& scale) {
        for (int d = 0; d <= c.degree(); ++d) {
            Rat cd = c.coeff(d);
            if (lamext::is_zero(cd)) continue;
            auto ctx = RingTraits<R>::ctx_of(scale);
            add_term(d, y_deg, RingTraits<R>::from_rat(ctx, cd) * scale);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int y_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.second);
        return d;
    }
    int t_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }

    // P(t, f(t)); prefactor-free series expected
    Series<R> evaluate(const Series<R>& f) const {
        int n = f.order();
        int dy = y_degree();
        std::vector<Series<R>> powers;
        powers.push_back(series_const<R>(f.var, RingTraits<R>::one(f.ctx), n));
        for (int j = 1; j <= dy; ++j) powers.push_back(mul(powers.back(), f));
        auto acc = series_zero<R>(f.var, n, f.ctx);
        for (const auto& [key, coeff] : terms_) {
            auto term = shift_up(powers[(size_t)key.second], key.first);
            acc = add(acc, scalar_mul(coeff, term));
        }
        return acc;
    }

    // -1 when verified through the truncation, else the first failing index
    int first_failure(const Series<R>& f) const {
        auto v = evaluate(f);
        for (int k = 0; k < v.order(); ++k)
            if (!RingTraits<R>::is_zero(v.c[k])) return k;
        return -1;
    }

    // normalize so the lexicographically largest (y_deg, t_deg) coefficient is 1
    void monic_normalize() {
        if (terms_.empty()) return;
        const R* top = nullptr;
        std::pair<int, int> best{-1, -1};
        for (const auto& [k, c] : terms_) {
            auto key = std::make_pair(k.second, k.first);
            if (key > best) {
                best = key;
                top = &c;
            }
        }
        R inv = RingTraits<R>::inverse(*top);
        for (auto& [k, c] : terms_) c = inv * c;
    }

    friend bool operator==(const AlgebraicRelation& a, const AlgebraicRelation& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += "(" + RingTraits<R>::to_string(c) + ")";
            if (k.first) out += "*t^" + std::to_string(k.first);
            if (k.second) out += "*y^" + std::to_string(k.second);
        }
        return out;
    }

  private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = RingTraits<R>::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    TermMap terms_;
};

using AlgRelQ = AlgebraicRelation<Rat>;
using AlgRelFp = AlgebraicRelation<Fp>;

// reduce an integer-coefficient relation mod p
AlgRelFp reduce_relation_mod_p(const AlgRelQ& rel, std::uint64_t p);

// Newton-lift the series root of P(t, y) = 0 with y(0) = y0; requires a
// simple root (P(0,y0) = 0, dP/dy(0,y0) != 0).
SeriesQ lift_series_root(const AlgRelQ& rel, const Rat& y0, int n);

}  // namespace lamext
