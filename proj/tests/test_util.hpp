#pragma once

#include "series/series.hpp"

#include <cstdint>
#include <vector>

namespace lamext::testutil {

// Deterministic xorshift generator for property-style tests.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long small(long lo, long hi) { return lo + (long)(next() % (std::uint64_t)(hi - lo + 1)); }
    Rat rat() {
        long num = small(-9, 9);
        long den = small(1, 7);
        return make_rat(num, den);
    }
};

inline SeriesQ random_series_q(Rng& rng, Var v, int n) {
    std::vector<Rat> c;
    c.reserve((size_t)n);
    for (int k = 0; k < n; ++k) c.push_back(rng.rat());
    return SeriesQ(v, std::move(c));
}

inline SeriesQ random_unit_series_q(Rng& rng, Var v, int n) {
    auto s = random_series_q(rng, v, n);
    s.c[0] = Rat(1);
    return s;
}

}  // namespace lamext::testutil
