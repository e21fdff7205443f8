#pragma once

#include "diffops/algrel.hpp"
#include "diffops/linear_ode.hpp"
#include "series/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lamext {

// Budget for a guessing run. guard = extra matched coefficients required
// beyond the unknown count; a candidate (r, d) is attempted only when
// N >= (r+1)(d+1) + guard.
struct GuessBudget {
    int max_order = 6;
    int max_degree = 12;
    int guard = 10;
};

// Operators are sought in the recurrence-friendly ansatz
//   sum_{i<=r, j<=d} a_{ij} t^j (t^i D_t^i),
// whose (order, degree) counts line up with how such annihilators are
// conventionally reported. Candidates are scanned by increasing order, then
// increasing degree, and the first hit is returned. (A sum-ordered scan is
// tempting but wrong here: series supported on few residue classes mod p
// admit genuine high-order degree-zero annihilators that would shadow the
// minimal-order ones.)
struct OdeGuessResult {
    bool found = false;
    int order = 0;
    int degree = 0;          // max stripped degree d
    int terms_used = 0;
    std::uint64_t modulus = 0;  // 0 for characteristic zero
    LinearODE op;            // mod-p results are lifted to integer coefficients
    std::string note;
};

OdeGuessResult guess_linear_ode(const SeriesQ& f, const GuessBudget& budget);
OdeGuessResult guess_linear_ode(const SeriesFp& f, const GuessBudget& budget);

// one operator annihilating every series in the list
OdeGuessResult guess_linear_ode_joint(const std::vector<SeriesQ>& fs, const GuessBudget& budget);

// apply a lifted operator to a mod-p series and test annihilation
bool annihilates_mod_p(const LinearODE& op, const SeriesFp& f);

struct AlgGuessResultQ {
    bool found = false;
    int deg_y = 0, deg_t = 0;
    int terms_used = 0;
    AlgRelQ rel;
    std::string note;
};
struct AlgGuessResultFp {
    bool found = false;
    int deg_y = 0, deg_t = 0;
    int terms_used = 0;
    AlgRelFp rel;  // monic-normalized
    std::string note;
};

AlgGuessResultQ guess_algebraic(const SeriesQ& f, int max_deg_y, int max_deg_t, int guard);
AlgGuessResultFp guess_algebraic(const SeriesFp& f, int max_deg_y, int max_deg_t, int guard);

struct ModPScanRow {
    std::uint64_t p = 0;
    bool skipped = false;
    std::string skip_reason;
    bool found = false;
    int order = 0;
    int degree = 0;
    bool law_half_pm1 = false;  // order == degree == (p-1)/2
};

// per-prime minimal (order, degree), scanned in parallel (jobs workers)
std::vector<ModPScanRow> modp_scan(const SeriesQ& f, const std::vector<std::uint64_t>& primes,
                                   const GuessBudget& per_prime, int jobs = 0);

struct RescaleResult {
    bool found = false;
    Int scale{1};
    std::string diagnostics;
};

// minimal N with f(N t) integral through the truncation, from the p-adic
// valuations of the coefficient denominators
RescaleResult globally_bounded_rescale(const SeriesQ& f);

// exterior square via guessing: joint annihilator of the pairwise Wronskians
// of the local solution basis at the ordinary point t0. The returned operator
// lives in x = t - t0.
struct Ext2Result {
    LinearODE op_x;
    std::vector<SeriesQ> wronskians;
    int order = 0, degree = 0;
};
Ext2Result exterior_square_via_wronskians(const LinearODE& op, const Rat& t0, int nterms,
                                          const GuessBudget& budget);

}  // namespace lamext
