#include "guessing/guess.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace lamext {

namespace {

// ---- nullspace over Fp -------------------------------------------------------

// rows x cols matrix, row-major; returns one canonical nullspace vector
// (first free column set to 1) or nullopt when the kernel is trivial
std::optional<std::vector<std::uint64_t>> nullspace_fp(std::vector<std::uint64_t>& m, int rows,
                                                       int cols, std::uint64_t p) {
    auto at = [&](int i, int j) -> std::uint64_t& { return m[(size_t)i * cols + j]; };
    auto mulp = [&](std::uint64_t a, std::uint64_t b) {
        return (std::uint64_t)(((unsigned __int128)a * b) % p);
    };
    auto invp = [&](std::uint64_t a) { return Fp{a, p}.inverse().v; };
    std::vector<int> pivot_col_of_row;
    int row = 0;
    std::vector<int> pivot_row_of_col(cols, -1);
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int i = row; i < rows; ++i)
            if (at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = col; j < cols; ++j) std::swap(at(pr, j), at(row, j));
        std::uint64_t inv = invp(at(row, col));
        for (int j = col; j < cols; ++j) at(row, j) = mulp(at(row, j), inv);
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            std::uint64_t f = at(i, col);
            if (f == 0) continue;
            for (int j = col; j < cols; ++j) {
                std::uint64_t sub = mulp(f, at(row, j));
                at(i, j) = (at(i, j) + p - sub) % p;
            }
        }
        pivot_row_of_col[col] = row;
        pivot_col_of_row.push_back(col);
        ++row;
    }
    int free_col = -1;
    for (int col = 0; col < cols; ++col)
        if (pivot_row_of_col[col] < 0) {
            free_col = col;
            break;
        }
    if (free_col < 0) return std::nullopt;
    std::vector<std::uint64_t> v((size_t)cols, 0);
    v[(size_t)free_col] = 1;
    for (int col = 0; col < cols; ++col) {
        int r = pivot_row_of_col[col];
        if (r < 0) continue;
        // x_col = -sum_{j>col} m[r][j] x_j (row is reduced, pivot = 1)
        std::uint64_t acc = 0;
        for (int j = col + 1; j < cols; ++j)
            if (v[(size_t)j]) acc = (acc + mulp(at(r, j), v[(size_t)j])) % p;
        v[(size_t)col] = (p - acc) % p;
    }
    return v;
}

// ---- nullspace over Q (fraction-free elimination) -----------------------------

std::optional<std::vector<Rat>> nullspace_q(std::vector<Rat> rational_rows, int rows, int cols) {
    // scale each row to integers
    std::vector<Int> m((size_t)rows * cols);
    for (int i = 0; i < rows; ++i) {
        Int l(1);
        for (int j = 0; j < cols; ++j) {
            const Rat& x = rational_rows[(size_t)i * cols + j];
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        }
        for (int j = 0; j < cols; ++j) {
            const Rat& x = rational_rows[(size_t)i * cols + j];
            m[(size_t)i * cols + j] = x.get_num() * (l / x.get_den());
        }
    }
    auto at = [&](int i, int j) -> Int& { return m[(size_t)i * cols + j]; };
    // Bareiss fraction-free echelon with column pivoting order fixed
    Int prev(1);
    int row = 0;
    std::vector<int> pivot_row_of_col(cols, -1);
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int i = row; i < rows; ++i)
            if (at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(row, j));
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Int num = at(row, col) * at(i, j) - at(i, col) * at(row, j);
                Int q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw std::logic_error("Bareiss exact division failed");
                at(i, j) = q;
            }
            at(i, col) = 0;
        }
        prev = at(row, col);
        pivot_row_of_col[col] = row;
        ++row;
    }
    int free_col = -1;
    for (int col = 0; col < cols; ++col)
        if (pivot_row_of_col[col] < 0) {
            free_col = col;
            break;
        }
    if (free_col < 0) return std::nullopt;
    std::vector<Rat> v((size_t)cols, Rat(0));
    v[(size_t)free_col] = Rat(1);
    for (int col = cols - 1; col >= 0; --col) {
        int r = pivot_row_of_col[col];
        if (r < 0) continue;
        Rat acc(0);
        for (int j = col + 1; j < cols; ++j)
            if (!is_zero(v[(size_t)j])) acc += Rat(at(r, j)) * v[(size_t)j];
        v[(size_t)col] = -acc / Rat(at(r, col));
    }
    return v;
}

// falling factorial a(a-1)...(a-i+1)
Rat falling_q(long a, int i) {
    Rat out(1);
    for (int u = 0; u < i; ++u) out *= Rat(a - u);
    return out;
}

std::uint64_t falling_fp(long a, int i, std::uint64_t p) {
    std::uint64_t out = 1;
    for (int u = 0; u < i; ++u) {
        long v = (a - u) % (long)p;
        if (v < 0) v += (long)p;
        out = (std::uint64_t)(((unsigned __int128)out * (std::uint64_t)v) % p);
        if (out == 0) return 0;
    }
    return out;
}

// operator from the solved coefficient table a_{ij}: coeff of D^i is
// t^i * sum_j a_{ij} t^j
template <class Num>
LinearODE operator_from_table(const std::vector<Num>& v, int r, int d,
                              const std::function<Rat(const Num&)>& to_rat) {
    std::vector<Poly> coeffs((size_t)r + 1);
    for (int i = 0; i <= r; ++i) {
        std::vector<Rat> c((size_t)(i + d + 1), Rat(0));
        for (int j = 0; j <= d; ++j) c[(size_t)(i + j)] = to_rat(v[(size_t)i * (d + 1) + j]);
        coeffs[(size_t)i] = Poly(std::move(c));
    }
    return LinearODE(std::move(coeffs));
}

// actual (order, stripped degree) of a solved table
template <class Num>
std::pair<int, int> table_shape(const std::vector<Num>& v, int r, int d,
                                const std::function<bool(const Num&)>& nonzero) {
    int order = 0, degree = 0;
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= d; ++j)
            if (nonzero(v[(size_t)i * (d + 1) + j])) {
                order = std::max(order, i);
                degree = std::max(degree, j);
            }
    return {order, degree};
}

}  // namespace

bool annihilates_mod_p(const LinearODE& op, const SeriesFp& f) {
    std::uint64_t p = f.ctx.p;
    int n = f.order();
    for (int m = 0; m < n; ++m) {
        std::uint64_t acc = 0;
        bool row_complete = true;
        for (int i = 0; i <= op.order() && row_complete; ++i) {
            const Poly& pi = op.coeff(i);
            for (int dd = 0; dd <= pi.degree(); ++dd) {
                Rat cd = pi.coeff(dd);
                if (is_zero(cd)) continue;
                long a = m - dd + i;
                if (a >= n) {
                    row_complete = false;  // row reaches beyond the truncation
                    break;
                }
                if (a < 0) continue;
                std::uint64_t ff = falling_fp(a, i, p);
                if (ff == 0) continue;
                Fp coeff = rat_mod_p(cd, p);
                std::uint64_t term = (std::uint64_t)(((unsigned __int128)coeff.v * ff) % p);
                term = (std::uint64_t)(((unsigned __int128)term * f.c[(size_t)a].v) % p);
                acc = (acc + term) % p;
            }
        }
        if (row_complete && acc != 0) return false;
    }
    return true;
}

OdeGuessResult guess_linear_ode(const SeriesFp& f, const GuessBudget& budget) {
    OdeGuessResult out;
    out.modulus = f.ctx.p;
    std::uint64_t p = f.ctx.p;
    int n = f.order();
    for (int r = 1; r <= budget.max_order; ++r) {
        for (int d = 0; d <= budget.max_degree; ++d) {
            int cols = (r + 1) * (d + 1);
            if (n < cols + budget.guard) continue;
            int rows = n;
            std::vector<std::uint64_t> m((size_t)rows * cols, 0);
            for (int row = 0; row < rows; ++row)
                for (int i = 0; i <= r; ++i)
                    for (int j = 0; j <= d; ++j) {
                        long a = row - j;
                        if (a < 0) continue;
                        std::uint64_t ff = falling_fp(a, i, p);
                        if (ff == 0) continue;
                        m[(size_t)row * cols + (size_t)(i * (d + 1) + j)] =
                            (std::uint64_t)(((unsigned __int128)ff * f.c[(size_t)a].v) % p);
                    }
            auto v = nullspace_fp(m, rows, cols, p);
            if (!v) continue;
            auto shape = table_shape<std::uint64_t>(*v, r, d,
                                                    [](const std::uint64_t& x) { return x != 0; });
            out.found = true;
            out.order = shape.first;
            out.degree = shape.second;
            out.terms_used = n;
            out.op = operator_from_table<std::uint64_t>(
                *v, r, d, [](const std::uint64_t& x) { return Rat((unsigned long)x); });
            if (!annihilates_mod_p(out.op, f))
                throw std::logic_error("guessed mod-p operator fails re-application");
            return out;
        }
    }
    out.note = "not found within budget (order<=" + std::to_string(budget.max_order) +
               ", degree<=" + std::to_string(budget.max_degree) + ", " + std::to_string(n) +
               " terms)";
    return out;
}

namespace {

OdeGuessResult guess_linear_ode_q_impl(const std::vector<SeriesQ>& fs, const GuessBudget& budget) {
    OdeGuessResult out;
    int n = fs.empty() ? 0 : fs[0].order();
    for (const auto& f : fs) n = std::min(n, f.order());
    for (int r = 1; r <= budget.max_order; ++r) {
        for (int d = 0; d <= budget.max_degree; ++d) {
            int cols = (r + 1) * (d + 1);
            if ((int)fs.size() * n < cols + budget.guard) continue;
            int rows = (int)fs.size() * n;
            std::vector<Rat> m((size_t)rows * cols, Rat(0));
            int row = 0;
            for (const auto& f : fs)
                for (int k = 0; k < n; ++k, ++row)
                    for (int i = 0; i <= r; ++i)
                        for (int j = 0; j <= d; ++j) {
                            long a = k - j;
                            if (a < 0) continue;
                            Rat ff = falling_q(a, i);
                            if (is_zero(ff)) continue;
                            m[(size_t)row * cols + (size_t)(i * (d + 1) + j)] = ff * f.c[(size_t)a];
                        }
            auto v = nullspace_q(std::move(m), rows, cols);
            if (!v) continue;
            auto shape =
                table_shape<Rat>(*v, r, d, [](const Rat& x) { return !is_zero(x); });
            out.found = true;
            out.order = shape.first;
            out.degree = shape.second;
            out.terms_used = n;
            out.op = operator_from_table<Rat>(*v, r, d, [](const Rat& x) { return x; });
            for (const auto& f : fs)
                if (!apply(out.op, f).is_zero())
                    throw std::logic_error("guessed operator fails re-application");
            return out;
        }
    }
    out.note = "not found within budget (order<=" + std::to_string(budget.max_order) +
               ", degree<=" + std::to_string(budget.max_degree) + ", " + std::to_string(n) +
               " terms)";
    return out;
}

}  // namespace

OdeGuessResult guess_linear_ode(const SeriesQ& f, const GuessBudget& budget) {
    return guess_linear_ode_q_impl({f}, budget);
}

OdeGuessResult guess_linear_ode_joint(const std::vector<SeriesQ>& fs, const GuessBudget& budget) {
    return guess_linear_ode_q_impl(fs, budget);
}

// ---- algebraic guessing --------------------------------------------------------

namespace {

template <class R, class Result>
Result guess_algebraic_impl(const Series<R>& f, int max_dy, int max_dt, int guard) {
    Result out;
    int n = f.order();
    // powers of f, extended lazily
    std::vector<Series<R>> powers;
    powers.push_back(series_const<R>(f.var, RingTraits<R>::one(f.ctx), n));
    auto ensure_powers = [&](int dy) {
        while ((int)powers.size() <= dy) powers.push_back(mul(powers.back(), f));
    };
    for (int sum = 1; sum <= max_dy + max_dt; ++sum) {
        for (int dy = 1; dy <= std::min(sum, max_dy); ++dy) {
            int dt = sum - dy;
            if (dt > max_dt) continue;
            int cols = (dy + 1) * (dt + 1);
            if (n < cols + guard) continue;
            ensure_powers(dy);
            if constexpr (std::is_same_v<R, Fp>) {
                std::uint64_t p = f.ctx.p;
                std::vector<std::uint64_t> m((size_t)n * cols, 0);
                for (int row = 0; row < n; ++row)
                    for (int j = 0; j <= dy; ++j)
                        for (int i = 0; i <= dt; ++i) {
                            long a = row - i;
                            if (a < 0) continue;
                            m[(size_t)row * cols + (size_t)(j * (dt + 1) + i)] =
                                powers[(size_t)j].c[(size_t)a].v;
                        }
                auto v = nullspace_fp(m, n, cols, p);
                if (!v) continue;
                AlgRelFp rel;
                for (int j = 0; j <= dy; ++j)
                    for (int i = 0; i <= dt; ++i) {
                        std::uint64_t c = (*v)[(size_t)j * (dt + 1) + i];
                        if (c) rel.add_term(i, j, Fp{c, p});
                    }
                rel.monic_normalize();
                out.found = true;
                out.deg_y = rel.y_degree();
                out.deg_t = rel.t_degree();
                out.terms_used = n;
                out.rel = rel;
                if (out.rel.first_failure(f) != -1)
                    throw std::logic_error("guessed relation fails re-application");
                return out;
            } else {
                std::vector<Rat> m((size_t)n * cols, Rat(0));
                for (int row = 0; row < n; ++row)
                    for (int j = 0; j <= dy; ++j)
                        for (int i = 0; i <= dt; ++i) {
                            long a = row - i;
                            if (a < 0) continue;
                            m[(size_t)row * cols + (size_t)(j * (dt + 1) + i)] =
                                powers[(size_t)j].c[(size_t)a];
                        }
                auto v = nullspace_q(std::move(m), n, cols);
                if (!v) continue;
                AlgRelQ rel;
                for (int j = 0; j <= dy; ++j)
                    for (int i = 0; i <= dt; ++i) {
                        const Rat& c = (*v)[(size_t)j * (dt + 1) + i];
                        if (!is_zero(c)) rel.add_term(i, j, c);
                    }
                out.found = true;
                out.deg_y = rel.y_degree();
                out.deg_t = rel.t_degree();
                out.terms_used = n;
                out.rel = rel;
                if (out.rel.first_failure(f) != -1)
                    throw std::logic_error("guessed relation fails re-application");
                return out;
            }
        }
    }
    out.note = "not found within budget (deg_y<=" + std::to_string(max_dy) +
               ", deg_t<=" + std::to_string(max_dt) + ", " + std::to_string(n) + " terms)";
    return out;
}

}  // namespace

AlgGuessResultQ guess_algebraic(const SeriesQ& f, int max_dy, int max_dt, int guard) {
    return guess_algebraic_impl<Rat, AlgGuessResultQ>(f, max_dy, max_dt, guard);
}

AlgGuessResultFp guess_algebraic(const SeriesFp& f, int max_dy, int max_dt, int guard) {
    return guess_algebraic_impl<Fp, AlgGuessResultFp>(f, max_dy, max_dt, guard);
}

// ---- mod-p scan -----------------------------------------------------------------

std::vector<ModPScanRow> modp_scan(const SeriesQ& f, const std::vector<std::uint64_t>& primes,
                                   const GuessBudget& per_prime, int jobs) {
    std::vector<ModPScanRow> rows(primes.size());
    if (jobs <= 0) jobs = (int)std::thread::hardware_concurrency();
    if (jobs < 1) jobs = 1;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= primes.size()) return;
            ModPScanRow row;
            row.p = primes[idx];
            if (!is_prime_u64(row.p)) {
                row.skipped = true;
                row.skip_reason = "not prime";
                rows[idx] = row;
                continue;
            }
            try {
                auto fp = reduce_mod_p(f, row.p);
                auto g = guess_linear_ode(fp, per_prime);
                row.found = g.found;
                if (g.found) {
                    row.order = g.order;
                    row.degree = g.degree;
                    row.law_half_pm1 =
                        (g.order == g.degree && (std::uint64_t)(2 * g.order) == row.p - 1);
                }
            } catch (const ModPError& e) {
                row.skipped = true;
                row.skip_reason = e.what();
            }
            rows[idx] = row;
        }
    };
    std::vector<std::thread> pool;
    int nw = std::min<int>(jobs, (int)primes.size());
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rows;
}

// ---- globally bounded rescale ----------------------------------------------------

RescaleResult globally_bounded_rescale(const SeriesQ& f) {
    RescaleResult out;
    int n = f.order();
    // primes dividing any denominator, by trial division
    std::map<std::uint64_t, std::pair<long, int>> exponents;  // p -> (a_p, argmax index)
    std::string diag;
    for (int k = 1; k < n; ++k) {
        Int den = f.c[(size_t)k].get_den();
        if (den == 1) continue;
        Int rem = den;
        for (std::uint64_t p = 2; rem > 1; p += (p == 2 ? 1 : 2)) {
            if (p > 1000000) {
                out.diagnostics = "denominator has a prime factor beyond 10^6 at index " +
                                  std::to_string(k) + "; no bounded rescale detected";
                return out;
            }
            Int pz((unsigned long)p);
            if (rem % pz != 0) continue;
            long v = 0;
            while (rem % pz == 0) {
                rem /= pz;
                ++v;
            }
            long need = (v + k - 1) / k;  // ceil(v/k)
            auto& slot = exponents[p];
            if (need > slot.first) slot = {need, k};
        }
    }
    // growth check: the per-prime exponent must not be attained only deep in
    // the tail with the head saturating lower
    for (auto& [p, slot] : exponents) {
        long head_max = 0;
        for (int k = 1; k < (3 * n) / 4; ++k) {
            Int den = f.c[(size_t)k].get_den();
            long v = 0;
            Int pz((unsigned long)p);
            while (den % pz == 0) {
                den /= pz;
                ++v;
            }
            long need = (v + k - 1) / k;
            head_max = std::max(head_max, need);
        }
        if (slot.first > head_max) {
            out.diagnostics = "p=" + std::to_string(p) +
                              ": denominator valuations still growing at the truncation tail";
            return out;
        }
    }
    Int scale(1);
    for (auto& [p, slot] : exponents) {
        for (long i = 0; i < slot.first; ++i) scale *= Int((unsigned long)p);
        diag += (diag.empty() ? "" : ", ") + std::to_string(p) + "^" + std::to_string(slot.first);
    }
    // verify integrality after rescale
    auto scaled = scale_var(f, Rat(scale));
    for (int k = 0; k < scaled.order(); ++k)
        if (scaled.c[(size_t)k].get_den() != 1)
            throw std::logic_error("rescale verification failed");
    out.found = true;
    out.scale = scale;
    out.diagnostics = diag.empty() ? "already integral" : diag;
    return out;
}

// ---- exterior square via Wronskians ----------------------------------------------

Ext2Result exterior_square_via_wronskians(const LinearODE& op, const Rat& t0, int nterms,
                                          const GuessBudget& budget) {
    auto basis = local_solutions(op, t0, nterms);
    Ext2Result out;
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b) {
            auto w = sub(mul(basis[a], differentiate(basis[b])),
                         mul(basis[b], differentiate(basis[a])));
            out.wronskians.push_back(truncate(w, nterms - 1));
        }
    auto g = guess_linear_ode_joint(out.wronskians, budget);
    if (!g.found)
        throw std::runtime_error("exterior square guess failed: " + g.note);
    out.op_x = g.op;
    out.order = g.order;
    out.degree = g.degree;
    return out;
}

}  // namespace lamext
