#pragma once

// Reference computations kept deliberately naive and separate from the
// library: plain integer grids, schoolbook products, brute-force counting.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using IntPoly = std::vector<mpz_class>;

// a * b truncated to `len` coefficients.
inline IntPoly mul(const IntPoly &a, const IntPoly &b, std::size_t len)
{
    IntPoly r(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// Coefficients of q^0 .. q^{len-1} of q prod_m (1 - q^m)^24, by multiplying
// in one (1 - q^m) at a time.
inline IntPoly delta(std::size_t len)
{
    IntPoly p(len, 0);
    if (len > 1)
        p[1] = 1;
    for (std::size_t m = 1; m < len; ++m)
        for (int rep = 0; rep < 24; ++rep)
            for (std::size_t k = len; k-- > m;)
                p[k] -= p[k - m];
    return p;
}

// b with a * b = 1 mod q^len, solving one unknown at a time. a[0] must be 1.
inline IntPoly back_substitution_inverse(const IntPoly &a, std::size_t len)
{
    IntPoly b(len, 0);
    for (std::size_t k = 0; k < len; ++k) {
        mpz_class rhs = k == 0 ? 1 : 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j)
            rhs -= a[j] * b[k - j];
        b[k] = rhs;
    }
    return b;
}

// 1/Delta from q^{-1}: entry h is the coefficient of q^{h-1}.
inline IntPoly inverse_delta(std::size_t len)
{
    auto d = delta(len + 1);
    IntPoly shifted(d.begin() + 1, d.end());
    return back_substitution_inverse(shifted, len);
}

inline mpz_class binomial(long n, long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Number of multisets of (part, label) pairs summing to n with `labels`
// labels: walk every partition of n and choose labels per multiplicity.
inline mpz_class weighted_partition_count(int n, int labels)
{
    mpz_class total = 0;
    std::function<void(int, int, mpz_class)> walk = [&](int rest, int max_part, mpz_class ways) {
        if (rest == 0) {
            total += ways;
            return;
        }
        for (int part = std::min(rest, max_part); part >= 1; --part)
            for (int mult = 1; mult * part <= rest; ++mult)
                walk(rest - mult * part, part - 1, ways * binomial(labels + mult - 1, mult));
    };
    walk(n, n, 1);
    return total;
}

// Two-variable integer polynomials in (q, s) as sparse maps.
using Grid = std::map<std::pair<int, int>, mpz_class>;

inline Grid grid_mul(const Grid &a, const Grid &b, int q_len)
{
    Grid r;
    for (const auto &[ka, va] : a)
        for (const auto &[kb, vb] : b) {
            const int q = ka.first + kb.first;
            if (q >= q_len)
                continue;
            r[{q, ka.second + kb.second}] += va * vb;
        }
    std::erase_if(r, [](const auto &kv) { return kv.second == 0; });
    return r;
}

// theta in (q, s) with s = y^{1/2}:
// (s + 1/s) prod_m (1 + s^2 q^m)(1 + s^{-2} q^m) / (1 - q^m)^2.
inline Grid theta(int q_len)
{
    Grid f{{{0, 1}, 1}, {{0, -1}, 1}};
    for (int m = 1; m < q_len; ++m) {
        f = grid_mul(f, Grid{{{0, 0}, 1}, {{m, 2}, 1}}, q_len);
        f = grid_mul(f, Grid{{{0, 0}, 1}, {{m, -2}, 1}}, q_len);
        Grid geometric;
        for (int k = 0; k * m < q_len; ++k)
            geometric[{k * m, 0}] = k + 1;
        f = grid_mul(f, geometric, q_len);
    }
    return f;
}

// F^{2n-2} / Delta as a grid with q shifted up by one (key q <-> q^{q-1}).
inline Grid kernel_shifted(int n, int q_len)
{
    const auto f = theta(q_len);
    Grid power{{{0, 0}, 1}};
    for (int i = 0; i < 2 * n - 2; ++i)
        power = grid_mul(power, f, q_len);
    const auto inv = inverse_delta(static_cast<std::size_t>(q_len));
    Grid inv_grid;
    for (int k = 0; k < q_len; ++k)
        if (inv[static_cast<std::size_t>(k)] != 0)
            inv_grid[{k, 0}] = inv[static_cast<std::size_t>(k)];
    return grid_mul(power, inv_grid, q_len);
}

// Largest y-exponent of the q^{h-1} coefficient of F^{2n-2}/Delta: each of
// the 2n-2 theta factors contributes y^{1/2 + d} using weight d(d+1)/2 of q,
// and all coefficients are positive so nothing cancels.
inline int kernel_y_support(int n, int h)
{
    const int factors = 2 * n - 2;
    if (factors == 0)
        return 0;
    std::vector<int> best(static_cast<std::size_t>(h) + 1, 0);
    for (int f = 0; f < factors; ++f) {
        std::vector<int> next(best.size(), -1);
        for (int used = 0; used <= h; ++used) {
            if (best[static_cast<std::size_t>(used)] < 0)
                continue;
            for (int d = 0; used + d * (d + 1) / 2 <= h; ++d) {
                auto &slot = next[static_cast<std::size_t>(used + d * (d + 1) / 2)];
                slot = std::max(slot, best[static_cast<std::size_t>(used)] + d);
            }
        }
        for (int used = 1; used <= h; ++used)
            next[static_cast<std::size_t>(used)] =
                std::max(next[static_cast<std::size_t>(used)], next[static_cast<std::size_t>(used - 1)]);
        best = std::move(next);
    }
    return (n - 1) + best[static_cast<std::size_t>(h)];
}

// Taylor coefficients of cos(k u) up to u^{len-1}.
inline std::vector<mpq_class> cos_series(long k, std::size_t len)
{
    std::vector<mpq_class> c(len, 0);
    mpq_class term = 1;
    for (std::size_t j = 0; j < len; ++j) {
        if (j % 2 == 0)
            c[j] = ((j / 2) % 2 == 0) ? term : mpq_class(-term);
        term = term * k / static_cast<long>(j + 1);
    }
    return c;
}

// Taylor coefficients of 2 - 2 cos u up to u^{len-1}.
inline std::vector<mpq_class> two_minus_two_cos(std::size_t len)
{
    auto c = cos_series(1, len);
    for (auto &x : c)
        x = -2 * x;
    if (!c.empty())
        c[0] += 2;
    return c;
}

} // namespace oracle
