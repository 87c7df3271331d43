#include <k3crc/crc_transform.hpp>
#include <k3crc/errors.hpp>
#include <k3crc/weighted_partitions.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace k3crc {

namespace {

// Dense polynomial in y, index = degree, no trailing zeros.
using Poly = std::vector<GaussianRational>;

void trim(Poly &p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

int degree(const Poly &p)
{
    return static_cast<int>(p.size()) - 1;
}

// a = q * b + r, deg r < deg b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly &b)
{
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    trim(a);
    if (degree(a) < degree(b))
        return {{}, a};
    Poly q(static_cast<std::size_t>(degree(a) - degree(b) + 1));
    const auto lead_inv = b.back().inverse();
    for (int k = degree(a) - degree(b); k >= 0; --k) {
        const auto c = a[static_cast<std::size_t>(k + degree(b))] * lead_inv;
        q[static_cast<std::size_t>(k)] = c;
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[static_cast<std::size_t>(k) + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly poly_gcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const auto inv = a.back().inverse();
        for (auto &c : a)
            c *= inv;
    }
    return a;
}

// p = y^shift * poly with poly(0) != 0 (or p = 0).
std::pair<int, Poly> split_laurent(const HalfLaurent &p)
{
    if (p.is_zero())
        return {0, {}};
    const int shift = *p.min_exponent() / 2;
    Poly poly(static_cast<std::size_t>(*p.max_exponent() / 2 - shift + 1));
    for (const auto &[e, c] : p.terms())
        poly[static_cast<std::size_t>(e / 2 - shift)] = c;
    return {shift, poly};
}

HalfLaurent join_laurent(int shift, const Poly &poly)
{
    HalfLaurent::Terms terms;
    for (std::size_t k = 0; k < poly.size(); ++k)
        if (!poly[k].is_zero())
            terms.emplace(2 * (shift + static_cast<int>(k)), poly[k]);
    return HalfLaurent(std::move(terms));
}

void require_integer_powers(const HalfLaurent &p, const char *what)
{
    const auto parity = p.parity();
    if (parity == Parity::odd || parity == Parity::mixed)
        throw HalfIntegerPower(std::string(what) + " has half-integer powers of y");
}

// Nullspace vector of a matrix over Q(i) via reduced row echelon form.
std::optional<std::vector<GaussianRational>> nullspace_vector(std::vector<std::vector<GaussianRational>> m, int cols)
{
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (int col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][static_cast<std::size_t>(col)].is_zero())
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        const auto inv = m[row][static_cast<std::size_t>(col)].inverse();
        for (auto &c : m[row])
            c *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][static_cast<std::size_t>(col)].is_zero())
                continue;
            const auto f = m[r][static_cast<std::size_t>(col)];
            for (int c = col; c < cols; ++c)
                m[r][static_cast<std::size_t>(c)] -= f * m[row][static_cast<std::size_t>(c)];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (static_cast<int>(pivot_col.size()) == cols)
        return std::nullopt;
    int free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end())
        ++free_col;
    std::vector<GaussianRational> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        v[static_cast<std::size_t>(pivot_col[r])] = -m[r][static_cast<std::size_t>(free_col)];
    return v;
}

} // namespace

RationalFunction::RationalFunction(HalfLaurent num, HalfLaurent den)
{
    require_integer_powers(num, "numerator");
    require_integer_powers(den, "denominator");
    if (den.is_zero())
        throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = HalfLaurent(1);
        return;
    }
    auto [num_shift, num_poly] = split_laurent(num);
    auto [den_shift, den_poly] = split_laurent(den);
    const auto g = poly_gcd(num_poly, den_poly);
    num_poly = poly_divmod(num_poly, g).first;
    den_poly = poly_divmod(den_poly, g).first;
    const auto unit = den_poly.front().inverse();
    for (auto &c : num_poly)
        c *= unit;
    for (auto &c : den_poly)
        c *= unit;
    num_ = join_laurent(num_shift - den_shift, num_poly);
    den_ = join_laurent(0, den_poly);
}

std::vector<GaussianRational> RationalFunction::taylor(int terms) const
{
    if (terms < 0)
        throw std::invalid_argument("negative number of Taylor terms");
    if (!num_.is_zero() && *num_.min_exponent() < 0)
        throw std::domain_error("rational function has a pole at y = 0");
    auto [ns, num_poly] = split_laurent(num_);
    Poly num_full(static_cast<std::size_t>(ns), GaussianRational{});
    num_full.insert(num_full.end(), num_poly.begin(), num_poly.end());
    const auto den_poly = split_laurent(den_).second;
    // den(0) = 1 in canonical form, so t_k = num_k - sum_{j>=1} den_j t_{k-j}.
    std::vector<GaussianRational> t(static_cast<std::size_t>(terms));
    for (int k = 0; k < terms; ++k) {
        GaussianRational acc = k < static_cast<int>(num_full.size()) ? num_full[static_cast<std::size_t>(k)] : 0;
        for (int j = 1; j <= std::min(k, degree(den_poly)); ++j)
            acc -= den_poly[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(k - j)];
        t[static_cast<std::size_t>(k)] = acc;
    }
    return t;
}

RationalFunction pade_reconstruct(std::span<const GaussianRational> taylor, int d_num, int d_den)
{
    if (d_num < 0 || d_den < 0)
        throw std::invalid_argument("Padé degrees must be non-negative");
    const int len = static_cast<int>(taylor.size());
    if (len < d_num + d_den + 1)
        throw std::invalid_argument("Padé reconstruction with budget (" + std::to_string(d_num) + ", "
                                    + std::to_string(d_den) + ") needs at least "
                                    + std::to_string(d_num + d_den + 1) + " coefficients, got " + std::to_string(len));

    int last = len - 1;
    while (last >= 0 && taylor[static_cast<std::size_t>(last)].is_zero())
        --last;
    if (last <= d_num)
        return RationalFunction(join_laurent(0, Poly(taylor.begin(), taylor.begin() + (last + 1))));

    // den * T = num + O(y^len): for k > d_num, sum_j den_j t_{k-j} = 0.
    auto t = [&](int k) { return k < 0 ? GaussianRational{} : taylor[static_cast<std::size_t>(k)]; };
    std::vector<std::vector<GaussianRational>> system;
    for (int k = d_num + 1; k < len; ++k) {
        std::vector<GaussianRational> row(static_cast<std::size_t>(d_den + 1));
        for (int j = 0; j <= d_den; ++j)
            row[static_cast<std::size_t>(j)] = t(k - j);
        system.push_back(std::move(row));
    }
    const auto den = nullspace_vector(std::move(system), d_den + 1);
    if (!den)
        throw NoSolution("no rational function with degrees (" + std::to_string(d_num) + ", " + std::to_string(d_den)
                         + ") matches the data");
    Poly num(static_cast<std::size_t>(d_num + 1));
    for (int k = 0; k <= d_num; ++k)
        for (int j = 0; j <= std::min(k, d_den); ++j)
            num[static_cast<std::size_t>(k)] += (*den)[static_cast<std::size_t>(j)] * t(k - j);

    RationalFunction r(join_laurent(0, num), join_laurent(0, *den));
    if (!r.num().is_zero() && *r.num().min_exponent() < 0)
        throw NoSolution("reconstructed function has a pole at y = 0");
    const auto check = r.taylor(len);
    if (!std::equal(check.begin(), check.end(), taylor.begin()))
        throw NoSolution("reconstructed function does not reproduce the data");
    return r;
}

RationalFunction reconstruct_rational(std::span<const GaussianRational> taylor, int initial, int cap)
{
    if (initial < 0)
        throw std::invalid_argument("initial Padé budget must be non-negative");
    for (int d = initial;; d = std::max(1, 2 * d)) {
        if (d > cap || 2 * d + 1 > static_cast<int>(taylor.size()))
            throw NoSolution("no rational reconstruction within degree cap " + std::to_string(cap));
        try {
            return pade_reconstruct(taylor, d, d);
        } catch (const NoSolution &) {
        }
    }
}

RationalFunction random_rational_function(std::mt19937_64 &rng, int max_degree)
{
    std::uniform_int_distribution<int> degree_dist(0, max_degree);
    std::uniform_int_distribution<int> num_dist(-5, 5);
    std::uniform_int_distribution<int> den_dist(1, 4);
    auto coefficient = [&] {
        return GaussianRational(mpq_class(num_dist(rng), den_dist(rng)), mpq_class(num_dist(rng), den_dist(rng)));
    };
    auto polynomial = [&](int deg, bool nonzero_constant) {
        Poly p(static_cast<std::size_t>(deg + 1));
        for (auto &c : p)
            c = coefficient();
        while (nonzero_constant && p.front().is_zero())
            p.front() = coefficient();
        trim(p);
        return p;
    };
    const int num_degree = degree_dist(rng);
    const int den_degree = degree_dist(rng);
    auto num = polynomial(num_degree, false);
    auto den = polynomial(den_degree, true);
    return RationalFunction(join_laurent(0, num), join_laurent(0, den));
}

int vanishing_order_at_minus_one(const HalfLaurent &p)
{
    require_integer_powers(p, "polynomial");
    if (p.is_zero())
        throw std::domain_error("vanishing order of the zero polynomial");
    auto poly = split_laurent(p).second;
    int order = 0;
    for (;;) {
        // Synthetic division by (y + 1).
        Poly q(poly.size() - 1);
        GaussianRational carry;
        for (std::size_t k = poly.size(); k-- > 1;) {
            carry = poly[k] - carry;
            q[k - 1] = carry;
        }
        // remainder is poly(-1)
        if (!(poly[0] - carry).is_zero())
            return order;
        poly = std::move(q);
        ++order;
    }
}

USeries substitute_exponential(const HalfLaurent &p, int u_order)
{
    if (u_order < 1)
        throw std::invalid_argument("u_order must be >= 1");
    require_integer_powers(p, "substituted polynomial");
    std::vector<GaussianRational> out(static_cast<std::size_t>(u_order));
    for (const auto &[e, c] : p.terms()) {
        const int k = e / 2;
        const GaussianRational ik(0, k);
        GaussianRational term = k % 2 ? -c : c;
        for (int j = 0; j < u_order; ++j) {
            if (j > 0)
                term *= ik / GaussianRational(j);
            out[static_cast<std::size_t>(j)] += term;
        }
    }
    return {0, std::move(out), u_order};
}

USeries substitute_rational(const RationalFunction &r, int u_order)
{
    if (u_order < 1)
        throw std::invalid_argument("u_order must be >= 1");
    const int pole = vanishing_order_at_minus_one(r.den());
    const int working = u_order + 2 * pole;
    const auto den = substitute_exponential(r.den(), working);
    if (den.is_zero())
        throw ZeroDenominator("denominator vanishes at y = -1 to order >= " + std::to_string(working));
    return (substitute_exponential(r.num(), working) * den.inverse()).truncated(u_order);
}

std::map<int, GaussianRational> sym_invariants_from_useries(const USeries &t, int total_age, int n)
{
    std::map<int, GaussianRational> out;
    for (int e = t.valuation(); e < t.stored_end(); ++e) {
        const auto c = t.coefficient(e);
        if (c.is_zero())
            continue;
        if ((e - total_age) % 2 != 0)
            throw ParityViolation("nonzero coefficient at u^" + std::to_string(e) + " but total age "
                                  + std::to_string(total_age) + " allows only exponents of the other parity");
        out.emplace((e - total_age + 2 * n + 2) / 2, c);
    }
    return out;
}

USeries crc_transform(int n, int h, int u_order)
{
    const auto p = hilb_generating_polynomial(n, h);
    if (p.is_zero())
        return USeries::zero(u_order);
    auto [shift, poly] = split_laurent(p);
    const int initial = 2 * n + 2 * h;
    const int cap = 2 * std::max(initial, degree(poly)) + 2;
    std::vector<GaussianRational> taylor(static_cast<std::size_t>(2 * cap + 1));
    std::copy(poly.begin(), poly.end(), taylor.begin());
    const auto r = reconstruct_rational(taylor, initial, cap);
    if (!r.is_laurent_polynomial() || r.num().shifted(2 * shift) != p)
        throw std::logic_error("generating polynomial was not recovered as a Laurent polynomial");
    return substitute_exponential(p, u_order);
}

SymInvariantTable sym_three_point_table(int n, int h_max, SignConvention sign, int u_order)
{
    if (h_max < 0)
        throw std::invalid_argument("h_max must be >= 0");
    SymInvariantTable table;
    table.n = n;
    table.h_max = h_max;
    table.u_order = u_order;
    table.sign = sign;
    table.scalar = lambda_insertion_scalar(n, sign);
    // nu and eta have all parts equal to 1, so their ages vanish.
    const int total_age = 2 * nu_partition(n).age() + eta_partition(n).age();
    for (int h = 0; h <= h_max; ++h) {
        const auto series = crc_transform(n, h, u_order).scaled(table.scalar);
        for (const auto &[sym_h, value] : sym_invariants_from_useries(series, total_age, n))
            table.entries.emplace(std::make_pair(h, sym_h), value);
    }
    return table;
}

} // namespace k3crc
