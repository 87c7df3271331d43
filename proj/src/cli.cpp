#include <k3crc/cli.hpp>
#include <k3crc/crc_transform.hpp>
#include <k3crc/errors.hpp>
#include <k3crc/jacobi_forms.hpp>
#include <k3crc/serialization.hpp>
#include <k3crc/weighted_partitions.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

namespace k3crc::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct Options {
    Config config;
    std::string golden_dir;

    int n = 1;
    int h = 0;
    int h_max = 4;
    int n_max = 3;
    int divisibility = 1;
    bool three_point = false;
    bool count_only = false;

    int pade_count = 200;
    std::uint64_t pade_seed = 1;
    int pade_max_degree = 8;
    int pade_terms = 20;

    // Failure injection for the verify subcommands.
    std::optional<int> corrupt_index;
    std::string corrupt_location;
};

std::string rational_cell(const mpq_class &x)
{
    return format_rational(x);
}

void write_series_csv(std::ostream &out, const QLaurentSeries &s)
{
    out << "q_exp,s_exp,re,im\n";
    for (int e = s.valuation(); e < s.stored_end(); ++e) {
        const auto coeff = s.coefficient(e);
        for (const auto &[k, c] : coeff.terms())
            out << e << ',' << k << ',' << rational_cell(c.re()) << ',' << rational_cell(c.im()) << '\n';
    }
}

void write_series_pretty(std::ostream &out, const QLaurentSeries &s)
{
    for (int e = s.valuation(); e < s.stored_end(); ++e) {
        const auto c = s.coefficient(e);
        if (!c.is_zero())
            out << "q^" << e << ": " << c.to_string() << '\n';
    }
    out << "+ O(q^" << s.trunc() << ")\n";
}

void write_useries_csv(std::ostream &out, const USeries &s)
{
    out << "u_exp,re,im\n";
    for (int e = s.valuation(); e < s.stored_end(); ++e) {
        const auto c = s.coefficient(e);
        if (!c.is_zero())
            out << e << ',' << rational_cell(c.re()) << ',' << rational_cell(c.im()) << '\n';
    }
}

void write_useries_pretty(std::ostream &out, const USeries &s)
{
    for (int e = s.valuation(); e < s.stored_end(); ++e) {
        const auto c = s.coefficient(e);
        if (!c.is_zero())
            out << "u^" << e << ": " << c.to_string() << '\n';
    }
    out << "+ O(u^" << s.trunc() << ")\n";
}

void emit_json(std::ostream &out, const Json &j)
{
    out << j.dump(2) << '\n';
}

int emit_q_series(const Options &o, std::ostream &out, const QLaurentSeries &s)
{
    switch (o.config.output) {
        case OutputFormat::json:
            emit_json(out, to_json(s));
            break;
        case OutputFormat::csv:
            write_series_csv(out, s);
            break;
        case OutputFormat::pretty:
            write_series_pretty(out, s);
            break;
    }
    return exit_ok;
}

int cmd_expand(const std::string &which, const Options &o, std::ostream &out)
{
    const FormOrder ord(o.config.q_order);
    if (which == "delta")
        return emit_q_series(o, out, discriminant_series(ord));
    if (which == "theta")
        return emit_q_series(o, out, theta_series(ord));
    return emit_q_series(o, out, kernel_series(o.n, ord));
}

Json pairs_json(const WeightedPartition &mu)
{
    Json arr = Json::array();
    for (const auto &[part, cls] : mu.pairs()) {
        Json p;
        p["part"] = part;
        p["class"] = cls.label();
        arr.push_back(std::move(p));
    }
    return arr;
}

int cmd_partitions(const Options &o, std::ostream &out)
{
    const int b = o.config.basis_size;
    if (o.count_only) {
        const auto count = count_weighted(o.n, b);
        switch (o.config.output) {
            case OutputFormat::json: {
                Json j;
                j["n"] = o.n;
                j["basis_size"] = b;
                j["count"] = count;
                emit_json(out, j);
                break;
            }
            case OutputFormat::csv:
                out << "n,basis_size,count\n" << o.n << ',' << b << ',' << count << '\n';
                break;
            case OutputFormat::pretty:
                out << "weighted partitions of " << o.n << " over a basis of size " << b << ": " << count << '\n';
                break;
        }
        return exit_ok;
    }
    const auto all = enumerate_weighted(o.n, b);
    switch (o.config.output) {
        case OutputFormat::json: {
            Json j;
            j["n"] = o.n;
            j["basis_size"] = b;
            j["count"] = all.size();
            Json arr = Json::array();
            for (const auto &mu : all) {
                Json e;
                e["pairs"] = pairs_json(mu);
                e["age"] = mu.age();
                arr.push_back(std::move(e));
            }
            j["partitions"] = std::move(arr);
            emit_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "index,partition,age\n";
            for (std::size_t i = 0; i < all.size(); ++i)
                out << i << ",\"" << all[i].to_string() << "\"," << all[i].age() << '\n';
            break;
        case OutputFormat::pretty:
            for (const auto &mu : all)
                out << mu.to_string() << "  age " << mu.age() << '\n';
            break;
    }
    return exit_ok;
}

int cmd_invariants_hilb(const Options &o, std::ostream &out)
{
    const auto table = o.three_point ? hilb_three_point_table(o.n, o.h_max) : hilb_two_point_table(o.n, o.h_max);
    switch (o.config.output) {
        case OutputFormat::json: {
            Json j;
            j["n"] = o.n;
            j["h_max"] = o.h_max;
            j["insertions"] = o.three_point ? "three-point" : "two-point";
            Json arr = Json::array();
            for (const auto &[key, v] : table.entries()) {
                Json e;
                e["h"] = key.first;
                e["k"] = key.second;
                e["value"] = to_json(v);
                arr.push_back(std::move(e));
            }
            j["entries"] = std::move(arr);
            emit_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "n,h,k,value_re,value_im\n";
            for (const auto &[key, v] : table.entries())
                out << o.n << ',' << key.first << ',' << key.second << ',' << rational_cell(v.re()) << ','
                    << rational_cell(v.im()) << '\n';
            break;
        case OutputFormat::pretty:
            for (const auto &[key, v] : table.entries())
                out << "h=" << std::setw(3) << key.first << "  k=" << std::setw(4) << key.second << "  " << v << '\n';
            break;
    }
    return exit_ok;
}

int cmd_invariants_sym(const Options &o, std::ostream &out)
{
    const auto table = sym_three_point_table(o.n, o.h_max, o.config.sign_convention, o.config.u_order);
    switch (o.config.output) {
        case OutputFormat::json: {
            Json j;
            j["n"] = o.n;
            j["h_max"] = o.h_max;
            j["u_order"] = table.u_order;
            j["sign"] = to_string(table.sign);
            j["scalar"] = to_json(table.scalar);
            Json arr = Json::array();
            for (const auto &[key, v] : table.entries) {
                Json e;
                e["h"] = key.first;
                e["sym_h"] = key.second;
                e["value"] = to_json(v);
                arr.push_back(std::move(e));
            }
            j["entries"] = std::move(arr);
            emit_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "n,h,sym_h,value_re,value_im\n";
            for (const auto &[key, v] : table.entries)
                out << o.n << ',' << key.first << ',' << key.second << ',' << rational_cell(v.re()) << ','
                    << rational_cell(v.im()) << '\n';
            break;
        case OutputFormat::pretty:
            out << "scalar " << table.scalar << " (" << to_string(table.sign) << ")\n";
            for (const auto &[key, v] : table.entries)
                out << "h=" << std::setw(3) << key.first << "  sym_h=" << std::setw(4) << key.second << "  " << v
                    << '\n';
            break;
    }
    return exit_ok;
}

int cmd_transform(const Options &o, std::ostream &out)
{
    const auto series = crc_transform(o.n, o.h, o.config.u_order);
    const bool outside = o.divisibility > 2;
    switch (o.config.output) {
        case OutputFormat::json: {
            Json j = to_json(series);
            if (outside)
                j["note"] = "outside proven range";
            emit_json(out, j);
            break;
        }
        case OutputFormat::csv:
            write_useries_csv(out, series);
            break;
        case OutputFormat::pretty:
            if (outside)
                out << "note: outside proven range\n";
            write_useries_pretty(out, series);
            break;
    }
    return exit_ok;
}

int finish_check(const Options &o, std::ostream &out, const Json &j, bool ok, const std::string &summary)
{
    if (o.config.output == OutputFormat::json)
        emit_json(out, j);
    else if (o.config.output == OutputFormat::csv)
        out << "check,ok\n" << j["check"].get<std::string>() << ',' << (ok ? "true" : "false") << '\n';
    else
        out << summary << '\n';
    return ok ? exit_ok : exit_mismatch;
}

int cmd_verify_gottsche(const Options &o, std::ostream &out)
{
    auto report = gottsche_check(o.n_max, o.config.basis_size);
    if (o.corrupt_index) {
        if (*o.corrupt_index < 0 || *o.corrupt_index > o.n_max)
            throw UsageError("--corrupt must lie in [0, --nmax]");
        report.entries[static_cast<std::size_t>(*o.corrupt_index)].enumerated += 1;
    }
    Json j;
    j["check"] = "gottsche";
    j["ok"] = report.ok();
    j["basis_size"] = o.config.basis_size;
    Json arr = Json::array();
    std::optional<int> first_bad;
    for (const auto &e : report.entries) {
        Json r;
        r["n"] = e.n;
        r["enumerated"] = e.enumerated;
        r["expected"] = e.expected.get_str();
        arr.push_back(std::move(r));
        if (!first_bad && mpz_class(static_cast<unsigned long>(e.enumerated)) != e.expected)
            first_bad = e.n;
    }
    j["entries"] = std::move(arr);
    j["first_mismatch"] = first_bad ? Json(*first_bad) : Json(nullptr);
    std::ostringstream summary;
    summary << "gottsche " << (report.ok() ? "OK" : "MISMATCH") << ":";
    for (const auto &e : report.entries)
        summary << ' ' << e.enumerated;
    if (first_bad)
        summary << " (first mismatch at n=" << *first_bad << ")";
    return finish_check(o, out, j, report.ok(), summary.str());
}

std::pair<int, int> parse_location(const std::string &s)
{
    const auto colon = s.find(':');
    try {
        if (colon == std::string::npos)
            throw std::invalid_argument("missing ':'");
        std::size_t used = 0;
        const int h = std::stoi(s.substr(0, colon), &used);
        if (used != colon)
            throw std::invalid_argument("trailing characters");
        const auto rest = s.substr(colon + 1);
        const int e = std::stoi(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument("trailing characters");
        return {h, e};
    } catch (const std::exception &) {
        throw UsageError("--corrupt expects H:E, got '" + s + "'");
    }
}

int cmd_verify_thm2(const Options &o, std::ostream &out)
{
    const FormOrder ord(o.config.q_order);
    auto reassembled = reassembled_substituted_kernel(o.n, ord, o.config.u_order);
    if (!o.corrupt_location.empty()) {
        const auto [h, e] = parse_location(o.corrupt_location);
        if (h < 0 || h >= ord.value() || e < 0 || e >= o.config.u_order)
            throw UsageError("--corrupt location outside the checked range");
        auto &s = reassembled[static_cast<std::size_t>(h)];
        std::vector<GaussianRational> coeffs;
        for (int k = 0; k < s.trunc(); ++k)
            coeffs.push_back(s.coefficient(k) + (k == e ? GaussianRational(1) : GaussianRational(0)));
        s = USeries(0, std::move(coeffs), s.trunc());
    }
    const auto report = check_theorem_2(o.n, ord, o.config.sign_convention, o.config.u_order, std::move(reassembled));

    Json j;
    j["check"] = "thm2";
    j["ok"] = report.consistent();
    j["n"] = report.n;
    j["order"] = report.q_order;
    j["u_order"] = report.u_order;
    j["sign"] = to_string(report.sign);
    j["scalar"] = to_json(report.scalar);
    j["terms_checked"] = report.terms_checked;
    j["parity_ok"] = report.parity_ok;
    j["reality_ok"] = report.reality_ok;
    if (report.mismatch) {
        Json m;
        m["h"] = report.mismatch->h;
        m["u_power"] = report.mismatch->u_power;
        m["expected"] = to_json(report.mismatch->expected);
        m["actual"] = to_json(report.mismatch->actual);
        j["mismatch"] = std::move(m);
    } else {
        j["mismatch"] = nullptr;
    }
    Json series = Json::array();
    for (const auto &s : report.sym_series)
        series.push_back(to_json(s));
    j["sym_series"] = std::move(series);

    std::ostringstream summary;
    summary << "thm2 n=" << report.n << " order=" << report.q_order << " u_order=" << report.u_order << ": "
            << (report.consistent() ? "consistent" : "INCONSISTENT") << ", " << report.terms_checked
            << " terms, scalar " << report.scalar << " (" << to_string(report.sign) << ")";
    if (report.mismatch)
        summary << ", first mismatch at h=" << report.mismatch->h << " u^" << report.mismatch->u_power;
    return finish_check(o, out, j, report.consistent(), summary.str());
}

int cmd_verify_yau_zaslow(const Options &o, std::ostream &out)
{
    auto table = hilb_two_point_table(1, o.h_max);
    if (o.corrupt_index) {
        const int h = *o.corrupt_index;
        if (h < 0 || h > o.h_max)
            throw UsageError("--corrupt must lie in [0, --hmax]");
        table.set(h, 0, table.at(h, 0) + GaussianRational(1));
    }
    const auto report = check_yau_zaslow(table);
    Json j;
    j["check"] = "yau-zaslow";
    j["ok"] = report.ok();
    j["h_max"] = o.h_max;
    j["positive_integers"] = entries_are_positive_integers(table);
    Json arr = Json::array();
    for (const auto &e : report.entries) {
        Json r;
        r["h"] = e.h;
        r["value"] = to_json(e.table_value);
        r["reference"] = e.reference.get_str();
        arr.push_back(std::move(r));
    }
    j["entries"] = std::move(arr);
    const auto bad = report.first_mismatch_h();
    j["first_mismatch"] = bad ? Json(*bad) : Json(nullptr);
    Json stray = Json::array();
    for (const auto &[h, k] : report.stray_keys)
        stray.push_back(Json::array({h, k}));
    j["stray_keys"] = std::move(stray);
    std::ostringstream summary;
    summary << "yau-zaslow " << (report.ok() ? "OK" : "MISMATCH") << ":";
    for (const auto &e : report.entries)
        summary << ' ' << e.table_value;
    if (bad)
        summary << " (first mismatch at h=" << *bad << ")";
    return finish_check(o, out, j, report.ok(), summary.str());
}

int cmd_verify_pade(const Options &o, std::ostream &out)
{
    const int deg = o.pade_max_degree;
    if (o.pade_terms < 2 * deg + 1)
        throw UsageError("--terms must be at least 2 * --max-degree + 1");
    std::mt19937_64 rng(o.pade_seed);
    int recovered = 0;
    int rejected = 0;
    int rejection_cases = 0;
    std::optional<int> first_failure;
    for (int i = 0; i < o.pade_count; ++i) {
        const auto r = random_rational_function(rng, deg);
        auto taylor = r.taylor(o.pade_terms);
        if (o.corrupt_index && *o.corrupt_index == i)
            taylor.back() += GaussianRational(1);
        bool ok = false;
        try {
            ok = pade_reconstruct(taylor, deg, deg) == r;
        } catch (const NoSolution &) {
        }
        if (ok)
            ++recovered;
        else if (!first_failure)
            first_failure = i;

        // One denominator degree short of the truth must be rejected.
        const auto den_degree = *r.den().max_exponent() / 2;
        if (den_degree >= 1) {
            ++rejection_cases;
            try {
                pade_reconstruct(taylor, deg, den_degree - 1);
            } catch (const NoSolution &) {
                ++rejected;
            }
        }
    }
    // Fibonacci numbers need a quadratic denominator.
    std::vector<GaussianRational> fib{1, 1};
    while (static_cast<int>(fib.size()) < o.pade_terms)
        fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    bool fibonacci_rejected = false;
    try {
        pade_reconstruct(fib, 0, 1);
    } catch (const NoSolution &) {
        fibonacci_rejected = true;
    }

    const bool ok = !first_failure && rejected == rejection_cases && fibonacci_rejected;
    Json j;
    j["check"] = "pade-roundtrip";
    j["ok"] = ok;
    j["count"] = o.pade_count;
    j["seed"] = o.pade_seed;
    j["max_degree"] = deg;
    j["terms"] = o.pade_terms;
    j["recovered"] = recovered;
    j["first_failure"] = first_failure ? Json(*first_failure) : Json(nullptr);
    j["short_budget_rejected"] = rejected;
    j["short_budget_cases"] = rejection_cases;
    j["fibonacci_rejected"] = fibonacci_rejected;
    std::ostringstream summary;
    summary << "pade-roundtrip " << (ok ? "OK" : "FAILED") << ": recovered " << recovered << "/" << o.pade_count
            << ", short budgets rejected " << rejected << "/" << rejection_cases;
    if (first_failure)
        summary << " (first failure at case " << *first_failure << ")";
    return finish_check(o, out, j, ok, summary.str());
}

void check_cap(const char *flag, int value)
{
    const char *env = std::getenv("K3CRC_MAX_ORDER");
    if (!env)
        return;
    int cap = 0;
    try {
        cap = std::stoi(env);
    } catch (const std::exception &) {
        throw UsageError(std::string("K3CRC_MAX_ORDER is not an integer: '") + env + "'");
    }
    if (value > cap)
        throw UsageError(std::string(flag) + " = " + std::to_string(value) + " exceeds K3CRC_MAX_ORDER = "
                         + std::to_string(cap));
}

std::string golden_name(const std::vector<std::string> &args)
{
    std::string name;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--golden") {
            ++i;
            continue;
        }
        if (args[i].rfind("--golden=", 0) == 0)
            continue;
        std::string part;
        for (char c : args[i])
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '.')
                part += c;
            else if (!part.empty() && part.back() != '-')
                part += '-';
        while (!part.empty() && part.back() == '-')
            part.pop_back();
        if (part.empty())
            continue;
        name += (name.empty() ? "" : "_") + part;
    }
    return name + ".json";
}

int golden(const std::string &dir, const std::string &name, const std::string &text, std::ostream &err)
{
    const auto path = std::filesystem::path(dir) / name;
    if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream stored;
        stored << in.rdbuf();
        if (stored.str() != text) {
            err << "golden mismatch: " << path.string() << '\n';
            return exit_mismatch;
        }
        return exit_ok;
    }
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << text;
    err << "wrote golden file " << path.string() << '\n';
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Exact generating functions for the Hilb/Sym correspondence on K3 surfaces", "k3crc"};
    app.require_subcommand(1);

    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"pretty", OutputFormat::pretty}};
    std::string output_name = "json";
    std::string sign_name = "paper";
    const auto sign_names = CLI::IsMember({"paper", "age-literal"});
    app.add_option("--output", output_name, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->option_text("json|csv|pretty");
    app.add_option("--golden", o.golden_dir, "Write or compare canonical JSON golden files in DIR")->option_text("DIR");

    auto positive = CLI::Range(1, 1 << 20);
    auto non_negative = CLI::Range(0, 1 << 20);

    auto *expand = app.add_subcommand("expand", "q-expansions of Delta, F and K_n = F^{2n-2}/Delta");
    expand->require_subcommand(1);
    auto *delta = expand->add_subcommand("delta", "modular discriminant");
    auto *theta = expand->add_subcommand("theta", "Jacobi theta function F");
    auto *kernel = expand->add_subcommand("kernel", "F^{2n-2} / Delta");
    for (auto *sub : {delta, theta, kernel})
        sub->add_option("--order", o.config.q_order, "Coefficients below q^ORDER")->check(positive);
    kernel->add_option("--n", o.n, "Number of points")->required()->check(positive);

    auto *partitions = app.add_subcommand("partitions", "cohomology-weighted partitions of n");
    partitions->add_option("--n", o.n)->required()->check(non_negative);
    partitions->add_option("--basis", o.config.basis_size, "Size of the basis of H*(S)")->check(positive);
    partitions->add_flag("--count-only", o.count_only);

    auto *invariants = app.add_subcommand("invariants", "invariant tables");
    invariants->require_subcommand(1);
    auto *hilb = invariants->add_subcommand("hilb", "Hilb^n(K3) invariants in classes (beta_h, k)");
    hilb->add_option("--n", o.n)->required()->check(positive);
    hilb->add_option("--hmax", o.h_max)->required()->check(non_negative);
    hilb->add_flag("--three-point", o.three_point, "Insert theta(eta) as a third point");
    auto *sym = invariants->add_subcommand("sym", "Sym^n(K3) invariants in classes beta_h");
    sym->add_option("--n", o.n)->required()->check(positive);
    sym->add_option("--hmax", o.h_max)->required()->check(non_negative);
    sym->add_option("--sign", sign_name)->check(sign_names)->option_text("paper|age-literal");
    sym->add_option("--u-order", o.config.u_order)->check(positive);

    auto *transform = app.add_subcommand("transform", "substitute -y = e^{iu} into P_h(y)");
    transform->set_help_flag("--help", "Print this help message and exit");
    transform->add_option("--n", o.n)->required()->check(positive);
    transform->add_option("--h", o.h)->required()->check(non_negative);
    transform->add_option("--u-order", o.config.u_order)->check(positive);
    transform->add_option("--divisibility", o.divisibility, "Divisibility of the curve class (beta_h has 1)")
        ->check(positive);

    auto *verify = app.add_subcommand("verify", "consistency checks (exit 1 on failure)");
    verify->require_subcommand(1);
    auto *gottsche = verify->add_subcommand("gottsche", "enumeration counts vs prod (1-q^m)^{-b}");
    gottsche->add_option("--nmax", o.n_max)->required()->check(non_negative);
    gottsche->add_option("--basis", o.config.basis_size)->check(positive);
    auto *thm2 = verify->add_subcommand("thm2", "reassembled Sym series vs direct substitution of K_n / n");
    thm2->add_option("--n", o.n)->required()->check(positive);
    thm2->add_option("--order", o.config.q_order)->check(positive);
    thm2->add_option("--sign", sign_name)->check(sign_names)->option_text("paper|age-literal");
    thm2->add_option("--u-order", o.config.u_order)->check(positive);
    thm2->add_option("--corrupt", o.corrupt_location, "Add 1 at H:E before comparing")->group("");
    auto *yau = verify->add_subcommand("yau-zaslow", "n = 1 table vs the divisor-sum expansion of 1/Delta");
    yau->add_option("--hmax", o.h_max)->required()->check(non_negative);
    auto *pade = verify->add_subcommand("pade-roundtrip", "random rational functions through Padé reconstruction");
    pade->add_option("--count", o.pade_count)->check(non_negative);
    pade->add_option("--seed", o.pade_seed);
    pade->add_option("--max-degree", o.pade_max_degree)->check(non_negative);
    pade->add_option("--terms", o.pade_terms)->check(positive);
    for (auto *sub : {gottsche, yau, pade})
        sub->add_option("--corrupt", o.corrupt_index, "Inject a failure at this index")->group("");

    for (auto *sub : {expand, delta, theta, kernel, partitions, invariants, hilb, sym, transform, verify, gottsche,
                      thm2, yau, pade})
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    o.config.output = formats.at(output_name);
    o.config.sign_convention = parse_sign_convention(sign_name);

    std::ostringstream buffer;
    int code = exit_ok;
    try {
        if (!o.golden_dir.empty() && o.config.output != OutputFormat::json)
            throw UsageError("--golden requires JSON output");
        if (expand->parsed()) {
            check_cap("--order", o.config.q_order);
            code = cmd_expand(delta->parsed() ? "delta" : theta->parsed() ? "theta" : "kernel", o, buffer);
        } else if (partitions->parsed()) {
            code = cmd_partitions(o, buffer);
        } else if (hilb->parsed()) {
            check_cap("--hmax", o.h_max);
            code = cmd_invariants_hilb(o, buffer);
        } else if (sym->parsed()) {
            check_cap("--hmax", o.h_max);
            check_cap("--u-order", o.config.u_order);
            code = cmd_invariants_sym(o, buffer);
        } else if (transform->parsed()) {
            check_cap("--u-order", o.config.u_order);
            code = cmd_transform(o, buffer);
        } else if (gottsche->parsed()) {
            check_cap("--nmax", o.n_max);
            code = cmd_verify_gottsche(o, buffer);
        } else if (thm2->parsed()) {
            check_cap("--order", o.config.q_order);
            check_cap("--u-order", o.config.u_order);
            code = cmd_verify_thm2(o, buffer);
        } else if (yau->parsed()) {
            check_cap("--hmax", o.h_max);
            code = cmd_verify_yau_zaslow(o, buffer);
        } else if (pade->parsed()) {
            code = cmd_verify_pade(o, buffer);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_mismatch;
    }

    out << buffer.str();
    if (!o.golden_dir.empty()) {
        const int g = golden(o.golden_dir, golden_name(args), buffer.str(), err);
        if (g != exit_ok)
            return g;
    }
    return code;
}

} // namespace k3crc::cli
