#include <k3crc/cli.hpp>
#include <k3crc/serialization.hpp>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using k3crc::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = k3crc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json json_of(const Result &r)
{
    return Json::parse(r.out);
}

class ScopedEnv {
public:
    ScopedEnv(const char *name, const char *value) : name_(name) { ::setenv(name, value, 1); }
    ~ScopedEnv() { ::unsetenv(name_); }

private:
    const char *name_;
};

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("expand delta")
    {
        const auto r = call({"expand", "delta", "--order", "6"});
        REQUIRE(r.code == 0);
        const auto s = k3crc::q_series_from_json(json_of(r));
        const long expected[] = {1, -24, 252, -1472, 4830};
        for (int e = 1; e <= 5; ++e)
            CHECK(s.coefficient(e) == k3crc::HalfLaurent(k3crc::GaussianRational(expected[e - 1])));
        CHECK(s.trunc() == 6);
    }

    TEST_CASE("expand kernel in csv")
    {
        const auto r = call({"--output", "csv", "expand", "kernel", "--n", "2", "--order", "1"});
        REQUIRE(r.code == 0);
        CHECK(r.out == "q_exp,s_exp,re,im\n-1,-2,1,0\n-1,0,2,0\n-1,2,1,0\n0,-4,2,0\n0,-2,32,0\n0,0,60,0\n0,2,32,0\n0,4,2,0\n");
    }

    TEST_CASE("output flag is accepted after the subcommand")
    {
        const auto a = call({"--output", "pretty", "expand", "theta", "--order", "3"});
        const auto b = call({"expand", "theta", "--order", "3", "--output", "pretty"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.rfind("q^0: y^-1/2 + y^1/2", 0) == 0);
    }

    TEST_CASE("invariants hilb")
    {
        const auto r = call({"invariants", "hilb", "--n", "1", "--hmax", "4"});
        REQUIRE(r.code == 0);
        const auto j = json_of(r);
        std::vector<std::string> values;
        for (const auto &e : j["entries"]) {
            CHECK(e["k"] == 0);
            values.push_back(e["value"]["re"].get<std::string>());
        }
        CHECK(values == std::vector<std::string>{"1", "24", "324", "3200", "25650"});

        const auto three = call({"--output", "csv", "invariants", "hilb", "--n", "2", "--hmax", "0", "--three-point"});
        CHECK(three.out == "n,h,k,value_re,value_im\n2,0,-1,1/2,0\n2,0,0,1,0\n2,0,1,1/2,0\n");
    }

    TEST_CASE("invariants sym and transform")
    {
        const auto r = call({"invariants", "sym", "--n", "2", "--hmax", "0", "--sign", "age-literal", "--u-order", "6"});
        REQUIRE(r.code == 0);
        const auto j = json_of(r);
        CHECK(j["sign"] == "age-literal");
        CHECK(j["entries"][0]["sym_h"] == 4);
        CHECK(j["entries"][0]["value"]["re"] == "1/2");

        const auto t = call({"transform", "--n", "1", "--h", "1", "--u-order", "4"});
        REQUIRE(t.code == 0);
        const auto u = k3crc::u_series_from_json(json_of(t));
        CHECK(u.coefficient(0) == k3crc::GaussianRational(24));
        CHECK_FALSE(json_of(t).contains("note"));
        const auto far = call({"transform", "--n", "1", "--h", "1", "--u-order", "4", "--divisibility", "3"});
        CHECK(json_of(far)["note"] == "outside proven range");
    }

    TEST_CASE("partitions")
    {
        const auto r = call({"partitions", "--n", "2", "--basis", "24", "--count-only"});
        REQUIRE(r.code == 0);
        CHECK(json_of(r)["count"] == 324);
        const auto full = call({"partitions", "--n", "2", "--basis", "2"});
        const auto j = json_of(full);
        CHECK(j["count"] == 5);
        CHECK(j["partitions"][0]["pairs"][0]["part"] == 2);
        CHECK(j["partitions"][0]["pairs"][0]["class"] == "unit");
        CHECK(j["partitions"][0]["age"] == 1);
        CHECK(j["partitions"][4]["age"] == 0);
    }

    TEST_CASE("verify commands pass")
    {
        const auto g = call({"verify", "gottsche", "--nmax", "3"});
        CHECK(g.code == 0);
        const auto report = json_of(g);
        std::vector<int> counts;
        for (const auto &e : report["entries"])
            counts.push_back(e["enumerated"].get<int>());
        CHECK(counts == std::vector<int>{1, 24, 324, 3200});

        const auto t = call({"verify", "thm2", "--n", "1", "--order", "4", "--sign", "paper"});
        CHECK(t.code == 0);
        CHECK(json_of(t)["ok"] == true);
        CHECK(json_of(t)["mismatch"].is_null());

        CHECK(call({"verify", "yau-zaslow", "--hmax", "6"}).code == 0);
        CHECK(call({"verify", "pade-roundtrip", "--count", "20", "--max-degree", "4", "--terms", "12"}).code == 0);
    }

    TEST_CASE("verify commands fail on injected corruption")
    {
        const auto g = call({"verify", "gottsche", "--nmax", "3", "--corrupt", "2"});
        CHECK(g.code == 1);
        CHECK(json_of(g)["first_mismatch"] == 2);

        const auto t = call({"verify", "thm2", "--n", "2", "--order", "4", "--corrupt", "3:2"});
        CHECK(t.code == 1);
        const auto m = json_of(t)["mismatch"];
        CHECK(m["h"] == 3);
        CHECK(m["u_power"] == 2);

        const auto y = call({"verify", "yau-zaslow", "--hmax", "6", "--corrupt", "4"});
        CHECK(y.code == 1);
        CHECK(json_of(y)["first_mismatch"] == 4);

        const auto p = call({"verify", "pade-roundtrip", "--count", "10", "--max-degree", "3", "--terms", "10",
                             "--corrupt", "6"});
        CHECK(p.code == 1);
        CHECK(json_of(p)["first_failure"] == 6);
    }

    TEST_CASE("usage errors exit 2 and name the flag")
    {
        auto r = call({});
        CHECK(r.code == 2);
        r = call({"expand", "kernel", "--order", "3"});
        CHECK(r.code == 2);
        CHECK(r.err.find("--n") != std::string::npos);
        r = call({"verify", "thm2", "--n", "1", "--sign", "sideways"});
        CHECK(r.code == 2);
        CHECK(r.err.find("--sign") != std::string::npos);
        r = call({"--output", "xml", "expand", "delta"});
        CHECK(r.code == 2);
        CHECK(r.err.find("--output") != std::string::npos);
        r = call({"expand", "delta", "--order", "0"});
        CHECK(r.code == 2);
        CHECK(r.err.find("--order") != std::string::npos);
        r = call({"verify", "thm2", "--n", "1", "--corrupt", "nonsense"});
        CHECK(r.code == 2);
        CHECK(r.err.find("--corrupt") != std::string::npos);
        CHECK(call({"expand", "delta", "--order", "abc"}).code == 2);
        CHECK(call({"partitions", "--n", "-1"}).code == 2);
        CHECK(call({"verify", "pade-roundtrip", "--max-degree", "8", "--terms", "10"}).code == 2);
    }

    TEST_CASE("help exits 0")
    {
        const auto r = call({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("verify") != std::string::npos);
        CHECK(call({"transform", "--help"}).code == 0);
    }

    TEST_CASE("order cap from the environment")
    {
        ScopedEnv cap("K3CRC_MAX_ORDER", "5");
        auto r = call({"expand", "delta", "--order", "6"});
        CHECK(r.code == 2);
        CHECK(r.err.find("--order") != std::string::npos);
        CHECK(call({"expand", "delta", "--order", "5"}).code == 0);
        r = call({"invariants", "hilb", "--n", "1", "--hmax", "9"});
        CHECK(r.code == 2);
        CHECK(r.err.find("--hmax") != std::string::npos);
        r = call({"transform", "--n", "1", "--h", "0", "--u-order", "8"});
        CHECK(r.err.find("--u-order") != std::string::npos);
    }

    TEST_CASE("output is byte-deterministic")
    {
        for (const std::vector<std::string> args :
             {std::vector<std::string>{"expand", "kernel", "--n", "3", "--order", "3"},
              std::vector<std::string>{"invariants", "sym", "--n", "2", "--hmax", "2"},
              std::vector<std::string>{"verify", "thm2", "--n", "2", "--order", "3"}}) {
            const auto a = call(args), b = call(args);
            CHECK(a.out == b.out);
            CHECK(a.code == b.code);
        }
    }

    TEST_CASE("golden files")
    {
        const auto dir = std::filesystem::temp_directory_path() / "k3crc-golden-test";
        std::filesystem::remove_all(dir);
        const std::vector<std::string> args{"--golden", dir.string(), "expand", "delta", "--order", "4"};
        const auto first = call(args);
        CHECK(first.code == 0);
        const auto file = dir / "expand_delta_order_4.json";
        REQUIRE(std::filesystem::exists(file));
        CHECK(call(args).code == 0);
        std::ofstream(file, std::ios::app) << " ";
        const auto stale = call(args);
        CHECK(stale.code == 1);
        CHECK(stale.err.find("golden mismatch") != std::string::npos);
        CHECK(call({"--golden", dir.string(), "--output", "csv", "expand", "delta"}).code == 2);
        std::filesystem::remove_all(dir);
    }
}
