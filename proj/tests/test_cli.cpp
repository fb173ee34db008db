#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <json.hpp>

#include <pyramid/cli.hpp>
#include <pyramid/errors.hpp>
#include <pyramid/io.hpp>

#include "gen.hpp"

using namespace pyramid;

namespace
{

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args, const std::string &stdin_text = {})
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

} // namespace

TEST(Cli, Reduce)
{
    EXPECT_EQ(run({"reduce", "q p^2 q"}).out, "z^2 + 1/4\n");
    EXPECT_EQ(run({"reduce", "q p^2 q", "--method", "interpolation"}).out, "z^2 + 1/4\n");
    EXPECT_EQ(run({"reduce", "q p", "--json"}).out, "{\"coeffs\":[\"1/2 i\",\"1\"]}\n");
}

TEST(Cli, NormalOrder)
{
    EXPECT_EQ(run({"normal-order", "q p^2 q"}).out, "q^2 p^2 - 2 i q p\n");
    EXPECT_EQ(run({"normal-order", "p q"}).out, "q p - 1 i\n");
    EXPECT_EQ(run({"normal-order", "D R", "--alphabet", "a1"}).out, "R D - 1\n");
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({}).code, cli::usage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::usage);
    EXPECT_EQ(run({"reduce", "q p", "--bogus"}).code, cli::usage);
    const CliRun bad = run({"reduce", "q p + x"});
    EXPECT_EQ(bad.code, cli::parse_error);
    EXPECT_NE(bad.err.find("position 6"), std::string::npos) << bad.err;
    EXPECT_EQ(run({"reduce", "q p^2"}).code, cli::precondition);
    EXPECT_EQ(run({"poly2pyramid", "--n", "1"}, "{\"coeffs\":[\"0\",\"0\",\"1\"]}").code, cli::precondition);
    EXPECT_EQ(run({"pyramid2poly"}, "{\"entries\": [1/2]}").code, cli::parse_error);
    EXPECT_EQ(run({"family", "nope", "--n", "2"}).code, cli::usage);
    EXPECT_EQ(run({"--help"}).code, cli::ok);
}

TEST(Cli, Family)
{
    const CliRun r = run({"family", "weyl", "--n", "2", "--json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["entries"], nlohmann::json({"1/4", "1/2", "1/4"}));
    EXPECT_EQ(j["coeffs"], nlohmann::json({"-1/4", "0", "1"}));
    EXPECT_EQ(j["n"], 2);

    EXPECT_EQ(run({"family", "legendre", "--n", "2", "--integerize", "--csv"}).out, "7,10,7\n");
    EXPECT_EQ(run({"family", "hermite", "--n", "2", "--csv", "--triangle", "--integerize"}).out, "1\n1,1\n3,2,3\n");
    EXPECT_EQ(run({"family", "born-jordan", "--n", "2", "--csv"}).out, "1/3,1/3,1/3\n");
    EXPECT_EQ(run({"family", "binom-pow", "--r", "2", "--n", "2", "--csv"}).out, "1/6,2/3,1/6\n");
    const CliRun text = run({"family", "weyl", "--n", "2"});
    EXPECT_NE(text.out.find("P_2(z) = z^2 - 1/4"), std::string::npos);
    EXPECT_EQ(run({"family", "weyl", "--n", "2", "--json", "--csv"}).code, cli::usage);
}

TEST(Cli, Eulerian)
{
    EXPECT_EQ(run({"eulerian", "--n", "3"}).out, "{\"n\":3,\"entries\":[\"1\",\"23\",\"23\",\"1\"]}\n");
    EXPECT_EQ(run({"eulerian", "--n", "8", "--check", "all"}).code, 0);
    const auto j = nlohmann::json::parse(run({"eulerian", "--n", "4", "--check", "euler"}).out);
    ASSERT_EQ(j.size(), 5u);
    EXPECT_EQ(j[0]["identity"], "euler-sum");
    EXPECT_EQ(j[0]["status"], "pass");
    EXPECT_TRUE(j[0]["m"].is_null());
}

TEST(Cli, ReportsAndScreens)
{
    EXPECT_EQ(run({"outer-diagonal", "chebyshev-t", "--max-n", "20"}).code, 0);
    EXPECT_EQ(run({"outer-diagonal", "monomial", "--max-n", "3"}).code, cli::usage);
    const CliRun ids = run({"identities", "--max-n", "4", "--max-m", "4"});
    EXPECT_EQ(ids.code, 0);
    for (const auto &e : nlohmann::json::parse(ids.out)) {
        EXPECT_TRUE(e.contains("identity") && e.contains("n") && e.contains("m") && e.contains("status"));
    }
    const auto scan = nlohmann::json::parse(run({"screen", "--family", "binom-pow", "--max-r", "5"}).out);
    ASSERT_EQ(scan.size(), 5u);
    EXPECT_EQ(scan[1]["status"], "pass");
    EXPECT_EQ(scan[2]["status"], "fail");
    const auto weyl = nlohmann::json::parse(run({"screen", "--family", "weyl"}).out);
    for (const auto &e : weyl) {
        EXPECT_EQ(e["status"], "pass");
    }
    const auto sym = nlohmann::json::parse(run({"screen", "--family", "symmetric"}).out);
    EXPECT_EQ(sym[0]["status"], "fail");
    EXPECT_EQ(run({"palindromes", "--max-len", "8"}).code, 0);
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"identities", "--max-n", "3", "--max-m", "3"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, FileRoundTripIsByteExact)
{
    const auto dir = std::filesystem::temp_directory_path() / ("pyramid-cli-" + std::to_string(testgen::seed()));
    std::filesystem::create_directories(dir);
    testgen::Gen gen(50);
    for (int t = 0; t < 25; ++t) {
        const long n = gen.integer(0, 8);
        std::vector<GaussRat> c;
        for (long k = 0, d = gen.integer(0, n); k <= d; ++k) {
            c.push_back(gen.gauss());
        }
        const auto poly_file = dir / "p.json";
        const auto row_file = dir / "a.json";
        {
            std::ofstream(poly_file, std::ios::binary) << poly_to_json(Poly(c));
        }
        const CliRun a = run({"poly2pyramid", poly_file.string(), "--n", std::to_string(n)});
        ASSERT_EQ(a.code, 0) << a.err;
        {
            std::ofstream(row_file, std::ios::binary) << a.out;
        }
        const CliRun b = run({"pyramid2poly", row_file.string()});
        ASSERT_EQ(b.code, 0) << b.err;
        EXPECT_EQ(b.out, slurp(poly_file));

        // and the other way round, through stdin
        const CliRun back = run({"poly2pyramid", "-", "--n", std::to_string(n)}, b.out);
        EXPECT_EQ(back.out, a.out);
    }
    std::filesystem::remove_all(dir);
}

TEST(Io, JsonForms)
{
    const PyramidRow r(std::vector<GaussRat>{GaussRat(BigRat(1, 4)), GaussRat(BigRat(1, 2)), GaussRat(BigRat(1, 4))});
    EXPECT_EQ(pyramid_to_json(r), "{\"n\":2,\"entries\":[\"1/4\",\"1/2\",\"1/4\"]}\n");
    EXPECT_EQ(pyramid_from_json("{\"n\": 2, \"entries\": [\"1/4\",\"1/2\",\"1/4\"]}"), r);
    EXPECT_EQ(pyramid_from_json("{\"entries\": [1]}"), PyramidRow());
    EXPECT_THROW(pyramid_from_json("{\"n\": 3, \"entries\": [\"1\"]}"), ParseError);
    EXPECT_THROW(pyramid_from_json("{\"entries\": []}"), ParseError);
    EXPECT_THROW(pyramid_from_json("[1,2"), ParseError);
    EXPECT_EQ(poly_from_json("{\"coeffs\": [\"-1/4\", \"0\", \"1\"]}").to_string(), "z^2 - 1/4");
    EXPECT_EQ(rows_to_csv(std::vector<PyramidRow>{r, PyramidRow()}), "1/4,1/2,1/4\n1\n");
}
