#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "springer/cli.hpp"
#include "springer/json_io.hpp"

using namespace springer;

namespace {

struct CliOut {
    int code;
    std::string out;
    std::string err;
};

CliOut run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("weyl length matches the documented example") {
    auto r = run_cli({"weyl", "length", "--datum", "SL2", "--element",
                      R"({"lambda":[1],"word":[]})"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("length") == 2);
}

TEST_CASE("hecke mul emits the quadratic relation") {
    std::string ts = R"({"datum":"SL2","terms":[{"lambda":[0],"word":[1],)"
                     R"("coeff":{"vars":[],"terms":[{"exp":[],"num":"1","den":"1"}]}}]})";
    auto r = run_cli({"hecke", "mul", "--datum", "SL2", "--a", ts, "--b", ts});
    CHECK(r.code == 0);
    HeckeElement h = io::hecke_from_json(nlohmann::json::parse(r.out));
    const RootDatum* sl2 = RootDatum::preset("SL2");
    HeckeElement Ts = HeckeElement::basis(ExtAffineElement::affine_simple(sl2, 1));
    CHECK(h == (HeckeElement::q() - MultiLaurent::one()) * Ts +
                   HeckeElement::q() * HeckeElement::unit(sl2));
}

TEST_CASE("steinberg verify-sl2 reports a passing table") {
    auto r = run_cli({"steinberg", "verify-sl2"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("all_pass") == true);
    bool quadratic_seen = false;
    for (const auto& c : j.at("checks"))
        if (c.at("name") == "quadratic") {
            quadratic_seen = true;
            CHECK(c.at("pass") == true);
        }
    CHECK(quadratic_seen);
}

TEST_CASE("exit codes: usage = 2, domain error = 1") {
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"weyl", "length", "--bogus-flag", "1"}).code == 2);
    CHECK(run_cli({"hecke", "center", "--datum", "SL2", "--lambda=-1"}).code == 1);
    // malformed element JSON
    CHECK(run_cli({"weyl", "length", "--datum", "SL2", "--element", "{oops"}).code == 1);
}

TEST_CASE("json round-trips") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> exp(-4, 4);
    // MultiLaurent round-trip under its documented encoding.
    for (int i = 0; i < 20; ++i) {
        MultiLaurent f;
        for (int t = 0; t < 4; ++t)
            f += MultiLaurent::term({"t", "v"}, {exp(rng), exp(rng)},
                                    rational(coeff(rng), 1 + std::abs(coeff(rng))));
        CHECK(io::laurent_from_json(io::to_json(f)) == f);
    }
    // Hecke element round-trip.
    const RootDatum* gl2 = RootDatum::preset("GL2");
    std::uniform_int_distribution<int> tr(-2, 2);
    for (int i = 0; i < 10; ++i) {
        IntVector lambda(2);
        lambda << tr(rng), tr(rng);
        HeckeElement h = theta(gl2, lambda).expansion;
        CHECK(io::hecke_from_json(io::to_json(h)) == h);
    }
    // Subcommand output re-parses to an equal value.
    auto r = run_cli({"hecke", "theta", "--datum", "GL2", "--lambda", "1", "--lambda", "0"});
    CHECK(r.code == 0);
    HeckeElement h = io::hecke_from_json(nlohmann::json::parse(r.out));
    IntVector l10(2);
    l10 << 1, 0;
    CHECK(h == theta(gl2, l10).expansion);
}

TEST_CASE("params and blocks subcommands") {
    auto r = run_cli({"params", "enumerate", "--group", "GLn", "--n", "2", "--orbits", "1"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("count") == 2);

    auto t = run_cli({"params", "sl2-table", "--lambda", "1", "--q", "1"});
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out).at("rows").size() == 2);

    // root-of-unity q is a domain error
    CHECK(run_cli({"params", "enumerate", "--group", "GLn", "--n", "2", "--orbits", "1",
                   "--q", "1"})
              .code == 1);
}

TEST_CASE("--json supplies inputs from a file") {
    // write a temp payload holding both operands
    std::string path = "cli_json_input_test.json";
    {
        std::ofstream f(path);
        f << R"({"a":{"datum":"SL2","terms":[{"lambda":[0],"word":[1],)"
          << R"("coeff":{"vars":[],"terms":[{"exp":[],"num":"1","den":"1"}]}}]},)"
          << R"("b":{"datum":"SL2","terms":[{"lambda":[0],"word":[1],)"
          << R"("coeff":{"vars":[],"terms":[{"exp":[],"num":"1","den":"1"}]}}]}})";
    }
    auto r = run_cli({"hecke", "mul", "--json", path});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    HeckeElement h = io::hecke_from_json(nlohmann::json::parse(r.out));
    const RootDatum* sl2 = RootDatum::preset("SL2");
    HeckeElement Ts = HeckeElement::basis(ExtAffineElement::affine_simple(sl2, 1));
    CHECK(h == (HeckeElement::q() - MultiLaurent::one()) * Ts +
                   HeckeElement::q() * HeckeElement::unit(sl2));
}
