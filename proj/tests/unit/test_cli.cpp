#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fockqo/errors.hpp"
#include "fockqo_cli/commands.hpp"
#include "fockqo_cli/format.hpp"
#include "fockqo_cli/sweep.hpp"
#include "json.hpp"

using namespace fockqo;
using namespace fockqo::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "fockqo");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct Csv {
    nlohmann::json meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) {
            csv.meta = nlohmann::json::parse(line.substr(2));
        } else if (csv.header.empty()) {
            csv.header = split(line);
        } else {
            csv.rows.push_back(split(line));
        }
    }
    return csv;
}

SweepSpec ngbs_p_sweep() {
    SweepSpec spec;
    spec.family = Family::ngbs;
    spec.fixed_params = {{"M", 10}, {"q", -0.005}};
    spec.sweep = {"p", 0.1, 0.9, 9};
    spec.witnesses = {{Criterion::antibunching, 2}, {Criterion::agarwal_tara, 2}};
    return spec;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("fockqo_test_" + name);
}

} // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(-2.5e-20) == "-2.5e-20");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-INFINITY) == "-inf");
    CHECK(round12(1.0 / 3.0) == 0.333333333333);
    CHECK(csv_field("hoa") == "hoa");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("witness arguments") {
    auto w = parse_witness("hong_mandel:4");
    REQUIRE(w.size() == 1);
    CHECK(w[0] == WitnessSpec{Criterion::hong_mandel, 4});
    CHECK(parse_witness("all") == default_witnesses());
    CHECK_THROWS_AS(parse_witness("hoa"), ParameterError);
    CHECK_THROWS_AS(parse_witness("hoa:x"), ParameterError);
    CHECK_THROWS_AS(parse_witness("hoa:0"), ParameterError);
    CHECK_THROWS_AS(parse_witness("hong_mandel:3"), ParameterError);
    CHECK_THROWS_AS(parse_witness("vogel:2"), ParameterError);
    CHECK_THROWS_AS(parse_witness("squeezing:2"), ParameterError);
}

TEST_CASE("SweepSpec validation") {
    auto spec = ngbs_p_sweep();
    CHECK_NOTHROW(spec.validate());

    auto fixed_too = spec;
    fixed_too.fixed_params["p"] = 0.5;
    CHECK_THROWS_AS(fixed_too.validate(), ParameterError);

    auto wrong_name = spec;
    wrong_name.sweep.name = "alpha";
    CHECK_THROWS_AS(wrong_name.validate(), ParameterError);

    auto reversed = spec;
    std::swap(reversed.sweep.start, reversed.sweep.stop);
    CHECK_THROWS_AS(reversed.validate(), ParameterError);

    auto single = spec;
    single.sweep.count = 1;
    CHECK_THROWS_AS(single.validate(), ParameterError);

    auto missing = spec;
    missing.fixed_params.erase("q");
    CHECK_THROWS_AS(missing.validate(), ParameterError);

    auto extra = spec;
    extra.fixed_params["alpha"] = 1.0;
    CHECK_THROWS_AS(extra.validate(), ParameterError);
}

TEST_CASE("SweepSpec round-trips through the output metadata") {
    auto spec = ngbs_p_sweep();
    spec.output_path = "out.csv";
    CHECK(sweep_spec_from_json(to_json(spec)) == spec);

    std::stringstream out;
    run_sweep(spec, 2, out);
    CHECK(read_sweep_metadata(out) == spec);
}

TEST_CASE("sweep rows") {
    std::stringstream out;
    run_sweep(ngbs_p_sweep(), 3, out);
    auto csv = parse_csv(out.str());
    CHECK(csv.header ==
          std::vector<std::string>{"sweep_value", "criterion", "order", "value", "nonclassical", "status"});
    REQUIRE(csv.rows.size() == 18);
    CHECK(csv.rows[0][0] == "0.1");
    CHECK(csv.rows[0][1] == "hoa");
    CHECK(csv.rows[1][1] == "agarwal_tara");
    CHECK(csv.rows[17][0] == "0.9");
    for (const auto& row : csv.rows) CHECK(row[5] == "ok");
}

TEST_CASE("invalid sweep points are tagged") {
    SweepSpec spec;
    spec.family = Family::ngbs;
    spec.fixed_params = {{"M", 10}, {"p", 0.5}};
    spec.sweep = {"q", -0.1, 0.1, 5};
    spec.witnesses = {{Criterion::antibunching, 1}};
    std::stringstream out;
    run_sweep(spec, 1, out);
    auto csv = parse_csv(out.str());
    REQUIRE(csv.rows.size() == 5);
    CHECK(csv.rows[0][5] == "invalid-params");
    CHECK(csv.rows[0][3] == "nan");
    CHECK(csv.rows[0][4] == "false");
    CHECK(csv.rows[1][5] == "ok");  // q = -0.05 is the bound itself
    CHECK(csv.rows[4][5] == "ok");
}

TEST_CASE("Fock sweep over n") {
    auto r = invoke({"sweep", "--family", "fock", "--sweep", "n", "--from", "1", "--to", "5",
                  "--count", "5", "--witness", "hoa:1", "--workers", "2"});
    REQUIRE(r.code == 0);
    auto csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(std::stod(csv.rows[i][3]) == doctest::Approx(-(i + 1)));
        CHECK(csv.rows[i][4] == "true");
    }
}

TEST_CASE("coherent sweep hits every classical boundary") {
    auto r = invoke({"sweep", "--family", "coherent", "--sweep", "alpha", "--from", "0.5", "--to", "1",
                  "--count", "2", "--witness", "all"});
    REQUIRE(r.code == 0);
    auto csv = parse_csv(r.out);
    CHECK(csv.rows.size() == 2 * default_witnesses().size());
    for (const auto& row : csv.rows) {
        CHECK(row[5] == "ok");
        CHECK(std::abs(std::stod(row[3])) < 1e-6);
    }
}

TEST_CASE("sweep output does not depend on workers") {
    const std::vector<std::string> base{"sweep", "--M", "10", "--q", "-0.005", "--sweep", "p",
                                        "--from", "0.05", "--to", "0.95", "--count", "37",
                                        "--witness", "all"};
    auto with_workers = [&](const char* w) {
        auto args = base;
        args.push_back("--workers");
        args.push_back(w);
        return invoke(args);
    };
    auto one = with_workers("1");
    auto eight = with_workers("8");
    REQUIRE(one.code == 0);
    CHECK(one.out == eight.out);
    CHECK(one.out == with_workers("1").out);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"sweep", "--M", "10", "--q", "0", "--sweep", "p", "--from", "0.9", "--to", "0.1"}).code ==
          exit_parameter);
    CHECK(invoke({"state", "--M", "10", "--p", "0.5", "--q", "-1"}).code == exit_parameter);
    CHECK(invoke({"state", "--family", "squeezed", "--n", "1"}).code == exit_parameter);
    CHECK(invoke({"state", "--family", "fock", "--n", "1.5"}).code == exit_parameter);
    CHECK(invoke({}).code == exit_parameter);
    CHECK(invoke({"state", "--family", "fock", "--n", "2", "--out", "/nonexistent-dir/x.csv"}).code == exit_io);
    CHECK(invoke({"state", "--config", "/nonexistent-dir/cfg.ini"}).code == exit_io);

    auto r = invoke({"volume", "--family", "fock", "--n", "1", "--tolerance", "1e-300"});
    CHECK(r.code == exit_convergence);
    auto report = nlohmann::json::parse(r.out);
    CHECK(report["status"] == "not-converged");
    CHECK(report["history"]["delta"].size() == 13);
}

TEST_CASE("grid output") {
    auto r = invoke({"grid", "--family", "fock", "--n", "0", "--grid-window", "3", "--resolution", "61"});
    REQUIRE(r.code == 0);
    auto csv = parse_csv(r.out);
    CHECK(csv.header == std::vector<std::string>{"x", "p", "value"});
    REQUIRE(csv.rows.size() == 61 * 61);
    CHECK(csv.meta["kind"] == "wigner");
    CHECK(csv.meta["window"]["x"]["hi"] == 3.0);
    CHECK(std::abs(csv.meta["normalization"]["integral"].get<double>() - 1.0) < 1e-3);
    double peak = 0;
    for (const auto& row : csv.rows) {
        const double v = std::stod(row[2]);
        CHECK(v > 0);
        peak = std::max(peak, v);
    }
    CHECK(peak == doctest::Approx(1 / std::numbers::pi).epsilon(1e-11));

    auto t = invoke({"grid", "--kind", "tomogram", "--M", "25", "--p", "0.6", "--q", "0.5",
                  "--resolution", "81", "--angles", "8"});
    REQUIRE(t.code == 0);
    auto tomo = parse_csv(t.out);
    CHECK(tomo.header == std::vector<std::string>{"X", "theta", "value"});
    CHECK(tomo.rows.size() == 81 * 8);
    CHECK(tomo.meta["window"]["theta"]["count"] == 8);
}

TEST_CASE("volume and state output") {
    auto r = invoke({"volume", "--family", "fock", "--n", "1"});
    REQUIRE(r.code == 0);
    auto report = nlohmann::json::parse(r.out);
    CHECK(report["status"] == "converged");
    CHECK(report["delta"].get<double>() == doctest::Approx(4 * std::exp(-0.5) - 2).epsilon(1e-5));
    CHECK(report["history"].size() >= 2);

    auto vac = nlohmann::json::parse(invoke({"volume", "--family", "fock", "--n", "0"}).out);
    CHECK(std::abs(vac["delta"].get<double>()) < 1e-6);

    auto s = invoke({"state", "--family", "binomial", "--M", "2", "--p", "0.5"});
    REQUIRE(s.code == 0);
    auto csv = parse_csv(s.out);
    REQUIRE(csv.rows.size() == 3);
    CHECK(std::stod(csv.rows[1][3]) == doctest::Approx(0.5));
    CHECK(csv.meta["state"]["family"] == "binomial");
}

TEST_CASE("config file and output file") {
    const auto cfg = temp_path("sweep.ini");
    const auto out = temp_path("sweep.csv");
    {
        std::ofstream f(cfg);
        f << "family = ngbs\nM = 10\nq = -0.02\nsweep = p\nfrom = 0.2\nto = 0.8\ncount = 4\n"
             "witness = [\"hoa:1\", \"hoa:2\"]\n";
    }
    auto r = invoke({"sweep", "--config", cfg.string(), "--out", out.string(), "--workers", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    const auto spec = read_sweep_metadata(in);
    CHECK(spec.fixed_params == ParamMap{{"M", 10}, {"q", -0.02}});
    CHECK(spec.sweep == SweepRange{"p", 0.2, 0.8, 4});
    CHECK(spec.witnesses.size() == 2);
    CHECK(spec.output_path == out.string());

    auto overridden = invoke({"sweep", "--config", cfg.string(), "--q", "0.1", "--count", "2"});
    REQUIRE(overridden.code == 0);
    CHECK(parse_csv(overridden.out).rows.size() == 4);
    std::filesystem::remove(cfg);
    std::filesystem::remove(out);
}
