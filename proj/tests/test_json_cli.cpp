#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "leecodes/cli.hpp"
#include "leecodes/constructions.hpp"
#include "leecodes/json_io.hpp"

using namespace leecodes;

namespace {

// Run the CLI in-process with captured stdout.
struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"leecode"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream captured;
    auto* old = std::cout.rdbuf(captured.rdbuf());
    int code = cli::run(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

struct TempJson {
    std::string path;
    TempJson(const std::string& name, const Json& j) : path(name) {
        std::ofstream out(path);
        out << j.dump();
    }
    ~TempJson() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("code json round trip is byte stable") {
    auto code = lee_single_error_code(2);
    auto j = code_to_json(code);
    auto text = canonical_dump(j);
    auto parsed = code_from_json(Json::parse(text));
    CHECK(parsed == code);
    CHECK(canonical_dump(code_to_json(parsed)) == text);

    // Codewords appear in lexicographic order.
    auto words = j.at("codewords");
    for (std::size_t i = 1; i < words.size(); ++i)
        CHECK(words[i - 1].get<CoordVec>() < words[i].get<CoordVec>());
}

TEST_CASE("lattice json round trip") {
    auto lattice = diameter4_lattice(5);
    auto text = canonical_dump(lattice_to_json(lattice));
    auto parsed = lattice_from_json(Json::parse(text));
    CHECK(parsed == lattice);
    CHECK(canonical_dump(lattice_to_json(parsed)) == text);
}

TEST_CASE("permutation json round trip") {
    PermutationPlan pi({1, 3, 2, 4});
    auto text = canonical_dump(permutation_to_json(pi));
    auto parsed = permutation_from_json(Json::parse(text));
    CHECK(parsed == pi);
    CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"size":2,"map":[2,1]})")),
                    std::invalid_argument);
}

TEST_CASE("cli construct prints the 6-D distance-4 generator") {
    auto result = run_cli({"construct", "--kind", "diameter4", "--n", "6"});
    CHECK(result.exit_code == 0);
    auto j = Json::parse(result.out);
    CHECK(j == lattice_to_json(diameter4_lattice(6)));
}

TEST_CASE("cli verify pipeline") {
    auto code = lee_single_error_code(2);
    TempJson file("cli_test_code.json", code_to_json(code));
    auto result = run_cli({"verify", "--input", file.path.c_str(), "--radius", "1"});
    CHECK(result.exit_code == 0);
    auto cert = Json::parse(result.out);
    CHECK(cert.at("pass").get<bool>());
    CHECK(cert.at("mode") == "exhaustive");

    // Dropping a codeword fails verification with exit code 1.
    auto words = code.words();
    words.pop_back();
    TempJson broken("cli_test_broken.json", code_to_json(ModularCode(2, 5, Metric::Lee, words)));
    auto bad = run_cli({"verify", "--input", broken.path.c_str(), "--radius", "1"});
    CHECK(bad.exit_code == 1);
}

TEST_CASE("cli verify lattice input and diameter perfection") {
    TempJson file("cli_test_lattice.json", lattice_to_json(diameter4_lattice(6)));
    auto result = run_cli({"verify", "--input", file.path.c_str(), "--even-distance", "4"});
    CHECK(result.exit_code == 0);
    auto cert = Json::parse(result.out);
    CHECK(cert.at("pass").get<bool>());
    CHECK(cert.at("mode") == "lattice");
}

TEST_CASE("cli double composes with construct outputs") {
    TempJson seed("cli_test_seed.json",
                  code_to_json(ModularCode(2, 4, Metric::Lee, {{0, 0}, {2, 2}})));
    auto result =
        run_cli({"double", "--a", seed.path.c_str(), "--b", seed.path.c_str()});
    REQUIRE(result.exit_code == 0);
    auto code = code_from_json(Json::parse(result.out));
    CHECK(code.n() == 4);
    CHECK(code.size() == 16);

    TempJson doubled("cli_test_doubled.json", Json::parse(result.out));
    auto verified = run_cli({"verify", "--input", doubled.path.c_str(), "--even-distance", "4"});
    CHECK(verified.exit_code == 0);
}

TEST_CASE("cli count") {
    auto result = run_cli({"count", "--r", "1", "--p", "3"});
    CHECK(result.exit_code == 0);
    CHECK(result.out == "120\n");
    auto big = run_cli({"count", "--r", "2", "--p", "3"});
    CHECK(big.out == "574801920000\n");  // (5!)^2 * 11!
}

TEST_CASE("cli tile") {
    auto result = run_cli({"tile", "--R", "1", "--sequence", "constant:0", "--window",
                           "0,0,32,32", "--probe-max", "4"});
    CHECK(result.exit_code == 0);
    auto j = Json::parse(result.out);
    CHECK(j.at("exact_cover").get<bool>());
    bool diag_found = false;
    for (const auto& v : j.at("surviving_periods"))
        if (v[0].get<int>() == 2 && v[1].get<int>() == 2) diag_found = true;
    CHECK(diag_found);
}

TEST_CASE("cli info") {
    TempJson file("cli_test_info.json", code_to_json(lee_single_error_code(2)));
    auto result = run_cli({"info", "--input", file.path.c_str()});
    CHECK(result.exit_code == 0);
    auto j = Json::parse(result.out);
    CHECK(j.at("n") == 2);
    CHECK(j.at("m") == 5);
    CHECK(j.at("size") == 5);
    CHECK(j.at("min_distance") == 3);
    CHECK(j.at("redundancy_volume") == "5");
}

TEST_CASE("cli error exits") {
    auto usage = run_cli({"construct", "--kind", "no-such-kind"});
    CHECK(usage.exit_code == 2);
    auto missing = run_cli({"frobnicate"});
    CHECK(missing.exit_code == 2);
    auto cap = run_cli({"--cap", "10", "construct", "--kind", "hamming", "--q", "2", "--r", "4"});
    CHECK(cap.exit_code == 3);
}
