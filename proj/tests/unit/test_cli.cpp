#include <doctest.h>

#include <sstream>

#include "ecid/cli.hpp"
#include "ecid/io.hpp"
#include "fixtures.hpp"

using ecid::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string d(const std::string& name) { return fixtures::data_path(name); }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("header and version") {
    auto r = invoke({"orbits", "--field", R"({"p":2})", "--group", R"({"abelian":[3]})"});
    CHECK(r.code == ecid::cli::kExitOk);
    CHECK(r.out.rfind("# ecid 1.0.0 orbits seed=0x5eedec1d", 0) == 0);
    CHECK(contains(r.out, "t_w = 2"));

    auto j = invoke({"orbits", "--field", R"({"p":2})", "--group", R"({"abelian":[3]})", "--json"});
    const auto parsed = ecid::Json::parse(j.out);
    CHECK(parsed.at("tool") == "ecid");
    CHECK(parsed.at("seed") == "0x5eedec1d");
}

TEST_CASE("SL(2,3) tables") {
    const std::vector<std::string> args = {"code",      "--field",       d("gf25.json"),    "--group",
                                           d("SL23.json"), "--idempotents", d("sl23_e1.json"), d("sl23_e2.json"),
                                           d("sl23_e3.json"), "--subsets", "all"};
    auto r = invoke(args);
    CHECK(r.code == ecid::cli::kExitOk);
    for (const char* row : {"1   4           96          1", "2   3           72          2",
                            "3   2           48          3", "{2}       2     12        18",
                            "{1,2}     3     8         15", "{2,3}     5     24/5      9",
                            "{1,2,3}   6     4         6"}) {
        CAPTURE(row);
        CHECK(contains(r.out, row));
    }
    // Same output for any thread count.
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "3"});
    CHECK(invoke(threaded).out == r.out);
    CHECK(invoke(args).out == r.out);

    auto json = args;
    json.push_back("--json");
    const auto parsed = ecid::Json::parse(invoke(json).out);
    CHECK(parsed.at("command") == "code");
}

TEST_CASE("classify") {
    auto a4 = invoke({"classify", "--field", R"({"p":3})", "--group", d("A4.json"), "--modular-exhaustive"});
    CHECK(a4.code == 0);
    CHECK(contains(a4.out, "verdict: ECID"));
    CHECK(contains(a4.out, "472 idempotents, 118 primitive"));

    auto c6 = invoke({"classify", "--field", R"({"p":2})", "--group", d("C6.json"), "--modular-exhaustive"});
    CHECK(contains(c6.out, "verdict: not-ECID"));

    auto sl = invoke({"classify", "--field", R"({"p":11})", "--group", d("SL23.json")});
    CHECK(contains(sl.out, "verdict: minimal-ECD"));

    auto m12 = invoke({"classify", "--field", R"({"p":307})", "--group",
                       R"({"invariants":{"order":95040,"abelianization_order":1,"class_count":15}})",
                       "--assert-splitting"});
    CHECK(m12.code == 0);
    CHECK(contains(m12.out, "verdict: undecided"));
}

TEST_CASE("wedderburn") {
    auto r = invoke({"wedderburn", "--field", d("gf25.json"), "--group", d("SL23.json")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "21"));
    auto arith = invoke({"wedderburn", "--gamma", "21", "--s", "4", "--json"});
    CHECK(arith.code == 0);
    auto none = invoke({"wedderburn", "--field", R"({"p":5})", "--group", d("SL23.json")});
    CHECK(none.code == ecid::cli::kExitHypothesis);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"orbits", "--field", d("nope.json"), "--group", d("C6.json")}).code == ecid::cli::kExitParse);
    CHECK(invoke({"frobnicate"}).code == ecid::cli::kExitParse);
    CHECK(invoke({"orbits", "--field", R"({"p":6})", "--group", d("C6.json")}).code == ecid::cli::kExitError);
    CHECK(invoke({"code", "--field", d("gf25.json"), "--group", d("SL23.json"), "--idempotents", d("sl23_e1.json"),
                  d("sl23_e2.json"), d("sl23_e3.json"), "--subsets", "sum", "--budget", "100"})
              .code == ecid::cli::kExitBudget);
    CHECK(invoke({"search", "--field", R"({"p":3})", "--group", d("A4.json"), "--budget", "1000"}).code ==
          ecid::cli::kExitBudget);
    CHECK(invoke({"bounds", "--field", R"({"p":3})", "--group", d("A4.json"), "--idempotent",
                  R"({"digits":"112201020000"})"})
              .code == ecid::cli::kExitHypothesis);
    auto ok = invoke({"bounds", "--field", R"({"p":3})", "--group", d("A4.json"), "--idempotent",
                      R"({"digits":"112201020000"})", "--modular-exhaustive"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "bounds"));
}
