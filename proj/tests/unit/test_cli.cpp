#include <doctest.h>

#include <json.hpp>

#include "fvlab/cli.hpp"

using fvlab::cli::run;
using nlohmann::json;

TEST_CASE("documented examples") {
    auto r = run({"decide", "simplicial", "--d", "4", "--f", "[5,10,10,5]"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"verdict\":\"accepted\",\"g\":[\"0\",\"0\"]}\n");

    r = run({"cd", "stanley", "--word", "d", "--m", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"cd\":{\"cc\":\"1\",\"d\":\"3\"}}\n");

    r = run({"rank5", "decide", "--c2d", "1", "--dc2", "1", "--d2", "2"});
    CHECK(r.exit_code == 1);
    CHECK(r.out == "{\"verdict\":\"infeasible\"}\n");
}

TEST_CASE("exit codes") {
    CHECK(run({"nonsense"}).exit_code == 2);
    CHECK(run({"transform", "f2h", "--f", "[1,2"}).exit_code == 2);
    CHECK(run({"transform", "f2h", "--f", "[-1]"}).exit_code == 2);
    CHECK(run({"decide", "simplicial", "--d", "3", "--f", "[6,13,8]"}).exit_code == 1);
    CHECK(run({"decide", "simplicial", "--d", "3", "--f", "[6,13]"}).exit_code == 2);
    CHECK(run({"poset", "eulerian", "--kind", "path", "--n", "2"}).exit_code == 1);
    fvlab::Caps caps;
    caps.max_gorenstein_rank = 2;
    CHECK(run({"poset", "gorenstein", "--kind", "boolean", "--n", "4"}, caps).exit_code == 3);
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("big integers survive a round trip") {
    const std::string big = "123456789012345678901234567890123456789";
    const auto h = run({"transform", "f2h", "--f", "[\"" + big + "\",\"" + big + "\"]"});
    REQUIRE(h.exit_code == 0);
    const json hj = json::parse(h.out);
    const auto f = run({"transform", "h2f", "--h", hj["h"].dump()});
    REQUIRE(f.exit_code == 0);
    CHECK(json::parse(f.out)["f"] == json::array({big, big}));
}

TEST_CASE("outputs are deterministic") {
    const std::vector<std::string> args{"rank5", "decide", "--c2d", "7", "--dc2", "5", "--d2", "20"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> flag{"poset", "flag", "--kind", "polygon", "--m", "6"};
    CHECK(run(flag).out == run(flag).out);
}

TEST_CASE("poset and cd pipeline") {
    const auto flag = run({"poset", "flag", "--kind", "boolean", "--n", "4"});
    REQUIRE(flag.exit_code == 0);
    const auto phi = run({"cd", "from-flag", "--flag", flag.out});
    CHECK(json::parse(phi.out)["cd"] == json{{"ccc", "1"}, {"cd", "2"}, {"dc", "2"}});

    const auto path = run({"poset", "flag", "--kind", "path", "--n", "2"});
    const auto bad = run({"cd", "from-flag", "--flag", path.out});
    CHECK(bad.exit_code == 1);
    CHECK(json::parse(bad.out).contains("residual"));

    const auto built = run({"poset", "build", "--kind", "polygon", "--m", "4"});
    CHECK(run({"poset", "gorenstein", "--poset", built.out}).exit_code == 0);

    const auto decided = run({"poset", "decide-flag", "--flag", R"({"d":2,"flag":{"0":"1","1":"3","2":"3","3":"7"}})"});
    CHECK(decided.exit_code == 1);
    CHECK(json::parse(decided.out)["verdict"] == "not-realizable");
}

TEST_CASE("other subcommands") {
    CHECK(json::parse(run({"msequence", "rep", "--a", "7", "--i", "3"}).out)["pseudo_power"] == "9");
    CHECK(run({"msequence", "check", "--g", "[2,5]"}).exit_code == 1);
    CHECK(json::parse(run({"msequence", "approx", "--x", "[0,55]"}).out)["distance"] == "10");
    CHECK(json::parse(run({"cd", "words", "--degree", "5"}).out)["count"] == 8);
    CHECK(json::parse(run({"cd", "coords", "--cd", R"({"cc":"1","d":"4"})"}).out)["coords"] == json::array({"4"}));
    CHECK(json::parse(run({"cd", "expand", "--cd", R"({"d":"1"})"}).out)["ab"] == json{{"ab", "1"}, {"ba", "1"}});
    CHECK(json::parse(run({"stats", "fatness", "--f", "[16,32,24,8]"}).out)["fatness"] == "7/3");
    CHECK(json::parse(run({"transform", "g2h", "--d", "5", "--g", "[3,2]"}).out)["h"] ==
          json::array({"1", "4", "6", "6", "4", "1"}));
    const auto density = run({"experiment", "density", "--k", "1"});
    CHECK(json::parse(density.out).contains("note"));
    const auto csv = run({"experiment", "density", "--k", "2", "--grid", "1000,10000", "--format", "csv"});
    CHECK(csv.out.rfind("a,distance,local_slope\n", 0) == 0);
    const auto conv = run({"experiment", "convergence", "--word", "dd", "--m", "8,16"});
    CHECK(json::parse(conv.out)["rows"].size() == 2);
    const auto stats = run({"rank5", "decide", "--c2d", "3", "--dc2", "3", "--d2", "9", "--stats"});
    CHECK(json::parse(stats.out).contains("nodes"));
}
