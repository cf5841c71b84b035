#include "helpers.hpp"

#include "cli.hpp"
#include "commands.hpp"

#include <ckspectra/generators.hpp>
#include <ckspectra/io.hpp>

#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <sys/wait.h>

using namespace ckspectra;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string running = test::data_path("running.gcg");
const std::string loop = test::data_path("loop.gcg");

int binary_exit_code(const std::string& args) {
    const std::string cmd = std::string(CKSPECTRA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("check reports Condition K failing on the loop with exit 0") {
    const Result r = run_cli({"check", loop});
    CHECK(r.code == 0);
    CHECK(r.out.find("Condition (K): fails at 'a'") != std::string::npos);
    CHECK(r.out.find("Condition (L): fails") != std::string::npos);

    const Result fx = run_cli({"check", running});
    CHECK(fx.out.find("Condition (K): holds") != std::string::npos);
    CHECK(fx.out.find("3 infinite emitters") != std::string::npos);
}

TEST_CASE("tails lists four maximal tails and one finite-return vertex") {
    const Result r = run_cli({"tails", running});
    CHECK(r.code == 0);
    CHECK(r.out.find("maximal tails (4):") != std::string::npos);
    CHECK(r.out.find("{u, v, w, x, y, z}") != std::string::npos);
    CHECK(r.out.find("finite-return vertices (1):\n  x  returning edges 2") != std::string::npos);

    const Result j = run_cli({"--format", "json", "tails", running});
    const Json parsed = Json::parse(j.out);
    CHECK(parsed["schema"] == kJsonSchema);
    CHECK(parsed["maximal_tails"].size() == 4);
    CHECK(parsed["finite_return"][0]["vertex"] == "x");
}

TEST_CASE("prim lists the five primitive ideals") {
    const Result r = run_cli({"prim", running});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("Prim: 5 points"));
    CHECK(r.out.find("T0: yes, T1: no, Hausdorff: no") != std::string::npos);
    CHECK(r.out.find("x fr(x)  ideal ({t, y, z}, {w})") != std::string::npos);

    const Json j = Json::parse(run_cli({"--format", "json", "prim", running}).out);
    CHECK(j["points"].size() == 5);
    CHECK(j["points"][4]["type"] == "finite-return");
    CHECK(j["t0"] == true);
    CHECK(j["hausdorff"] == false);
}

TEST_CASE("closure of T4 has four points and both sides agree") {
    const Result r = run_cli({"closure", "--points", "T4", running});
    CHECK(r.code == 0);
    CHECK(r.out.find("graph side: 4 points") != std::string::npos);
    CHECK(r.out.find("ideal side: 4 points") != std::string::npos);
    CHECK(r.out.find("sides agree: yes") != std::string::npos);

    const Json j = Json::parse(run_cli({"--format", "json", "closure", "--points", "{u,v,w,x,y,z}", running}).out);
    CHECK(j["ideal_side"] == Json::array({"T1", "T2", "T4", "x"}));
    CHECK(j["agree"] == true);
}

TEST_CASE("closure shows the displayed and refined sides when they differ") {
    const Result r = run_cli({"closure", "--points", "{u, v, w, x}", running});
    CHECK(r.code == 0);
    CHECK(r.out.find("sides agree: no") != std::string::npos);
    CHECK(r.out.find("refined graph side agrees: yes") != std::string::npos);
}

TEST_CASE("closure accepts finite-return points by name") {
    const Result r = run_cli({"closure", "--points", "fr(x)", running});
    CHECK(r.code == 0);
    CHECK(r.out.find("X = [x]") != std::string::npos);
    CHECK(run_cli({"closure", "--points", "T9", running}).code == 3);
    CHECK(run_cli({"closure", "--points", "y", running}).code == 3);
}

TEST_CASE("ideals and quotient") {
    const Result r = run_cli({"ideals", running});
    CHECK(r.code == 0);
    CHECK(r.out.find("primitive (finite-return vertex) at x") != std::string::npos);

    const Result warn = run_cli({"ideals", loop});
    CHECK(warn.code == 0);
    CHECK(warn.err.find("warning") != std::string::npos);

    const Result q = run_cli({"quotient", "--H", "t,y,z", "--S", "w", running});
    CHECK(q.code == 0);
    CHECK(q.out.find("edge w -> x';") != std::string::npos);
    CHECK(q.out.find("edge f': x -> x';") != std::string::npos);
    CHECK(run_cli({"quotient", "--H", "y", running}).code == 3);
}

TEST_CASE("verify exits 1 on the running example because of the displayed closure") {
    const Result r = run_cli({"verify", running});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL h is a homeomorphism on Spec and Prim (displayed closure)") != std::string::npos);
    CHECK(r.out.find("PASS h is a homeomorphism on Spec and Prim (refined closure)") != std::string::npos);
    CHECK(run_cli({"verify", test::data_path("ea_abc.gcg")}).code == 0);
}

TEST_CASE("generators and export round-trip through stdin") {
    const Result g = run_cli({"gen", "fixture"});
    CHECK(g.code == 0);
    CHECK(parse_graph(g.out) == running_example().graph);
    const Result e = run_cli({"export", "--json", "-"}, g.out);
    CHECK(Json::parse(e.out)["graph"]["vertices"].size() == 7);
    CHECK(run_cli({"export", "--dot", "-"}, g.out).out.starts_with("digraph G {"));
    CHECK(run_cli({"gen", "ea", "--ground", "a,b", "--mult", "1"}).out ==
          emit_graph(ea_graph({"a", "b"}, Multiplicity{1})));
    CHECK(run_cli({"gen", "random", "--seed", "4"}).out == run_cli({"gen", "random", "--seed", "4"}).out);
    CHECK(run_cli({"gen", "ea", "--mult", "0"}).code == 2);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"check", test::data_path("malformed.gcg")}).code == 2);
    CHECK(run_cli({"check", "/nonexistent/file.gcg"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"prim", loop}).code == 3);
    CHECK(run_cli({"--limit", "3", "tails", running}).code == 4);

    const Result parse = run_cli({"check", "-"}, "vertex a;\nedge a -> b;\n");
    CHECK(parse.code == 2);
    CHECK(parse.err.find("2:11") != std::string::npos);
}

TEST_CASE("output is identical across runs") {
    for (const char* cmd : {"check", "tails", "ideals", "spec", "prim", "verify"})
        CHECK(run_cli({"--format", "json", cmd, running}).out == run_cli({"--format", "json", cmd, running}).out);
}

TEST_CASE("the installed binary reports the same exit codes") {
    CHECK(binary_exit_code("check " + loop) == 0);
    CHECK(binary_exit_code("verify " + running) == 1);
    CHECK(binary_exit_code("check " + test::data_path("malformed.gcg")) == 2);
    CHECK(binary_exit_code("prim " + loop) == 3);
    CHECK(binary_exit_code("--limit 3 tails " + running) == 4);
}

TEST_CASE("point list splitting") {
    CHECK(cli::split_points("T1, {a, b} x") == std::vector<std::string>{"T1", "{a, b}", "x"});
    CHECK(cli::split_names(" a,b ,, c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(cli::split_names("").empty());
}
