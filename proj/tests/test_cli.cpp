#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "stardef/cli.hpp"
#include "stardef/io.hpp"

using namespace stardef;

namespace {

struct Run {
    int code;
    Json report;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    Json j = out.str().empty() || out.str()[0] != '{' ? Json() : Json::parse(out.str());
    return {code, j, err.str()};
}

std::string data(const std::string& name) { return std::string(STARDEF_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("demo delta-weyl")
{
    Run r = run({"demo", "delta-weyl", "--n", "1", "--order", "4"});
    CHECK(r.code == 0);
    CHECK(r.report["verdicts"]["lambda2"] == "negative");
    CHECK(r.report["witnesses"]["lambda2_coefficient"] == "-1");
    CHECK(r.report["witnesses"]["stated_value"] == "-1/2");

    Run two = run({"demo", "delta-weyl", "--n", "2", "--order", "2"});
    CHECK(two.report["witnesses"]["lambda2_coefficient"] == "-2");

    Run one = run({"demo", "delta-weyl", "--order", "1"});
    CHECK(one.code == 0);
    CHECK(one.report["verdicts"]["lambda2"] == "undetermined at this order");
}

TEST_CASE("verify suites")
{
    CHECK(run({"verify", "star-laws", "--product", "wick:n=1", "--deg", "3", "--order", "4"}).code == 0);
    Run c = run({"verify", "cohomology", "--algebra", "matrix:2", "--degree", "2"});
    CHECK(c.code == 0);
    CHECK(c.report["verdicts"]["dim_H2"] == 0);
    Run p = run({"verify", "positivity", "--functional", data("delta0.json"), "--product", "weyl:n=1"});
    CHECK(p.code == 1);
    CHECK(p.report["witnesses"]["report"]["witness"] == "q1^2 + p1^2");
    Run pb = run({"verify", "positivity", "--functional", data("delta0.json"), "--product", "weyl:n=1",
                  "--pullback-laplace", "--deg", "3"});
    CHECK(pb.code == 0);
    CHECK(pb.report["verdicts"]["positivity"] == "NoViolationFound");
    CHECK(run({"verify", "hochschild-signs", "--algebra", "dual", "--trials", "10"}).code == 0);
    CHECK(run({"verify", "ordered-ring", "--trials", "20"}).code == 0);
    Run d = run({"verify", "deform", "--algebra", "dual", "--order", "2", "--h2-seed", data("dual_h2_seed.json")});
    CHECK(d.code == 0);
    CHECK(d.report["verdicts"]["verify"]["pass"] == true);
}

TEST_CASE("input files")
{
    CHECK(run({"verify", "star-laws", "--product", "expderiv:file=" + data("wick_expderiv.json"), "--deg", "3"}).code == 0);
    CHECK(run({"verify", "cohomology", "--algebra", data("dual_algebra.json"), "--degree", "1"}).code == 0);
    CHECK(run({"verify", "deform", "--candidate", data("dual_candidate.json")}).code == 0);
    CHECK(run({"verify", "positivity", "--candidate", data("matrix2_trivial.json"), "--trials", "5"}).code == 0);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "star-laws", "--product", "moyal:n=1"}).code == 2);
    CHECK(run({"verify", "cohomology", "--algebra", "matrix:x"}).code == 2);
    CHECK(run({"verify", "positivity", "--functional", "/nonexistent.json"}).code == 2);
    CHECK(run({"demo", "delta-weyl", "--n", "0"}).code == 2);
}

TEST_CASE("reports are replayable")
{
    std::vector<std::string> args{"verify", "positivity", "--product", "weyl:n=1", "--deg", "3", "--seed", "5"};
    Run a = run(args), b = run(args);
    CHECK(a.report["verdicts"] == b.report["verdicts"]);
    CHECK(a.report["witnesses"] == b.report["witnesses"]);
    CHECK(a.report["parameters"]["seed"] == 5);
}
