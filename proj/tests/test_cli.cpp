#include "doctest.h"

#include "schsym/cli.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace schsym;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return Run{code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("rep dump prints one generator per line") {
    Run r = cli({"rep", "dump", "--case", "const"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "z_p1 = Dt\n"));
    CHECK(contains(r.out, "z_0 = t*Dt + 1/2*x*Dx + 1/4\n"));
    CHECK(contains(r.out, "w_p = Dx\n"));

    Run ext = cli({"rep", "dump", "--case", "const", "--extended"});
    CHECK(ext.code == 0);
    CHECK(contains(ext.out, "w_p1 = 2*Dx^2\n"));
    CHECK(contains(ext.out, "w_0s = "));
    CHECK(contains(ext.out, "w_m1 = "));
}

TEST_CASE("bracket command reports span membership") {
    Run r = cli({"bracket", "--case", "quad", "z_p1", "z_m1"});
    CHECK(r.code == 0);
    CHECK(r.out == "[z_p1, z_m1] = -8*a*nu*z_0\n");

    Run anti = cli({"bracket", "--case", "quad", "--type", "anti", "w_p", "w_m"});
    CHECK(anti.code == 0);
    CHECK(anti.out == "{w_p, w_m} = w_0s\n");

    Run zero = cli({"bracket", "--case", "quad", "z_p1", "z_p1"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "[z_p1, z_p1] = 0\n");

    Run bad = cli({"bracket", "--case", "quad", "z_p1", "zz"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "unknown generator 'zz'"));
}

TEST_CASE("closure tables close or fail with an exit code to match") {
    Run lie = cli({"closure", "--case", "quad", "--kind", "lie"});
    CHECK(lie.code == 0);
    CHECK(contains(lie.out, "[z_p1, z_m1] = -8*a*nu*z_0\n"));
    CHECK(contains(lie.out, "closed (6 generators, kind lie)\n"));

    // Specializing nu turns the quadratic structure constants into the
    // constant-case integers.
    Run at_point = cli({"closure", "--case", "quad", "--kind", "lie", "--subst-nu"});
    CHECK(at_point.code == 0);
    CHECK(contains(at_point.out, "[z_p1, z_m1] = 2*z_0\n"));

    Run super9 = cli({"closure", "--case", "quad", "--kind", "super"});
    CHECK(super9.code == 0);
    CHECK(contains(super9.out, "{w_p, w_m} = w_0s\n"));
    CHECK(contains(super9.out, "closed (9 generators, kind super)\n"));

    // Graded tables always run over the enlarged set, so the constant case
    // closes too, with {w_p, w_p} landing on w_p1.
    Run super_const = cli({"closure", "--case", "const", "--kind", "super"});
    CHECK(super_const.code == 0);
    CHECK(contains(super_const.out, "{w_p, w_p} = w_p1\n"));
    CHECK(contains(super_const.out, "closed (9 generators, kind super)\n"));
}

TEST_CASE("duality report names the central odd pair") {
    Run r = cli({"duality", "--case", "quad"});
    CHECK(r.code == 0);
    CHECK(contains(r.out,
                   "odd pair (w_p, w_m): commutator is central, anticommutator is even"));
    CHECK(contains(r.out, "duality holds\n"));
}

TEST_CASE("onshell factors for single generators and the full report") {
    Run z0 = cli({"onshell", "--case", "const", "--gen", "z_0"});
    CHECK(z0.code == 0);
    CHECK(z0.out == "f = -1\n");

    Run zm = cli({"onshell", "--case", "const", "--gen", "z_m1"});
    CHECK(zm.code == 0);
    CHECK(zm.out == "f = -2*t\n");

    Run all = cli({"onshell", "--case", "const"});
    CHECK(all.code == 0);
    CHECK(contains(all.out, "z_p1: f = 0\n"));
    CHECK(contains(all.out, "z_0: f = -1; [z_0, Omega] = -z_p1 - 1/2*a*w_p1\n"));
    CHECK(contains(all.out, "all generators are on-shell symmetries\n"));

    Run bad = cli({"onshell", "--case", "const", "--gen", "zz"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "unknown generator 'zz'"));
}

TEST_CASE("spectrum lists ladder states with exact eigenvalues") {
    Run r = cli({"spectrum", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "vacuum: lambda = -a*nu, beta = 1/2*nu\n"));
    CHECK(contains(r.out, "annihilator: w_p, ladder: w_m\n"));
    CHECK(contains(r.out, "n=0: z_0 = -a*nu, psi = exp("));
    CHECK(contains(r.out, "n=2: z_0 = -5*a*nu, psi = "));

    Run num = cli({"spectrum", "--n", "1", "--numeric"});
    CHECK(num.code == 0);
    CHECK(contains(num.out, ", residual = "));
    CHECK(contains(num.out, "e-"));  // %.3e formatting of a small residual
    CHECK(contains(num.out, "numeric oracle: a = -1, nu = 0.5, 20 samples, seed 42\n"));

    Run seeded = cli({"spectrum", "--n", "1", "--numeric", "--seed", "7"});
    CHECK(contains(seeded.out, "seed 7\n"));

    // Same seed, same samples, byte-identical report.
    Run again = cli({"spectrum", "--n", "1", "--numeric"});
    CHECK(again.out == num.out);
}

TEST_CASE("sigma checks: closure, equations of motion, square search") {
    Run cl = cli({"sigma", "--check", "closure"});
    CHECK(cl.code == 0);
    CHECK(contains(cl.out, "{Qp, Qp} = 2*Zp\n"));
    CHECK(contains(cl.out, "{Qp, Qm} = 2*H\n"));
    CHECK(contains(cl.out, "closed\n"));

    Run os = cli({"sigma", "--check", "onshell"});
    CHECK(os.code == 0);
    CHECK(contains(os.out, "all generators preserve the eps=1 equations of motion\n"));

    Run sq = cli({"sigma", "--check", "square"});
    CHECK(sq.code == 0);
    CHECK(contains(sq.out, "UNSATISFIABLE: alpha^2=0, beta^2=0, 2*alpha*beta=1\n"));
    CHECK(contains(sq.out, "H lies in the even sector: {Qp, Qm} = 2*H\n"));

    Run all = cli({"sigma"});
    CHECK(all.code == 0);
}

TEST_CASE("parse canonicalizes and reports positions on bad input") {
    Run ok = cli({"parse", "Dt*t^2"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "t^2*Dt + 2*t\n");

    Run bad = cli({"parse", "Dt Dt +"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(contains(bad.err, "syntax error at token 2"));

    Run unknown = cli({"parse", "q + 1"});
    CHECK(unknown.code == 2);
    CHECK(contains(unknown.err, "unknown symbol 'q'"));

    Run division = cli({"parse", "1/(t + x)"});
    CHECK(division.code == 2);
    CHECK_FALSE(division.err.empty());
}

TEST_CASE("json output carries the machine-readable table schema") {
    Run r = cli({"closure", "--case", "quad", "--kind", "lie", "--json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["kind"] == "lie");
    CHECK(doc["basis"].size() == 6);
    CHECK(doc["failures"].empty());
    bool found = false;
    for (const auto& e : doc["entries"]) {
        if (e["i"] == "z_p1" && e["j"] == "z_m1") {
            found = true;
            CHECK(e["bracket"] == "comm");
            REQUIRE(e["result"].size() == 1);
            CHECK(e["result"][0]["coeff"] == "-8*a*nu");
            CHECK(e["result"][0]["gen"] == "z_0");
        }
    }
    CHECK(found);

    Run sq = cli({"sigma", "--check", "square", "--json"});
    REQUIRE(sq.code == 0);
    auto cert = nlohmann::json::parse(sq.out);
    CHECK(cert["target"] == "H");
    CHECK(cert["expressible"] == true);
    CHECK(cert["satisfiable"] == false);
    CHECK(cert["equations"] == "alpha^2=0, beta^2=0, 2*alpha*beta=1");
    CHECK_FALSE(cert.contains("alpha"));

    Run rep = cli({"rep", "dump", "--case", "quad", "--json"});
    REQUIRE(rep.code == 0);
    auto gens = nlohmann::json::parse(rep.out);
    CHECK(gens["case"] == "quad");
    REQUIRE(gens["generators"].size() == 6);
    CHECK(gens["generators"][1]["name"] == "z_0");
    CHECK(gens["generators"][1]["expr"] == "Dt");
    CHECK(gens["generators"][3]["parity"] == "odd");

    Run pj = cli({"parse", "Dx*x", "--json"});
    REQUIRE(pj.code == 0);
    auto pd = nlohmann::json::parse(pj.out);
    CHECK(pd["canonical"] == "x*Dx + 1");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"closure", "--kind", "nope"}).code == 2);
    CHECK(cli({"rep", "dump", "--case", "cubic"}).code == 2);

    Run help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "closure"));
    CHECK(contains(help.out, "spectrum"));
}
