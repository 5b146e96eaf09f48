#include "ppkn/cli.h"

#include <sstream>

#include "gtest/gtest.h"

using namespace ppkn;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string &stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int status = cli::run(args, in, out, err);
    return {status, out.str(), err.str()};
}

bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(cli, build_then_metrics) {
    const auto built = run({"build", "ppkn"});
    ASSERT_EQ(built.status, cli::kOk);
    const auto m = run({"metrics", "-"}, built.out);
    ASSERT_EQ(m.status, cli::kOk);
    ASSERT_TRUE(contains(m.out, "quantum cost:  10")) << m.out;
    ASSERT_TRUE(contains(m.out, "logical depth: 4")) << m.out;
    ASSERT_TRUE(contains(m.out, "T2: G3 toffoli 0 1 3")) << m.out;

    const auto csv = run({"metrics", "-", "--csv"}, built.out);
    ASSERT_EQ(csv.out, "name,provenance,gates,toffoli,cnot,not,qc,depth\nstdin,computed,6,1,5,0,10,4\n");
}

TEST(cli, build_then_verify) {
    for (const char *kind : {"ppkn", "hng"}) {
        const auto built = run({"build", kind});
        const auto v = run({"verify", "-"}, built.out);
        ASSERT_EQ(v.status, cli::kOk) << kind << v.out << v.err;
        ASSERT_TRUE(contains(v.out, "PASS (8/8 cases)")) << v.out;
        ASSERT_TRUE(contains(v.out, "bijective: yes"));
    }
    const auto rca = run({"build", "rca", "--bits", "3"});
    ASSERT_EQ(rca.status, cli::kOk);
    const auto v = run({"verify", "-"}, rca.out);
    ASSERT_EQ(v.status, cli::kOk) << v.out;
    ASSERT_TRUE(contains(v.out, "PASS (128/128 cases)")) << v.out;

    const auto big = run({"build", "rca", "--bits", "16"});
    const auto vr = run({"verify", "-", "--seed", "5"}, big.out);
    ASSERT_EQ(vr.status, cli::kOk) << vr.out;
    ASSERT_TRUE(contains(vr.out, "PASS (10000/10000 cases)")) << vr.out;

    const auto few = run({"verify", "-", "--trials", "100"}, rca.out);
    ASSERT_TRUE(contains(few.out, "PASS (100/100 cases)")) << few.out;
}

TEST(cli, verify_failure_lists_counterexamples) {
    std::string text = run({"build", "ppkn"}).out;
    // Drop gate 5 (cnot 2 3).
    const auto pos = text.find("cnot 2 3\n");
    ASSERT_NE(pos, std::string::npos);
    text.erase(pos, 9);
    const auto v = run({"verify", "-"}, text);
    ASSERT_EQ(v.status, cli::kVerificationFailed);
    ASSERT_TRUE(contains(v.out, "FAIL (4/8 cases)")) << v.out;
    ASSERT_TRUE(contains(v.out, "counterexamples:"));
    ASSERT_TRUE(contains(v.out, "a=0 b=1 cin=0  expected sum=1 cout=0  got sum=1 cout=1")) << v.out;

    const auto csv = run({"verify", "-", "--csv"}, text);
    ASSERT_EQ(csv.status, cli::kVerificationFailed);
    ASSERT_TRUE(contains(csv.out, "a,b,cin,expected_sum,expected_cout,sum,cout,a_out,b_out\n0,1,0,1,0,1,1,0,1\n"))
        << csv.out;
}

TEST(cli, verify_without_layout_is_usage_error) {
    const auto v = run({"verify", "-"}, "lines 2\ncnot 0 1\n");
    ASSERT_EQ(v.status, cli::kUsage);
}

TEST(cli, simulate) {
    const auto built = run({"build", "ppkn"});
    const auto s = run({"simulate", "-", "--input", "1010"}, built.out);
    ASSERT_EQ(s.status, cli::kOk) << s.err;
    ASSERT_EQ(s.out, "output: 0011\nSum = 0\nA = 0\nB = 1\nCout = 1\n");

    ASSERT_EQ(run({"simulate", "-", "--input", "101"}, built.out).status, cli::kUsage);
    ASSERT_EQ(run({"simulate", "-", "--input", "10a1"}, built.out).status, cli::kUsage);
    ASSERT_EQ(run({"simulate", "-"}, built.out).status, cli::kUsage);
}

TEST(cli, compare) {
    const auto c = run({"compare"});
    ASSERT_EQ(c.status, cli::kOk);
    ASSERT_TRUE(contains(c.out, "MISMATCH: qc 13!=12")) << c.out;
    ASSERT_TRUE(contains(c.out, "HNG (reference) vs HNG: qc computed 13, published 12")) << c.out;
    ASSERT_TRUE(contains(c.out, "(12 - 10) / 12 = 16.7%")) << c.out;

    const auto csv = run({"compare", "--csv"});
    ASSERT_TRUE(contains(csv.out, "PPKN,computed,6,1,5,0,10,4,\n")) << csv.out;
    ASSERT_TRUE(contains(csv.out, "TSG,literature,6,2,-,-,14,6,\n")) << csv.out;
    ASSERT_TRUE(contains(csv.out, "RCA-3 (PPKN),computed,18,3,15,0,30,10,\n")) << csv.out;
}

TEST(cli, export_qasm) {
    const auto built = run({"build", "rca", "--bits", "2"});
    const auto e = run({"export", "-", "--format", "qasm"}, built.out);
    ASSERT_EQ(e.status, cli::kOk);
    ASSERT_TRUE(contains(e.out, "qubit[7] q;\n"));
    ASSERT_EQ(run({"export", "-", "--format", "quil"}, built.out).status, cli::kUsage);
}

TEST(cli, usage_and_parse_errors_are_distinguishable) {
    ASSERT_EQ(run({}).status, cli::kUsage);
    ASSERT_EQ(run({"frobnicate"}).status, cli::kUsage);
    ASSERT_EQ(run({"build", "adder"}).status, cli::kUsage);
    ASSERT_EQ(run({"build", "rca"}).status, cli::kUsage);
    ASSERT_EQ(run({"build", "rca", "--bits", "0"}).status, cli::kUsage);
    ASSERT_EQ(run({"build", "ppkn", "--bits", "2"}).status, cli::kUsage);

    const auto p = run({"metrics", "-"}, "lines 2\ncnot 0 0\n");
    ASSERT_EQ(p.status, cli::kParseError);
    ASSERT_TRUE(contains(p.err, "<stdin>:2:")) << p.err;

    const auto io = run({"metrics", "/nonexistent/file.net"});
    ASSERT_EQ(io.status, cli::kIoError);

    const auto big = run({"build", "rca", "--bits", "9"});
    ASSERT_EQ(run({"verify", "-"}, big.out).status, cli::kOk);
}

TEST(cli, output_is_deterministic) {
    ASSERT_EQ(run({"build", "rca", "--bits", "4"}).out, run({"build", "rca", "--bits", "4"}).out);
    ASSERT_EQ(run({"compare"}).out, run({"compare"}).out);
}
