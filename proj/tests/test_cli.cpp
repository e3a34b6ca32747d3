#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "soc/codefile.hpp"
#include "soc/rng.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace soc;

namespace {

const std::string cli = SOC_CLI_PATH;

struct CmdResult {
    int status;
    std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int rc = pclose(p);
    return {WEXITSTATUS(rc), out};
}

LinearCode parse(const std::string& text) {
    std::istringstream in(text);
    return read_code_file(in);
}

}  // namespace

TEST_CASE("code file round trip") {
    LinearCode rm = rm_code(1, 3);
    LinearCode back = parse(code_file_string(rm));
    CHECK(back.binary());
    CHECK(back.bits() == rm.bits());

    Field f16(4);
    SplitMix64 rng(9);
    FqMatrix m(f16, 3, 7);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 7; ++c) m.set(r, c, static_cast<uint32_t>(rng.below(16)));
    if (rref(m).rank == 3) {
        LinearCode code = make_fq_code(m);
        LinearCode round = parse(code_file_string(code));
        CHECK(round.symbols() == code.symbols());
    }
}

TEST_CASE("code file parse errors") {
    CHECK_THROWS(parse("3 4 1\n1 1 1 1\n"));            // q not a power of two
    CHECK_THROWS(parse("2 4 2\n1 1 0 0\n1 1 0 0\n"));   // rank < k
    CHECK_THROWS(parse("4 2 1\n7 1\n"));                // symbol out of range
    CHECK_THROWS(parse("2 4 2\n1 1 0 0\n"));            // missing symbols
    CHECK_THROWS(parse(""));                            // empty

    // Comments and the hand example parse fine.
    LinearCode c = parse("# comment\n4 2 1  # trailing\n1 1\n");
    CHECK(c.n == 2);
    CHECK(c.k == 1);
    CHECK_FALSE(c.binary());
}

TEST_CASE("rm check pipeline") {
    auto r = run_cmd(cli + " code rm --r 1 --m 3 | " + cli + " check --expect-so");
    CHECK(r.status == 0);
    CHECK(r.out.find("[8,4] self-orthogonal: yes, self-dual: yes") != std::string::npos);
    CHECK(r.out.find("even-weights: yes") != std::string::npos);

    // Full space is not self-orthogonal: --expect-so makes that exit 1.
    auto bad = run_cmd(cli + " code rm --r 3 --m 3 | " + cli + " check --expect-so");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("self-orthogonal: no") != std::string::npos);
}

TEST_CASE("tables output") {
    auto t2 = run_cmd(cli + " tables --which 2");
    CHECK(t2.status == 0);
    CHECK(t2.out.find("2,4,2,3,1,24") != std::string::npos);
    CHECK(t2.out.find("3,6,6,7,5,84") != std::string::npos);
    CHECK(t2.out.find("4,8,14,15,13,240") != std::string::npos);
    CHECK(t2.out.find("5,10,30,31,29,620") != std::string::npos);
    CHECK(t2.out.find("maximized at t=3") != std::string::npos);

    auto t1 = run_cmd(cli + " tables --which 1");
    CHECK(t1.status == 0);
    CHECK(t1.out.find("22,10,8,5,5,4,150,341,match") != std::string::npos);
    CHECK(t1.out.find("28,14,6,7,7,3,63,127,mismatch") != std::string::npos);

    // Byte-stable across runs.
    CHECK(run_cmd(cli + " tables --which 1").out == t1.out);
    CHECK(run_cmd(cli + " tables --which 2").out == t2.out);
}

TEST_CASE("count output") {
    auto r = run_cmd(cli + " count --n 4 --k 1 --oracle");
    CHECK(r.status == 0);
    CHECK(r.out.find("quantity,n,k,s,paper_value,oracle_value,agrees") != std::string::npos);
    CHECK(r.out.find("Eq9,4,1,,15,7,false") != std::string::npos);

    auto no_oracle = run_cmd(cli + " count --n 4 --k 1");
    CHECK(no_oracle.out.find("Eq9,4,1,,15,,") != std::string::npos);

    auto too_big = run_cmd(cli + " count --n 12 --oracle");
    CHECK(too_big.status == 1);
}

TEST_CASE("mindist with jobs") {
    std::string file = "/tmp/soc_test_rm13.txt";
    {
        std::ofstream out(file);
        write_code_file(out, rm_code(1, 3));
    }
    auto r1 = run_cmd(cli + " mindist " + file);
    CHECK(r1.status == 0);
    CHECK(r1.out == "min distance: 4\n");
    for (int jobs : {2, 3, 5})
        CHECK(run_cmd(cli + " mindist " + file + " --jobs " + std::to_string(jobs)).out ==
              r1.out);
}

TEST_CASE("concat and expand pipelines") {
    std::string outer_file = "/tmp/soc_test_outer.txt";
    std::string inner_file = "/tmp/soc_test_inner.txt";
    run_cmd(cli + " code so-outer --q 16 --n 8 --k 2 --seed 4 > " + outer_file);
    run_cmd(cli + " code rm --r 1 --m 3 > " + inner_file);

    auto cc = run_cmd(cli + " concat --outer " + outer_file + " --inner " + inner_file);
    CHECK(cc.status == 0);
    LinearCode concat = parse(cc.out);
    CHECK(concat.n == 64);
    CHECK(concat.k == 8);
    CHECK(is_self_orthogonal(concat));

    auto ex = run_cmd(cli + " expand " + outer_file);
    CHECK(ex.status == 0);
    LinearCode expanded = parse(ex.out);
    CHECK(expanded.n == 32);
    CHECK(expanded.k == 8);
    CHECK(is_self_orthogonal(expanded));

    auto piped = run_cmd(cli + " expand " + outer_file + " | " + cli + " check --expect-so");
    CHECK(piped.status == 0);
}

TEST_CASE("gv witness pipes into check") {
    auto r = run_cmd(cli + " gv --n 8 --delta 0.5");
    CHECK(r.status == 0);
    CHECK(r.out.find("# remark3 dimension k = 3") != std::string::npos);
    CHECK(r.out.find("theorem1(n=8, k=3, r=2): true") != std::string::npos);
    LinearCode witness = parse(r.out);
    CHECK(witness.n == 8);
    CHECK(witness.k == 3);
    CHECK(is_self_orthogonal(witness));
    CHECK(min_distance(witness) >= 4);
}

TEST_CASE("bounds and field commands") {
    auto b = run_cmd(cli + " bounds --samples 16");
    CHECK(b.status == 0);
    CHECK(b.out.rfind("label,delta,rate\n", 0) == 0);

    auto f = run_cmd(cli + " field --m 4");
    CHECK(f.status == 0);
    CHECK(f.out.find("GF(2^4): q=16, modulus=0x13 (x^4+x+1)") != std::string::npos);
    CHECK(f.out.find("1000\n0100\n0010\n0001") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cmd(cli + " bogus").status == 2);
    CHECK(run_cmd(cli + " tables").status == 2);
    CHECK(run_cmd(cli).status == 2);
}
