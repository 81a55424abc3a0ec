#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "codebetti/cli.hpp"
#include "codebetti/errors.hpp"

#include "oracles.hpp"

using namespace codebetti;
using codebetti::testing::data_path;
using codebetti::testing::error_kind;

namespace {

struct RunResult {
    int rc;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("code files parse with comments, blank lines and CRLF endings") {
    CodeFile f = parse_code_file("# a comment\r\n\nq 2\nkind generator\n# rows\n1 1 0 0\n0 1 1 1\n");
    CHECK(f.q == 2);
    CHECK(f.kind == CodeFile::Kind::Generator);
    CHECK(f.rows == std::vector<std::vector<unsigned>>{{1, 1, 0, 0}, {0, 1, 1, 1}});

    CodeFile p = parse_code_file("q 3\nkind parity\n0 1 2\n");
    CHECK(p.kind == CodeFile::Kind::Parity);
    LinearCode c = build_code(p);
    CHECK(c.length() == 3);
    CHECK(c.dimension() == 2);
}

TEST_CASE("parse errors carry kinds and line numbers") {
    CHECK(error_kind([] { parse_code_file(""); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_code_file("kind generator\n1 1\n"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_code_file("q 2\n1 1\n"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_code_file("q 2\nkind generator\n"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_code_file("q 2\nkind sideways\n1 1\n"); })
          == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_code_file("q 6\nkind generator\n1 1\n"); })
          == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_code_file("q 2\nkind generator\n1 2\n"); })
          == ErrorKind::ValueOutOfField);
    CHECK(error_kind([] { parse_code_file("q 2\nkind generator\n1 1 0\n1 1\n"); })
          == ErrorKind::DimensionMismatch);

    try {
        parse_code_file("q 2\nkind generator\n1 1 0\n1 1\n");
    } catch (const Error& e) {
        CHECK(contains(e.what(), "line 4"));
    }
    try {
        parse_code_file("q 6\nkind generator\n1 1\n");
    } catch (const Error& e) {
        CHECK(contains(e.what(), "line 1"));
        CHECK(contains(e.what(), "NotAPrimePower"));
    }
}

TEST_CASE("writing and reparsing a code file round-trips") {
    CodeFile f;
    f.q = 3;
    f.kind = CodeFile::Kind::Generator;
    f.rows = {{1, 0, 2}, {0, 1, 1}};
    CodeFile back = parse_code_file(write_code_file(f));
    CHECK(back.q == f.q);
    CHECK(back.kind == f.kind);
    CHECK(back.rows == f.rows);
}

TEST_CASE("hierarchy and resolution commands print the golden lines") {
    RunResult h = run({"hierarchy", data_path("exawh.code")});
    CHECK(h.rc == 0);
    CHECK(h.out == "(9,12,13)\n");

    RunResult r = run({"resolution", data_path("exawh.code")});
    CHECK(r.rc == 0);
    CHECK(r.out == "0 <- R(C) <- S <- S(-9)^13 <- S(-12)^39 <- S(-13)^27 <- 0\n");

    RunResult h5 = run({"hierarchy", data_path("exa5.code")});
    CHECK(h5.out == "(2,4)\n");
}

TEST_CASE("circuits and nsets commands list sorted subsets") {
    RunResult c = run({"circuits", data_path("exa5.code")});
    CHECK(c.rc == 0);
    CHECK(c.out == "{1,2}\n{1,3,4}\n{2,3,4}\n");

    RunResult n1 = run({"nsets", "--level", "1", data_path("exa5.code")});
    CHECK(n1.out == c.out);
    RunResult n2 = run({"nsets", "--level", "2", data_path("exa5.code")});
    CHECK(n2.out == "{1,2,3,4}\n");

    RunResult bad = run({"nsets", "--level", "7", data_path("exa5.code")});
    CHECK(bad.rc == 2);
    CHECK(contains(bad.err, "error:"));
}

TEST_CASE("check-cw aggregates all methods and spots Griesmer-tight codes") {
    RunResult cw = run({"check-cw", "--method", "all", data_path("cw422.code")});
    CHECK(cw.rc == 0);
    CHECK(contains(cw.out, "method direct: constant weight 2"));
    CHECK(contains(cw.out, "method prop1: constant weight 2"));
    CHECK(contains(cw.out, "method cor2: constant weight 2"));
    CHECK(contains(cw.out, "method betti1: constant weight 2"));
    CHECK(contains(cw.out, "constant weight 2"));

    RunResult g = run({"check-cw", "--method", "all", data_path("griesmer.code")});
    CHECK(g.rc == 0);
    CHECK(contains(g.out, "not constant weight"));
    CHECK(contains(g.out, "Griesmer"));

    RunResult plain = run({"check-cw", data_path("exa5.code")});
    CHECK(plain.rc == 0);
    CHECK(contains(plain.out, "not constant weight"));
    CHECK_FALSE(contains(plain.out, "Griesmer")); // d_2 = 4 > bound 3: no remark
}

TEST_CASE("betti command output is identical for the two matrix routes") {
    RunResult gen = run({"betti", "--json", data_path("exa5.code")});
    RunResult par = run({"betti", "--json", data_path("exa5_parity.code")});
    CHECK(gen.rc == 0);
    CHECK(gen.out == par.out);
    for (const std::string& key :
         {std::string("\"command\":\"betti\""), std::string("\"k\":2"), std::string("\"n\":4"),
          std::string("\"q\":2"), std::string("\"grading\":\"nn\"")})
        CHECK(contains(gen.out, key));

    RunResult text = run({"betti", data_path("exa5.code")});
    CHECK(contains(text.out, "(0, {}): 1"));
    CHECK(contains(text.out, "(1, {1,2}): 1"));
    CHECK(contains(text.out, "(2, {1,2,3,4}): 2"));

    RunResult ngr = run({"betti", "--grading", "n", data_path("exa5.code")});
    CHECK(contains(ngr.out, "(1, 2): 1"));
    CHECK(contains(ngr.out, "(1, 3): 2"));
    CHECK(contains(ngr.out, "(2, 4): 2"));

    RunResult tot = run({"betti", "--grading", "total", data_path("exa5.code")});
    CHECK(contains(tot.out, "0: 1"));
    CHECK(contains(tot.out, "1: 3"));
    CHECK(contains(tot.out, "2: 2"));
}

TEST_CASE("verify passes on the shipped inputs") {
    for (const char* name : {"exa5.code", "exawh.code", "cw422.code", "example11.code",
                             "griesmer.code", "exa5_parity.code"}) {
        RunResult v = run({"verify", data_path(name)});
        CHECK(v.rc == 0);
        CHECK(contains(v.out, "verify: PASS"));
    }
}

TEST_CASE("generated simplex codes satisfy their own check") {
    std::string path = "/tmp/codebetti_test_simplex.code";
    RunResult gen = run({"gen", "simplex", "--q", "3", "--k", "2", "--replicate", "2",
                         "-o", path});
    CHECK(gen.rc == 0);

    CodeFile f = load_code_file(path);
    CHECK(f.q == 3);
    CHECK(f.rows.size() == 2);
    CHECK(f.rows[0].size() == 8);

    RunResult cw = run({"check-cw", "--method", "all", path});
    CHECK(cw.rc == 0);
    CHECK(contains(cw.out, "constant weight 6")); // replicate * q^(k-1)

    RunResult v = run({"verify", path});
    CHECK(v.rc == 0);
    std::remove(path.c_str());

    // without -o the file goes to standard output
    RunResult stdout_gen = run({"gen", "simplex", "--q", "2", "--k", "2"});
    CHECK(stdout_gen.rc == 0);
    CodeFile parsed = parse_code_file(stdout_gen.out);
    CHECK(parsed.rows[0] == std::vector<unsigned>{1, 0, 1});
}

TEST_CASE("usage and input failures exit with code 2") {
    RunResult missing = run({"hierarchy", "/nonexistent/nowhere.code"});
    CHECK(missing.rc == 2);
    CHECK(contains(missing.err, "error:"));

    RunResult unknown = run({"frobnicate", data_path("exa5.code")});
    CHECK(unknown.rc == 2);

    RunResult no_args = run({});
    CHECK(no_args.rc == 2);

    std::string path = "/tmp/codebetti_test_badfield.code";
    {
        std::ofstream out(path);
        out << "q 6\nkind generator\n1 1\n";
    }
    RunResult badfield = run({"hierarchy", path});
    CHECK(badfield.rc == 2);
    CHECK(contains(badfield.err, "NotAPrimePower"));
    std::remove(path.c_str());
}

TEST_CASE("k = 1 codes skip the hierarchy-pattern method gracefully") {
    std::string path = "/tmp/codebetti_test_k1.code";
    {
        std::ofstream out(path);
        out << "q 2\nkind generator\n1 1 1\n";
    }
    RunResult cw = run({"check-cw", "--method", "all", path});
    CHECK(cw.rc == 0);
    CHECK(contains(cw.out, "method prop1: not applicable (k = 1)"));
    CHECK(contains(cw.out, "constant weight 3"));

    RunResult v = run({"verify", path});
    CHECK(v.rc == 0);
    std::remove(path.c_str());
}

TEST_CASE("verify reports k = 0 codes as trivially consistent") {
    std::string path = "/tmp/codebetti_test_k0.code";
    {
        std::ofstream out(path);
        out << "q 2\nkind parity\n1 0\n0 1\n";
    }
    RunResult v = run({"verify", path});
    CHECK(v.rc == 0);
    CHECK(contains(v.out, "verify: PASS"));
    std::remove(path.c_str());
}
