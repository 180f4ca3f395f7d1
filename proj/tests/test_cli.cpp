#include "doctest.h"

#include <fstream>
#include <sstream>

#include "mint/driver.hpp"

using namespace mint;

namespace {
std::string sample(const std::string& name) {
    std::ifstream in(std::string(MINT_SAMPLES_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
bool mentions(const Report& r, const std::string& what) { return r.text().find(what) != std::string::npos; }
}  // namespace

TEST_CASE("parsing files") {
    SourceFile f = parse_file("def one : Nat := succ zero;");
    REQUIRE(f.defs.size() == 1);
    CHECK(f.defs[0].name == "one");
    CHECK(equal(f.defs[0].body, succ(zero())));
    CHECK_FALSE(f.flavor.has_value());

    SourceFile g = parse_file("#flavor k4;\ndef k : (A : [] Ty 0) -> [] (unbox 1 A) := fn A. box zero;");
    CHECK(g.flavor == Flavor::K4);
    CHECK(g.defs[0].type->as<term::Pi>()->cod->is<term::BoxTy>());

    try {
        parse_file("def bad : Nat := x;");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.loc().line == 1);
        CHECK(e.message().find("unknown identifier") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_file("def a : Nat := zero;\ndef a : Nat := zero;"), ParseError);
    // later definitions inline earlier ones
    SourceFile h = parse_file("def one : Nat := succ zero;\ndef two : Nat := succ one;");
    CHECK(equal(h.defs[1].body, succ(succ(zero()))));
}

TEST_CASE("check command") {
    Report ok = run_check(sample("axioms.mint"), Flavor::S4);
    CHECK(ok.exit_code == 0);
    CHECK(ok.lines.size() == 3);

    Report k = run_check(sample("axiom_t.mint"), Flavor::K);
    CHECK(k.exit_code == 1);
    CHECK(mentions(k, "flavor-violation"));

    Report bad = run_check(sample("bad.mint"));
    CHECK(bad.exit_code == 1);
    Report parse = run_check("def x : Nat := ;");
    CHECK(parse.exit_code == 2);
    CHECK(mentions(parse, "parse-error"));
}

TEST_CASE("pragma and flag") {
    std::string src = "#flavor k;\ndef t : [] Nat -> Nat := fn x. unbox 0 x;";
    CHECK(run_check(src).exit_code == 1);
    CHECK(run_check(src, Flavor::T).exit_code == 0);
}

TEST_CASE("norm and eq commands") {
    std::string src = sample("plus11.mint");
    Report e = run_eq(src, "two", "lit_two");
    CHECK(e.exit_code == 0);
    CHECK(mentions(e, "succ (succ zero)"));

    Report n = run_norm(sample("arith.mint"), "six");
    REQUIRE(n.exit_code == 0);
    CHECK(n.lines.back() == "succ (succ (succ (succ (succ (succ zero)))))");

    Report ne = run_eq(sample("arith.mint"), "three", "six");
    CHECK(ne.exit_code == 1);
    CHECK(run_norm(src, "nope").exit_code == 2);
}

TEST_CASE("norm output re-parses and re-checks") {
    for (const char* file : {"arith.mint", "modal.mint", "axioms.mint", "plus11.mint"}) {
        std::string src = sample(file);
        SourceFile f = parse_file(src);
        for (const auto& d : f.defs) {
            Report r = run_norm(src, d.name);
            REQUIRE(r.exit_code == 0);
            TermPtr back = parse_core(r.lines.back());
            Checker ck(f.flavor.value_or(Flavor::S4));
            CHECK_NOTHROW(ck.check_typed(CtxStack::initial(), back, d.type));
            CHECK(equal(back, nbe(CtxStack::initial(), d.body, d.type)));
        }
    }
}

TEST_CASE("reports are deterministic") {
    for (const char* file : {"arith.mint", "bad.mint", "axioms.mint"}) {
        std::string src = sample(file);
        CHECK(run_check(src).text() == run_check(src).text());
    }
}

TEST_CASE("repl session") {
    Repl r;
    CHECK(r.handle(":check fn x. x : Nat -> Nat") == "ok: Nat -> Nat");
    CHECK(r.handle(":norm (fn x. x) zero : Nat") == "zero");
    CHECK(r.handle("def one : Nat := succ zero;") == "defined one");
    CHECK(r.handle(":eq one (succ zero) : Nat") == "equal: succ zero");
    CHECK(r.handle(":eq one zero : Nat").rfind("not-equal", 0) == 0);
    CHECK(r.handle(":flavor k") == "flavor k");
    CHECK(r.handle(":check fn x. unbox 0 x : [] Nat -> Nat").find("flavor-violation") != std::string::npos);
    CHECK(r.handle(":bogus").find("parse-error") != std::string::npos);
    CHECK(r.handle("-- a comment").empty());
    CHECK_FALSE(r.done());
    r.handle(":quit");
    CHECK(r.done());
}
