#include <string>
#include <vector>

#include "doctest.h"
#include "square/clause.hpp"
#include "square/errors.hpp"
#include "square/term.hpp"

using namespace square;

TEST_CASE("terms render in canonical syntax") {
    CHECK(render_term(Term::atom("mary")) == "mary");
    CHECK(render_term(Term::var("Loc")) == "Loc");
    CHECK(render_term(Term::time_point(4)) == "t4");
    CHECK(render_term(Term::compound("agent", {Term::atom("mary")})) ==
          "agent(mary)");
    CHECK(render_term(Term::list({Term::time_point(1), Term::time_point(2)})) ==
          "[t1, t2]");
    CHECK(render_term(Term::nil()) == "[]");
    Term nested = Term::compound(
        "path_rel", {Term::time_point(1),
                     Term::compound("end", {Term::atom("e0")}),
                     Term::compound("destination", {Term::atom("the_garden")}),
                     Term::compound("theme", {Term::atom("the_ball")})});
    CHECK(render_term(nested) ==
          "path_rel(t1, end(e0), destination(the_garden), theme(the_ball))");
}

TEST_CASE("unification binds variables and rejects mismatches") {
    Env env;
    CHECK(unify(Term::var("X"), Term::atom("a"), env));
    CHECK(render_term(walk(Term::var("X"), env)) == "a");

    Env env2;
    CHECK(unify(Term::compound("f", {Term::var("X"), Term::atom("b")}),
                Term::compound("f", {Term::atom("a"), Term::var("Y")}), env2));
    CHECK(render_term(resolve(Term::var("X"), env2)) == "a");
    CHECK(render_term(resolve(Term::var("Y"), env2)) == "b");

    Env env3;
    CHECK_FALSE(unify(Term::atom("a"), Term::atom("b"), env3));
    Env env4;
    CHECK_FALSE(unify(Term::compound("f", {Term::atom("a")}),
                      Term::compound("g", {Term::atom("a")}), env4));
    Env env5;
    CHECK_FALSE(unify(Term::compound("f", {Term::atom("a")}),
                      Term::compound("f", {Term::atom("a"), Term::atom("b")}),
                      env5));
    Env env6;
    CHECK(unify(Term::time_point(3), Term::time_point(3), env6));
    CHECK_FALSE(unify(Term::time_point(3), Term::time_point(4), env6));
    CHECK_FALSE(unify(Term::time_point(3), Term::atom("t3"), env6));
}

TEST_CASE("variable chains walk to their final value") {
    Env env;
    REQUIRE(unify(Term::var("X"), Term::var("Y"), env));
    REQUIRE(unify(Term::var("Y"), Term::atom("end"), env));
    CHECK(render_term(walk(Term::var("X"), env)) == "end");

    Term t = Term::compound("f", {Term::var("X"), Term::var("Z")});
    Term resolved = resolve(t, env);
    CHECK(render_term(resolved) == "f(end, Z)");
    CHECK_FALSE(is_ground(t, env));
    REQUIRE(unify(Term::var("Z"), Term::time_point(1), env));
    CHECK(is_ground(t, env));
}

TEST_CASE("canonical variants are insensitive to variable names") {
    Env empty;
    Term a = Term::compound("f", {Term::var("X"), Term::var("Y"), Term::var("X")});
    Term b = Term::compound("f", {Term::var("A"), Term::var("B"), Term::var("A")});
    Term c = Term::compound("f", {Term::var("A"), Term::var("A"), Term::var("B")});
    CHECK(canonical_variant(a, empty) == canonical_variant(b, empty));
    CHECK(canonical_variant(a, empty) != canonical_variant(c, empty));

    // Bindings participate: f(X) with X=a is a variant of f(a).
    Env env;
    REQUIRE(unify(Term::var("X"), Term::atom("a"), env));
    CHECK(canonical_variant(Term::compound("f", {Term::var("X")}), env) ==
          canonical_variant(Term::compound("f", {Term::atom("a")}), empty));
}

TEST_CASE("lists are cons cells and enumerate their elements") {
    Term list = Term::list({Term::atom("a"), Term::atom("b"), Term::atom("c")});
    CHECK(list.is_cons());
    std::vector<Term> items;
    REQUIRE(list_elements(list, Env{}, items));
    REQUIRE(items.size() == 3);
    CHECK(render_term(items[0]) == "a");
    CHECK(render_term(items[2]) == "c");

    std::vector<Term> none;
    CHECK(list_elements(Term::nil(), Env{}, none));
    CHECK(none.empty());

    // An improper list (non-nil tail) is rejected.
    std::vector<Term> bad;
    CHECK_FALSE(list_elements(Term::cons(Term::atom("a"), Term::atom("b")),
                              Env{}, bad));
}

TEST_CASE("parse_term reads canonical syntax back") {
    Term t = parse_term("path_rel(t4, start(e0), source(X), theme(the_milk))");
    CHECK(render_term(t) ==
          "path_rel(t4, start(e0), source(X), theme(the_milk))");
    CHECK(t.args[0].kind == Term::Kind::Time);
    CHECK(t.args[0].time == 4);
    CHECK(t.args[2].args[0].kind == Term::Kind::Var);

    Term list = parse_term("[t1, t2 | Rest]");
    CHECK(list.is_cons());
    CHECK(render_term(list.args[0]) == "t1");

    // Each anonymous variable is fresh.
    Term anon = parse_term("f(_, _)");
    REQUIRE(anon.args.size() == 2);
    CHECK(anon.args[0].kind == Term::Kind::Var);
    CHECK(anon.args[0].text != anon.args[1].text);

    CHECK_THROWS_AS(parse_term("f(a) extra"), Error);
    CHECK_THROWS_AS(parse_term("f(a"), Error);
    CHECK_THROWS_AS(parse_term(""), Error);
}

TEST_CASE("structural equality ignores nothing") {
    Term a = Term::compound("f", {Term::atom("x"), Term::time_point(2)});
    Term b = Term::compound("f", {Term::atom("x"), Term::time_point(2)});
    CHECK(a == b);
    b.args[1].time = 3;
    CHECK(a != b);
    CHECK(Term::var("X") != Term::atom("X"));
}
