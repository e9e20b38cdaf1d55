#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "proslm/clause.hpp"
#include "proslm/errors.hpp"
#include "proslm/printer.hpp"
#include "proslm/substitution.hpp"
#include "proslm/term.hpp"
#include "proslm/unify.hpp"

using namespace proslm;

TEST_CASE("term factories and accessors") {
    auto a = Term::atom("pool");
    CHECK(a->is_atom());
    CHECK(a->name() == "pool");
    CHECK(a->is_ground());

    auto n = Term::num(1100);
    CHECK(n->is_num());
    CHECK(n->value() == 1100);

    auto v = Term::var("Hour");
    CHECK(v->is_var());
    CHECK(v->generation() == 0);
    CHECK_FALSE(v->is_ground());

    auto c = Term::compound("isOpen", {a, n, v});
    CHECK(c->is_compound());
    CHECK(c->args().size() == 3);
    CHECK_FALSE(c->is_ground());

    auto l = Term::list({a, n});
    CHECK(l->is_list());
    CHECK(l->is_ground());
    auto lt = Term::list({a}, Term::var("T"));
    CHECK_FALSE(lt->is_ground());
}

TEST_CASE("term name validation") {
    CHECK_THROWS_AS(Term::atom("Bad"), std::invalid_argument);
    CHECK_THROWS_AS(Term::atom(""), std::invalid_argument);
    CHECK_THROWS_AS(Term::atom("has space"), std::invalid_argument);
    CHECK_THROWS_AS(Term::var("lower"), std::invalid_argument);
    CHECK_THROWS_AS(Term::compound("9f", {Term::num(1)}), std::invalid_argument);
    // Operator functors are legitimate compound names.
    CHECK_NOTHROW(Term::compound(">", {Term::num(1), Term::num(2)}));
    CHECK_NOTHROW(Term::compound("is", {Term::var("X"), Term::num(2)}));
    // Underscore-led variables are fine.
    CHECK_NOTHROW(Term::var("_G1"));
}

TEST_CASE("structural equality distinguishes kind, name and generation") {
    CHECK(equal_terms(Term::atom("a"), Term::atom("a")));
    CHECK_FALSE(equal_terms(Term::atom("a"), Term::atom("b")));
    CHECK_FALSE(equal_terms(Term::atom("a"), Term::num(1)));
    CHECK(equal_terms(Term::var("X"), Term::var("X")));
    CHECK_FALSE(equal_terms(Term::var("X"), Term::var("X", 1)));
    CHECK(equal_terms(Term::compound("f", {Term::var("X")}),
                      Term::compound("f", {Term::var("X")})));
    CHECK_FALSE(equal_terms(Term::list({Term::atom("a")}), Term::list({})));
    CHECK_FALSE(equal_terms(Term::list({Term::atom("a")}, Term::var("T")),
                            Term::list({Term::atom("a")})));
}

TEST_CASE("collect_vars is first-occurrence depth-first order") {
    auto t = Term::compound(
        "f", {Term::var("B"), Term::compound("g", {Term::var("A"), Term::var("B")}),
              Term::list({Term::var("C")}, Term::var("T"))});
    auto vars = collect_vars(t);
    REQUIRE(vars.size() == 4);
    CHECK(vars[0]->name() == "B");
    CHECK(vars[1]->name() == "A");
    CHECK(vars[2]->name() == "C");
    CHECK(vars[3]->name() == "T");
}

TEST_CASE("substitution apply and extended keep idempotence") {
    Substitution s;
    s = s.extended(VarKey{"X", 0}, Term::atom("a"));
    CHECK(print_term(s.apply(Term::compound("f", {Term::var("X"), Term::var("Y")}))) ==
          "f(a, Y)");

    // Extending with a term that mentions an already-bound variable
    // resolves it first: Y -> g(X) stores Y -> g(a).
    s = s.extended(VarKey{"Y", 0}, Term::compound("g", {Term::var("X")}));
    CHECK(print_term(s.apply(Term::var("Y"))) == "g(a)");

    // Later bindings rewrite earlier right-hand sides mentioning the new
    // variable, so apply stays single-pass.
    Substitution s2;
    s2 = s2.extended(VarKey{"A", 0}, Term::compound("f", {Term::var("B")}));
    s2 = s2.extended(VarKey{"B", 0}, Term::atom("b"));
    CHECK(print_term(s2.apply(Term::var("A"))) == "f(b)");

    // Conflicting rebind is a bug upstream.
    CHECK_THROWS_AS(s.extended(VarKey{"X", 0}, Term::atom("b")), InternalError);
    // Identical rebind is a no-op.
    CHECK_NOTHROW(s.extended(VarKey{"X", 0}, Term::atom("a")));
}

TEST_CASE("substitution splices bound list tails") {
    Substitution s;
    s = s.extended(VarKey{"T", 0}, Term::list({Term::atom("b"), Term::atom("c")}));
    auto spliced = s.apply(Term::list({Term::atom("a")}, Term::var("T")));
    CHECK(print_term(spliced) == "[a, b, c]");
    CHECK(spliced->is_list());
    CHECK(spliced->args().size() == 3);
    CHECK_FALSE(spliced->tail());

    // Tail bound to a partial list keeps the inner tail.
    Substitution s2;
    s2 = s2.extended(VarKey{"T", 0}, Term::list({Term::atom("b")}, Term::var("R")));
    auto partial = s2.apply(Term::list({Term::atom("a")}, Term::var("T")));
    CHECK(print_term(partial) == "[a, b|R]");
}

TEST_CASE("unify basics") {
    auto got = unify(Term::atom("a"), Term::atom("a"));
    REQUIRE(got);
    CHECK(got->empty());

    CHECK_FALSE(unify(Term::atom("a"), Term::atom("b")));
    CHECK_FALSE(unify(Term::num(1), Term::num(2)));
    CHECK_FALSE(unify(Term::atom("a"), Term::num(1)));

    auto s = unify(Term::var("X"), Term::atom("a"));
    REQUIRE(s);
    CHECK(print_term(s->apply(Term::var("X"))) == "a");

    s = unify(Term::compound("f", {Term::var("X"), Term::num(2)}),
              Term::compound("f", {Term::num(1), Term::var("Y")}));
    REQUIRE(s);
    CHECK(print_term(s->apply(Term::var("X"))) == "1");
    CHECK(print_term(s->apply(Term::var("Y"))) == "2");

    CHECK_FALSE(unify(Term::compound("f", {Term::var("X")}),
                      Term::compound("g", {Term::var("X")})));
    CHECK_FALSE(unify(Term::compound("f", {Term::var("X")}),
                      Term::compound("f", {Term::var("X"), Term::var("Y")})));
}

TEST_CASE("unify variable-variable chains") {
    auto s = unify(Term::var("X"), Term::var("Y"));
    REQUIRE(s);
    CHECK(equal_terms(s->apply(Term::var("X")), s->apply(Term::var("Y"))));

    // X = Y then X = a must push a through to Y.
    auto s2 = unify(Term::var("X"), Term::atom("a"), *s);
    REQUIRE(s2);
    CHECK(print_term(s2->apply(Term::var("Y"))) == "a");
}

TEST_CASE("unify lists with variable tails") {
    auto s = unify(Term::list({Term::atom("a"), Term::atom("b")}),
                   Term::list({Term::var("H")}, Term::var("T")));
    REQUIRE(s);
    CHECK(print_term(s->apply(Term::var("H"))) == "a");
    CHECK(print_term(s->apply(Term::var("T"))) == "[b]");

    // Tail unifies with the empty remainder.
    auto s2 = unify(Term::list({Term::atom("a")}, Term::var("T")),
                    Term::list({Term::atom("a")}));
    REQUIRE(s2);
    CHECK(print_term(s2->apply(Term::var("T"))) == "[]");

    // Length clash on proper lists fails, including through tails.
    CHECK_FALSE(unify(Term::list({Term::atom("a")}), Term::list({})));
    CHECK_FALSE(unify(Term::list({Term::atom("a"), Term::atom("b")}, Term::var("T")),
                      Term::list({Term::atom("x")})));
}

TEST_CASE("occurs check is opt-in") {
    auto cyclic = unify(Term::var("X"), Term::compound("f", {Term::var("X")}));
    CHECK(cyclic);  // default off: succeeds with the cyclic-intent binding
    CHECK_FALSE(unify(Term::var("X"), Term::compound("f", {Term::var("X")}), {}, true));
    // Indirect cycle through another variable.
    Substitution seed;
    seed = seed.extended(VarKey{"Y", 0}, Term::compound("g", {Term::var("X")}));
    CHECK_FALSE(unify(Term::var("X"), Term::var("Y"), seed, true));
}

TEST_CASE("mgu laws hold with occurs check on") {
    std::mt19937_64 rng(7);
    int unified = 0;
    for (int i = 0; i < 300; ++i) {
        auto a = testsupport::random_unify_term(rng);
        auto b = testsupport::random_unify_term(rng);
        auto ab = unify(a, b, {}, true);
        auto ba = unify(b, a, {}, true);
        CHECK(ab.has_value() == ba.has_value());
        if (!ab) continue;
        ++unified;
        auto ra = ab->apply(a);
        auto rb = ab->apply(b);
        CHECK(equal_terms(ra, rb));
        CHECK(equal_terms(ab->apply(ra), ra));  // idempotent
        CHECK(testsupport::alpha_equal(ra, ba->apply(b)));
    }
    CHECK(unified > 20);  // generator produces a healthy mix
}

TEST_CASE("clause rename_apart stamps every variable") {
    Clause c;
    c.head = Term::compound("p", {Term::var("X"), Term::var("Y")});
    c.body = {Term::compound("q", {Term::var("X"), Term::list({Term::var("Z")}, Term::var("T"))})};
    Clause r = rename_apart(c, 3);
    CHECK(print_term(r.head) == "p(X_3, Y_3)");
    CHECK(print_term(r.body[0]) == "q(X_3, [Z_3|T_3])");
    // Original untouched.
    CHECK(print_term(c.head) == "p(X, Y)");
    // Distinct generations never collide.
    Clause r2 = rename_apart(c, 4);
    CHECK_FALSE(unify(r.head, r2.head)->empty());
}

TEST_CASE("knowledge base indexing, assert and retract") {
    Clause f1{Term::compound("p", {Term::atom("a")}), {}, -1, "<t>"};
    Clause f2{Term::compound("p", {Term::atom("b")}), {}, -1, "<t>"};
    Clause r1{Term::compound("q", {Term::var("X")}),
              {Term::compound("p", {Term::var("X")})},
              -1,
              "<t>"};
    KnowledgeBase kb({f1, f2, r1}, "<t>");
    CHECK(kb.size() == 3);
    CHECK(kb.clause(0).source_id == 0);
    CHECK(kb.clause(2).source_id == 2);
    CHECK(kb.matching(PredicateKey{"p", 1}).size() == 2);
    CHECK(kb.matching(PredicateKey{"q", 1}).size() == 1);
    CHECK(kb.matching(PredicateKey{"r", 0}).empty());
    CHECK(kb.predicates() == std::vector<std::string>{"p/1", "q/1"});

    KnowledgeBase kb2 = kb.asserted(Clause{Term::atom("r"), {}, -1, "<t>"});
    CHECK(kb2.size() == 4);
    CHECK(kb.size() == 3);  // value semantics: original unchanged
    CHECK(kb2.clause(3).source_id == 3);

    KnowledgeBase kb3 = kb2.retracted(f1);
    CHECK(kb3.size() == 3);
    CHECK(kb3.clause(0).same_clause(f2));
    CHECK(kb3.clause(0).source_id == 0);  // ids reassigned
    CHECK_THROWS_AS(kb3.retracted(f1), NotFoundError);
}

TEST_CASE("same_clause ignores bookkeeping") {
    Clause a{Term::atom("p"), {}, 0, "one.pl"};
    Clause b{Term::atom("p"), {}, 9, "two.pl"};
    CHECK(a.same_clause(b));
    Clause c{Term::atom("p"), {Term::atom("q")}, 0, "one.pl"};
    CHECK_FALSE(a.same_clause(c));
}
