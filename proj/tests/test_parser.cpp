#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "proslm/errors.hpp"
#include "proslm/lexer.hpp"
#include "proslm/parser.hpp"
#include "proslm/printer.hpp"

using namespace proslm;

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TEST_CASE("lexer token stream") {
    auto toks = tokenize("isOpen(X, 900) :- a, Hour >= 12. % note");
    std::vector<std::string> lexemes;
    for (const auto& t : toks) lexemes.push_back(t.lexeme);
    CHECK(lexemes == std::vector<std::string>{"isOpen", "(", "X", ",", "900", ")", ":-", "a", ",",
                                              "Hour", ">=", "12", ".", "% note", ""});
    CHECK(toks[0].kind == TokenKind::Atom);
    CHECK(toks[2].kind == TokenKind::Variable);
    CHECK(toks[4].kind == TokenKind::Integer);
    CHECK(toks[6].kind == TokenKind::Operator);
    CHECK(toks[10].kind == TokenKind::Operator);
    CHECK(toks[13].kind == TokenKind::Comment);
    CHECK(toks.back().kind == TokenKind::End);
}

TEST_CASE("lexer positions and errors") {
    auto toks = tokenize("a.\n  b.");
    CHECK(toks[0].line == 1);
    CHECK(toks[0].col == 1);
    CHECK(toks[2].line == 2);
    CHECK(toks[2].col == 3);

    CHECK_THROWS_AS(tokenize("12abc"), LexError);
    CHECK_THROWS_AS(tokenize("a :"), LexError);
    CHECK_THROWS_AS(tokenize("a / b"), LexError);
    CHECK_THROWS_AS(tokenize("a ? b"), LexError);
    CHECK_NOTHROW(tokenize("X // Y"));
    CHECK_NOTHROW(tokenize("A =< B"));
}

TEST_CASE("parse facts rules and queries") {
    auto prog = parse_program("p(a).\nq(X) :- p(X), X = a.\n", "t.pl");
    REQUIRE(prog.size() == 2);
    CHECK(prog[0].is_fact());
    CHECK(prog[0].source == "t.pl");
    CHECK(prog[0].source_id == 0);
    CHECK(prog[1].source_id == 1);
    CHECK(prog[1].body.size() == 2);
    CHECK(print_clause(prog[1]) == "q(X) :- p(X), X = a.");

    auto goals = parse_query("p(X), X > 2");
    REQUIRE(goals.size() == 2);
    CHECK(print_term(goals[1]) == "X > 2");
    // Trailing period is optional in queries.
    CHECK(parse_query("p(X).").size() == 1);

    CHECK(print_term(parse_term("[a, b|T]")) == "[a, b|T]");
}

TEST_CASE("comments are skipped") {
    auto prog = parse_program("% header\np(a). % trailing\n% footer\n");
    CHECK(prog.size() == 1);
}

TEST_CASE("integer leading zeros normalize") {
    CHECK(print_term(parse_term("01")) == "1");
    CHECK(print_term(parse_term("007")) == "7");
    CHECK(print_term(parse_term("0")) == "0");
    auto goals = parse_query("drop_classes(priyesh, 01, Y)");
    CHECK(print_term(goals[0]) == "drop_classes(priyesh, 1, Y)");
}

TEST_CASE("operator precedence and associativity") {
    CHECK(print_term(parse_term("1 + 2 * 3")) == "1 + 2 * 3");
    CHECK(print_term(parse_term("(1 + 2) * 3")) == "(1 + 2) * 3");
    CHECK(print_term(parse_term("1 - 2 - 3")) == "1 - 2 - 3");          // left assoc
    CHECK(print_term(parse_term("1 - (2 - 3)")) == "1 - (2 - 3)");      // right needs parens
    CHECK(print_term(parse_term("8 // 2 * 2")) == "8 // 2 * 2");
    CHECK(print_term(parse_term("X is 1 + 2")) == "X is 1 + 2");
    CHECK(print_term(parse_term("Hour > Opening")) == "Hour > Opening");

    // Comparisons are non-associative: chains need parens.
    CHECK_THROWS_AS(parse_term("1 > 2 > 3"), ParseError);
    CHECK(print_term(parse_term("(1 > 2) > 3")) == "(1 > 2) > 3");

    // Structure checks, not just text.
    auto t = parse_term("1 + 2 * 3");
    CHECK(t->name() == "+");
    CHECK(t->args()[1]->name() == "*");
}

TEST_CASE("parse errors carry position and expectation") {
    CHECK_THROWS_AS(parse_program("p(a)"), ParseError);      // missing period
    CHECK_THROWS_AS(parse_program("p(a))."), ParseError);    // stray paren
    CHECK_THROWS_AS(parse_program(":- p(a)."), ParseError);  // no head
    CHECK_THROWS_AS(parse_program("1 :- p(a)."), ParseError);
    CHECK_THROWS_AS(parse_program("X :- p(a)."), ParseError);         // var head
    CHECK_THROWS_AS(parse_program("p(a) :- X."), ParseError);         // var goal
    CHECK_THROWS_AS(parse_program("p(a) :- 12."), ParseError);        // int goal
    CHECK_THROWS_AS(parse_program("p(a) :- ."), ParseError);          // empty body
    CHECK_THROWS_AS(parse_term("[a|b]"), ParseError);                 // non-var tail
    CHECK_THROWS_AS(parse_term("[a|T, b]"), ParseError);
    CHECK_THROWS_AS(parse_query(""), ParseError);
    try {
        parse_program("p(a) :- q(X,.\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col > 1);
        CHECK(std::string(e.what()).find("syntax error") != std::string::npos);
    }
}

TEST_CASE("head must use an identifier functor") {
    CHECK_THROWS_AS(parse_program("X = a."), ParseError);
    CHECK_THROWS_AS(parse_program("1 > 2 :- p."), ParseError);
    CHECK_NOTHROW(parse_program("p(1 > 2)."));  // comparison as argument is data
}

TEST_CASE("parse print identity on random programs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto prog = testsupport::random_program(rng);
        std::string text = print_program(prog);
        std::vector<Clause> reparsed;
        try {
            reparsed = parse_program(text, "<random>");
        } catch (const Error& e) {
            CAPTURE(text);
            FAIL("canonical text failed to parse: ", e.what());
        }
        REQUIRE(reparsed.size() == prog.size());
        for (size_t k = 0; k < prog.size(); ++k) {
            CAPTURE(text);
            CHECK(reparsed[k].same_clause(prog[k]));
        }
        CHECK(print_program(reparsed) == text);
    }
}

TEST_CASE("shipped knowledge base is already canonical") {
    std::string text = slurp("kb/ucsc.pl");
    auto prog = parse_program(text, "ucsc.pl");
    CHECK(prog.size() == 15);
    std::string once = print_program(prog);
    std::string twice = print_program(parse_program(once, "ucsc.pl"));
    CHECK(once == twice);
    // The file differs from its canonical print only by comment lines.
    std::istringstream lines(text);
    std::string stripped;
    for (std::string line; std::getline(lines, line);) {
        if (line.empty() || line[0] == '%') continue;
        stripped += line + "\n";
    }
    CHECK(stripped == once);
}

TEST_CASE("print display-only conjunction") {
    auto conj = Term::compound(",", {Term::compound("=", {Term::var("A"), Term::num(1)}),
                                     Term::compound("=", {Term::var("B"), Term::num(2)})});
    CHECK(print_term(conj) == "A = 1, B = 2");
}

TEST_CASE("renamed variables print with their generation") {
    CHECK(print_term(Term::var("X", 2)) == "X_2");
    CHECK(print_term(Term::var("X")) == "X");
}
