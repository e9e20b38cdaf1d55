#include "proslm/parser.hpp"

#include <cstdlib>

#include "proslm/errors.hpp"
#include "proslm/lexer.hpp"
#include "proslm/ops.hpp"

namespace proslm {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) {
        for (auto& t : tokenize(text))
            if (t.kind != TokenKind::Comment) tokens_.push_back(std::move(t));
    }

    std::vector<Clause> program(const std::string& source) {
        std::vector<Clause> out;
        while (!at_end()) {
            Clause c = clause(source);
            c.source_id = static_cast<int>(out.size());
            out.push_back(std::move(c));
        }
        return out;
    }

    std::vector<TermPtr> query() {
        std::vector<TermPtr> goals = goal_list();
        if (is_punct(".")) next();
        if (!at_end()) fail("trailing input after query", "end of input");
        for (const auto& g : goals) require_callable(g);
        return goals;
    }

    TermPtr single_term() {
        TermPtr t = goal();
        if (is_punct(".")) next();
        if (!at_end()) fail("trailing input after term", "end of input");
        return t;
    }

private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool at_end() const { return peek().kind == TokenKind::End; }

    bool is_punct(const char* p) const {
        return peek().kind == TokenKind::Punct && peek().lexeme == p;
    }
    bool is_operator(const char* p) const {
        return peek().kind == TokenKind::Operator && peek().lexeme == p;
    }

    [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
        const Token& t = peek();
        std::string got = t.kind == TokenKind::End
                              ? msg
                              : msg + ", got " + token_kind_name(t.kind) + " '" + t.lexeme + "'";
        throw ParseError(t.line, t.col, got, expected);
    }

    void expect_punct(const char* p) {
        if (!is_punct(p)) fail("unexpected token", std::string("'") + p + "'");
        next();
    }

    Clause clause(const std::string& source) {
        Clause c;
        c.source = source;
        c.head = goal();
        if (!is_head_shape(c.head)) {
            const Token& t = peek();
            throw ParseError(t.line, t.col,
                             "clause head must be an atom or a compound term with an "
                             "identifier functor");
        }
        if (is_operator(":-")) {
            next();
            c.body = goal_list();
            for (const auto& g : c.body) require_callable(g);
        }
        expect_punct(".");
        return c;
    }

    std::vector<TermPtr> goal_list() {
        std::vector<TermPtr> out;
        out.push_back(goal());
        while (is_punct(",")) {
            next();
            out.push_back(goal());
        }
        return out;
    }

    // goal := arith (cmpop arith)?   -- comparisons do not chain
    TermPtr goal() {
        TermPtr left = arith();
        if (peek().kind == TokenKind::Operator && is_comparison_op(peek().lexeme)) {
            std::string op = next().lexeme;
            TermPtr right = arith();
            return Term::compound(op, {left, right});
        }
        if (peek().kind == TokenKind::Atom && peek().lexeme == "is") {
            // "X is E": 'is' lexes as an atom but acts as a comparison-level
            // operator.
            next();
            TermPtr right = arith();
            return Term::compound("is", {left, right});
        }
        return left;
    }

    TermPtr arith() {
        TermPtr t = product();
        while (peek().kind == TokenKind::Operator && is_additive_op(peek().lexeme)) {
            std::string op = next().lexeme;
            t = Term::compound(op, {t, product()});
        }
        return t;
    }

    TermPtr product() {
        TermPtr t = primary();
        while (peek().kind == TokenKind::Operator && is_multiplicative_op(peek().lexeme)) {
            std::string op = next().lexeme;
            t = Term::compound(op, {t, primary()});
        }
        return t;
    }

    TermPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Integer: {
                next();
                // strtoll normalizes leading zeros: 01 becomes 1.
                return Term::num(std::strtoll(t.lexeme.c_str(), nullptr, 10));
            }
            case TokenKind::Variable: {
                next();
                return Term::var(t.lexeme);
            }
            case TokenKind::Atom: {
                std::string name = next().lexeme;
                if (!is_punct("(")) return Term::atom(name);
                next();
                std::vector<TermPtr> args = goal_list();
                expect_punct(")");
                return Term::compound(name, std::move(args));
            }
            case TokenKind::Punct:
                if (t.lexeme == "[") return list();
                if (t.lexeme == "(") {
                    next();
                    TermPtr inner = goal();
                    expect_punct(")");
                    return inner;
                }
                break;
            default:
                break;
        }
        fail("unexpected token", "a term");
    }

    TermPtr list() {
        expect_punct("[");
        if (is_punct("]")) {
            next();
            return Term::list({});
        }
        std::vector<TermPtr> elems;
        elems.push_back(goal());
        while (is_punct(",")) {
            next();
            elems.push_back(goal());
        }
        TermPtr tail;
        if (is_punct("|")) {
            next();
            if (peek().kind != TokenKind::Variable)
                fail("list tail must be a variable", "variable");
            tail = Term::var(next().lexeme);
        }
        expect_punct("]");
        return Term::list(std::move(elems), tail);
    }

    static bool is_head_shape(const TermPtr& t) {
        if (t->is_atom()) return true;
        return t->is_compound() && infix_priority(t->name()) == 0 && t->name() != "is";
    }

    void require_callable(const TermPtr& g) const {
        if (g->is_atom() || g->is_compound()) return;
        const Token& t = peek();
        throw ParseError(t.line, t.col, "goal must be callable, not a " +
                                            std::string(g->is_var() ? "variable"
                                                        : g->is_num() ? "number"
                                                                      : "list"));
    }
};

}  // namespace

std::vector<Clause> parse_program(const std::string& text, const std::string& source) {
    return Parser(text).program(source);
}

std::vector<TermPtr> parse_query(const std::string& text) {
    return Parser(text).query();
}

TermPtr parse_term(const std::string& text) {
    return Parser(text).single_term();
}

}  // namespace proslm
