#include "proslm/printer.hpp"

#include <sstream>

#include "proslm/ops.hpp"

namespace proslm {

namespace {

int term_priority(const TermPtr& t) {
    if (t->is_compound() && t->args().size() == 2) {
        if (t->name() == ",") return 1000;
        return infix_priority(t->name());
    }
    return 0;
}

void write_term(std::ostream& os, const TermPtr& t, int max_priority);

void write_args(std::ostream& os, const std::vector<TermPtr>& args) {
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) os << ", ";
        // Argument positions accept full goals (priority 700).
        write_term(os, args[i], 700);
    }
}

void write_term(std::ostream& os, const TermPtr& t, int max_priority) {
    switch (t->kind()) {
        case TermKind::Atom:
            os << t->name();
            return;
        case TermKind::Num:
            os << t->value();
            return;
        case TermKind::Var:
            os << t->name();
            if (t->generation() > 0) os << '_' << t->generation();
            return;
        case TermKind::List: {
            os << '[';
            write_args(os, t->args());
            if (t->tail()) {
                os << '|';
                write_term(os, t->tail(), 0);
            }
            os << ']';
            return;
        }
        case TermKind::Compound: {
            int prio = term_priority(t);
            if (t->name() == "," && t->args().size() == 2) {
                // Display-only conjunction; never parenthesized, never parsed.
                write_term(os, t->args()[0], 1000);
                os << ", ";
                write_term(os, t->args()[1], 1000);
                return;
            }
            if (prio > 0) {
                bool parens = prio > max_priority;
                if (parens) os << '(';
                // Left slot of a left-associative operator admits its own
                // priority; comparisons (non-associative) do not.
                int left_max = prio == 700 ? prio - 1 : prio;
                write_term(os, t->args()[0], left_max);
                os << ' ' << t->name() << ' ';
                write_term(os, t->args()[1], prio - 1);
                if (parens) os << ')';
                return;
            }
            os << t->name() << '(';
            write_args(os, t->args());
            os << ')';
            return;
        }
    }
}

}  // namespace

std::string print_term(const TermPtr& t) {
    std::ostringstream os;
    write_term(os, t, 1000);
    return os.str();
}

std::string print_clause(const Clause& c) {
    std::ostringstream os;
    write_term(os, c.head, 700);
    if (!c.body.empty()) {
        os << " :- ";
        for (size_t i = 0; i < c.body.size(); ++i) {
            if (i) os << ", ";
            write_term(os, c.body[i], 700);
        }
    }
    os << '.';
    return os.str();
}

std::string print_program(const std::vector<Clause>& clauses) {
    std::ostringstream os;
    for (const auto& c : clauses) os << print_clause(c) << '\n';
    return os.str();
}

std::string print_goals(const std::vector<TermPtr>& goals) {
    std::ostringstream os;
    for (size_t i = 0; i < goals.size(); ++i) {
        if (i) os << ", ";
        write_term(os, goals[i], 700);
    }
    return os.str();
}

}  // namespace proslm
