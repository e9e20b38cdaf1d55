#include "proslm/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace proslm {

namespace {

bool is_identifier_atom(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

bool is_identifier_var(const std::string& s) {
    if (s.empty()) return false;
    unsigned char c0 = static_cast<unsigned char>(s[0]);
    if (!std::isupper(c0) && c0 != '_') return false;
    return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

// Operators are legitimate functors: comparisons parse to binary compounds.
bool is_operator_functor(const std::string& s) {
    static const std::set<std::string> ops = {">", "<", ">=", "=<", "=", "is",
                                              "+", "-", "*", "//", ","};
    return ops.count(s) > 0;
}

}  // namespace

TermPtr Term::atom(std::string name) {
    if (!is_identifier_atom(name))
        throw std::invalid_argument("invalid atom name: '" + name + "'");
    auto t = std::shared_ptr<Term>(new Term());
    t->kind_ = TermKind::Atom;
    t->name_ = std::move(name);
    return t;
}

TermPtr Term::num(long long value) {
    auto t = std::shared_ptr<Term>(new Term());
    t->kind_ = TermKind::Num;
    t->value_ = value;
    return t;
}

TermPtr Term::var(std::string name, int generation) {
    if (!is_identifier_var(name))
        throw std::invalid_argument("invalid variable name: '" + name + "'");
    auto t = std::shared_ptr<Term>(new Term());
    t->kind_ = TermKind::Var;
    t->name_ = std::move(name);
    t->generation_ = generation;
    return t;
}

TermPtr Term::compound(std::string functor, std::vector<TermPtr> args) {
    if (args.empty())
        throw std::invalid_argument("compound term needs at least one argument: '" + functor + "'");
    if (!is_identifier_atom(functor) && !is_operator_functor(functor))
        throw std::invalid_argument("invalid functor: '" + functor + "'");
    for (const auto& a : args)
        if (!a) throw std::invalid_argument("null argument in compound '" + functor + "'");
    auto t = std::shared_ptr<Term>(new Term());
    t->kind_ = TermKind::Compound;
    t->name_ = std::move(functor);
    t->args_ = std::move(args);
    return t;
}

TermPtr Term::list(std::vector<TermPtr> elements, TermPtr tail) {
    for (const auto& e : elements)
        if (!e) throw std::invalid_argument("null element in list");
    if (tail && !tail->is_var())
        throw std::invalid_argument("list tail must be a variable");
    if (tail && elements.empty())
        throw std::invalid_argument("list with a tail needs at least one element");
    auto t = std::shared_ptr<Term>(new Term());
    t->kind_ = TermKind::List;
    t->args_ = std::move(elements);
    t->tail_ = std::move(tail);
    return t;
}

bool Term::is_ground() const {
    switch (kind_) {
        case TermKind::Atom:
        case TermKind::Num:
            return true;
        case TermKind::Var:
            return false;
        case TermKind::Compound:
        case TermKind::List:
            if (tail_) return false;
            return std::all_of(args_.begin(), args_.end(),
                               [](const TermPtr& a) { return a->is_ground(); });
    }
    return false;
}

bool Term::equals(const Term& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case TermKind::Atom:
            return name_ == other.name_;
        case TermKind::Num:
            return value_ == other.value_;
        case TermKind::Var:
            return name_ == other.name_ && generation_ == other.generation_;
        case TermKind::Compound:
        case TermKind::List: {
            if (kind_ == TermKind::Compound && name_ != other.name_) return false;
            if (args_.size() != other.args_.size()) return false;
            for (size_t i = 0; i < args_.size(); ++i)
                if (!args_[i]->equals(*other.args_[i])) return false;
            if (static_cast<bool>(tail_) != static_cast<bool>(other.tail_)) return false;
            if (tail_ && !tail_->equals(*other.tail_)) return false;
            return true;
        }
    }
    return false;
}

void Term::collect_vars(std::vector<TermPtr>& out) const {
    switch (kind_) {
        case TermKind::Atom:
        case TermKind::Num:
            return;
        case TermKind::Var: {
            for (const auto& v : out)
                if (v->equals(*this)) return;
            // Reconstruct a TermPtr for this variable; variables are small.
            out.push_back(Term::var(name_, generation_));
            return;
        }
        case TermKind::Compound:
        case TermKind::List:
            for (const auto& a : args_) a->collect_vars(out);
            if (tail_) tail_->collect_vars(out);
            return;
    }
}

bool equal_terms(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->equals(*b);
}

std::vector<TermPtr> collect_vars(const TermPtr& t) {
    std::vector<TermPtr> out;
    if (t) t->collect_vars(out);
    return out;
}

}  // namespace proslm
