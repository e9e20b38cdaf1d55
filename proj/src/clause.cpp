#include "proslm/clause.hpp"

#include <set>

#include "proslm/errors.hpp"

namespace proslm {

namespace {

TermPtr restamp(const TermPtr& t, int generation) {
    switch (t->kind()) {
        case TermKind::Atom:
        case TermKind::Num:
            return t;
        case TermKind::Var:
            return Term::var(t->name(), generation);
        case TermKind::Compound: {
            std::vector<TermPtr> args;
            args.reserve(t->args().size());
            for (const auto& a : t->args()) args.push_back(restamp(a, generation));
            return Term::compound(t->name(), std::move(args));
        }
        case TermKind::List: {
            std::vector<TermPtr> elems;
            elems.reserve(t->args().size());
            for (const auto& e : t->args()) elems.push_back(restamp(e, generation));
            TermPtr tail = t->tail() ? restamp(t->tail(), generation) : nullptr;
            return Term::list(std::move(elems), tail);
        }
    }
    return t;
}

}  // namespace

bool Clause::same_clause(const Clause& o) const {
    if (!head->equals(*o.head)) return false;
    if (body.size() != o.body.size()) return false;
    for (size_t i = 0; i < body.size(); ++i)
        if (!body[i]->equals(*o.body[i])) return false;
    return true;
}

Clause rename_apart(const Clause& c, int generation) {
    Clause out;
    out.head = restamp(c.head, generation);
    out.body.reserve(c.body.size());
    for (const auto& g : c.body) out.body.push_back(restamp(g, generation));
    out.source_id = c.source_id;
    out.source = c.source;
    return out;
}

PredicateKey predicate_of(const TermPtr& head) {
    if (head->is_atom()) return PredicateKey{head->name(), 0};
    if (head->is_compound()) return PredicateKey{head->name(), head->args().size()};
    throw InternalError("clause head must be an atom or compound term");
}

KnowledgeBase::KnowledgeBase(std::vector<Clause> clauses, std::string source)
    : clauses_(std::move(clauses)) {
    for (auto& c : clauses_)
        if (c.source == "<input>" && source != "<input>") c.source = source;
    reindex();
}

const std::vector<size_t>& KnowledgeBase::matching(const PredicateKey& k) const {
    static const std::vector<size_t> none;
    auto it = index_.find(k);
    return it == index_.end() ? none : it->second;
}

KnowledgeBase KnowledgeBase::asserted(Clause c) const {
    KnowledgeBase out = *this;
    out.clauses_.push_back(std::move(c));
    out.reindex();
    return out;
}

KnowledgeBase KnowledgeBase::retracted(const Clause& c) const {
    for (size_t i = 0; i < clauses_.size(); ++i) {
        if (clauses_[i].same_clause(c)) {
            KnowledgeBase out = *this;
            out.clauses_.erase(out.clauses_.begin() + static_cast<long>(i));
            out.reindex();
            return out;
        }
    }
    throw NotFoundError("no matching clause to retract");
}

std::vector<std::string> KnowledgeBase::predicates() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& c : clauses_) {
        PredicateKey k = predicate_of(c.head);
        std::string label = k.functor + "/" + std::to_string(k.arity);
        if (seen.insert(label).second) out.push_back(label);
    }
    return out;
}

void KnowledgeBase::reindex() {
    index_.clear();
    for (size_t i = 0; i < clauses_.size(); ++i) {
        clauses_[i].source_id = static_cast<int>(i);
        index_[predicate_of(clauses_[i].head)].push_back(i);
    }
}

}  // namespace proslm
