#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "proslm/term.hpp"

namespace proslm {

// Definite clause: a head and a (possibly empty) body. A fact is a clause
// with an empty body. source_id is the clause's position in its knowledge
// base; source names the file or input it was read from.
struct Clause {
    TermPtr head;
    std::vector<TermPtr> body;
    int source_id = -1;
    std::string source = "<input>";

    bool is_fact() const { return body.empty(); }
    // Structural equality of head and body; ignores source bookkeeping.
    bool same_clause(const Clause& o) const;
};

// Fresh copy of c with every variable stamped with `generation`, so it shares
// no variables with any other renaming (standardize apart).
Clause rename_apart(const Clause& c, int generation);

struct PredicateKey {
    std::string functor;
    size_t arity = 0;
    bool operator<(const PredicateKey& o) const {
        if (functor != o.functor) return functor < o.functor;
        return arity < o.arity;
    }
};

PredicateKey predicate_of(const TermPtr& head);

// Ordered clause store. Value type: assert/retract return a modified copy so
// snapshots taken by long-running queries stay stable.
class KnowledgeBase {
public:
    KnowledgeBase() = default;
    explicit KnowledgeBase(std::vector<Clause> clauses, std::string source = "<input>");

    size_t size() const { return clauses_.size(); }
    const Clause& clause(size_t id) const { return clauses_.at(id); }
    const std::vector<Clause>& clauses() const { return clauses_; }

    // Clause ids for a predicate, in source order. Empty when unknown.
    const std::vector<size_t>& matching(const PredicateKey& k) const;

    // New base with c appended (source order preserved, ids reassigned).
    KnowledgeBase asserted(Clause c) const;
    // New base without the first clause structurally equal to c.
    // Throws NotFoundError when no clause matches.
    KnowledgeBase retracted(const Clause& c) const;

    // Distinct predicates in first-appearance order, e.g. "status/4".
    std::vector<std::string> predicates() const;

private:
    void reindex();

    std::vector<Clause> clauses_;
    std::map<PredicateKey, std::vector<size_t>> index_;
};

using KnowledgeBasePtr = std::shared_ptr<const KnowledgeBase>;

}  // namespace proslm
