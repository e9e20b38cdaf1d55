#pragma once

#include <map>
#include <optional>

#include "proslm/term.hpp"

namespace proslm {

// Idempotent variable binding set. Invariant: no right-hand side mentions a
// variable bound on the left, so apply() never needs to iterate to a fixpoint.
class Substitution {
public:
    Substitution() = default;

    bool empty() const { return bindings_.empty(); }
    size_t size() const { return bindings_.size(); }

    bool binds(const VarKey& v) const { return bindings_.count(v) > 0; }
    std::optional<TermPtr> lookup(const VarKey& v) const;

    // Applies the bindings to t. Result contains no bound variable.
    TermPtr apply(const TermPtr& t) const;

    // Returns this extended with v -> t, keeping idempotence: t is first
    // resolved through the current bindings, then existing right-hand sides
    // mentioning v are rewritten. Throws InternalError if v is already bound
    // to a different term; unification never rebinds.
    Substitution extended(const VarKey& v, const TermPtr& t) const;

    // Ordered iteration (generation, then name).
    auto begin() const { return bindings_.begin(); }
    auto end() const { return bindings_.end(); }

    bool operator==(const Substitution& o) const;

private:
    std::map<VarKey, TermPtr> bindings_;
};

}  // namespace proslm
