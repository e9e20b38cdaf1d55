#pragma once

#include <optional>

#include "proslm/substitution.hpp"
#include "proslm/term.hpp"

namespace proslm {

// Most general unifier of a and b under the bindings already in seed.
// Returns nullopt on clash; never throws for ordinary failure.
//
// With occurs_check false (the default), unify(X, f(X)) succeeds and stores
// the cyclic-intent binding X -> f(X). apply() is single-pass so this stays
// terminating, but such a substitution is not idempotent; the MGU laws hold
// unconditionally only with occurs_check true.
std::optional<Substitution> unify(const TermPtr& a, const TermPtr& b,
                                  const Substitution& seed = {},
                                  bool occurs_check = false);

}  // namespace proslm
