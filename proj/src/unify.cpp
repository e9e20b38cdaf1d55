#include "proslm/unify.hpp"

namespace proslm {

namespace {

bool occurs(const TermPtr& t, const VarKey& v) {
    switch (t->kind()) {
        case TermKind::Atom:
        case TermKind::Num:
            return false;
        case TermKind::Var:
            return var_key(t) == v;
        case TermKind::Compound:
        case TermKind::List:
            for (const auto& a : t->args())
                if (occurs(a, v)) return true;
            return t->tail() && occurs(t->tail(), v);
    }
    return false;
}

// Remainder of a list from element index `from`: the tail variable, the
// empty list, or a fresh list of the leftover elements.
TermPtr rest_of(const TermPtr& l, size_t from) {
    if (from == l->args().size())
        return l->tail() ? l->tail() : Term::list({});
    std::vector<TermPtr> elems(l->args().begin() + static_cast<long>(from), l->args().end());
    return Term::list(std::move(elems), l->tail());
}

bool unify_rec(const TermPtr& ra, const TermPtr& rb, Substitution& s, bool oc) {
    TermPtr a = s.apply(ra);
    TermPtr b = s.apply(rb);

    if (a->is_var()) {
        if (b->is_var() && var_key(a) == var_key(b)) return true;
        if (oc && occurs(b, var_key(a))) return false;
        s = s.extended(var_key(a), b);
        return true;
    }
    if (b->is_var()) {
        if (oc && occurs(a, var_key(b))) return false;
        s = s.extended(var_key(b), a);
        return true;
    }
    if (a->kind() != b->kind()) return false;

    switch (a->kind()) {
        case TermKind::Atom:
            return a->name() == b->name();
        case TermKind::Num:
            return a->value() == b->value();
        case TermKind::Compound: {
            if (a->name() != b->name() || a->args().size() != b->args().size()) return false;
            for (size_t i = 0; i < a->args().size(); ++i)
                if (!unify_rec(a->args()[i], b->args()[i], s, oc)) return false;
            return true;
        }
        case TermKind::List: {
            size_t n = std::min(a->args().size(), b->args().size());
            for (size_t i = 0; i < n; ++i)
                if (!unify_rec(a->args()[i], b->args()[i], s, oc)) return false;
            TermPtr rest_a = rest_of(s.apply(a), n);
            TermPtr rest_b = rest_of(s.apply(b), n);
            if (rest_a->is_var() || rest_b->is_var())
                return unify_rec(rest_a, rest_b, s, oc);
            // Both rests are lists. Equal-empty succeeds, one-sided leftover
            // fails, and two nonempty rests (a spliced tail on each side)
            // recurse with guaranteed progress.
            if (rest_a->args().empty() && rest_b->args().empty()) return true;
            if (rest_a->args().empty() || rest_b->args().empty()) return false;
            return unify_rec(rest_a, rest_b, s, oc);
        }
        default:
            return false;
    }
}

}  // namespace

std::optional<Substitution> unify(const TermPtr& a, const TermPtr& b,
                                  const Substitution& seed, bool occurs_check) {
    Substitution s = seed;
    if (!unify_rec(a, b, s, occurs_check)) return std::nullopt;
    return s;
}

}  // namespace proslm
