#include "proslm/substitution.hpp"

#include "proslm/errors.hpp"

namespace proslm {

namespace {

TermPtr apply_map(const std::map<VarKey, TermPtr>& m, const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::Atom:
        case TermKind::Num:
            return t;
        case TermKind::Var: {
            auto it = m.find(var_key(t));
            return it == m.end() ? t : it->second;
        }
        case TermKind::Compound: {
            bool changed = false;
            std::vector<TermPtr> args;
            args.reserve(t->args().size());
            for (const auto& a : t->args()) {
                args.push_back(apply_map(m, a));
                changed = changed || args.back() != a;
            }
            return changed ? Term::compound(t->name(), std::move(args)) : t;
        }
        case TermKind::List: {
            bool changed = false;
            std::vector<TermPtr> elems;
            elems.reserve(t->args().size());
            for (const auto& e : t->args()) {
                elems.push_back(apply_map(m, e));
                changed = changed || elems.back() != e;
            }
            TermPtr tail = t->tail();
            if (tail) {
                TermPtr bound = apply_map(m, tail);
                if (bound != tail) {
                    changed = true;
                    // A tail bound to a list splices; bound to a variable it
                    // stays a tail. Anything else cannot occur because list
                    // tails only ever unify with lists or variables.
                    if (bound->is_list()) {
                        for (const auto& e : bound->args()) elems.push_back(e);
                        tail = bound->tail();
                    } else if (bound->is_var()) {
                        tail = bound;
                    } else {
                        throw InternalError("list tail bound to a non-list term");
                    }
                }
            }
            return changed ? Term::list(std::move(elems), tail) : t;
        }
    }
    return t;
}

bool mentions(const TermPtr& t, const VarKey& v) {
    switch (t->kind()) {
        case TermKind::Atom:
        case TermKind::Num:
            return false;
        case TermKind::Var:
            return var_key(t) == v;
        case TermKind::Compound:
        case TermKind::List:
            for (const auto& a : t->args())
                if (mentions(a, v)) return true;
            return t->tail() && mentions(t->tail(), v);
    }
    return false;
}

}  // namespace

std::optional<TermPtr> Substitution::lookup(const VarKey& v) const {
    auto it = bindings_.find(v);
    if (it == bindings_.end()) return std::nullopt;
    return it->second;
}

TermPtr Substitution::apply(const TermPtr& t) const {
    return apply_map(bindings_, t);
}

Substitution Substitution::extended(const VarKey& v, const TermPtr& t) const {
    TermPtr resolved = apply(t);
    auto it = bindings_.find(v);
    if (it != bindings_.end()) {
        if (it->second->equals(*resolved)) return *this;
        throw InternalError("rebinding of " + v.name);
    }
    Substitution out = *this;
    std::map<VarKey, TermPtr> single{{v, resolved}};
    for (auto& [key, rhs] : out.bindings_) {
        if (mentions(rhs, v)) rhs = apply_map(single, rhs);
    }
    out.bindings_[v] = resolved;
    return out;
}

bool Substitution::operator==(const Substitution& o) const {
    if (bindings_.size() != o.bindings_.size()) return false;
    auto a = bindings_.begin();
    auto b = o.bindings_.begin();
    for (; a != bindings_.end(); ++a, ++b) {
        if (!(a->first == b->first)) return false;
        if (!a->second->equals(*b->second)) return false;
    }
    return true;
}

}  // namespace proslm
