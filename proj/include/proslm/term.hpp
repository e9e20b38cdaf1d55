#pragma once

#include <memory>
#include <string>
#include <vector>

namespace proslm {

enum class TermKind { Atom, Num, Var, Compound, List };

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable first-order term. Instances are built through the static
// factories and shared by pointer; there is no mutation after construction,
// so structural sharing across substitutions is safe.
//
// Variables carry a generation: user-written variables are generation 0 and
// print as their bare name, solver-renamed copies are generation >= 1 and
// print as name_generation. Generation -1 is reserved for display-only
// variables that never participate in unification.
class Term {
public:
    static TermPtr atom(std::string name);
    static TermPtr num(long long value);
    static TermPtr var(std::string name, int generation = 0);
    static TermPtr compound(std::string functor, std::vector<TermPtr> args);
    // tail must be null (proper list) or a Var.
    static TermPtr list(std::vector<TermPtr> elements, TermPtr tail = nullptr);

    TermKind kind() const { return kind_; }

    // Atom, Var and Compound name/functor.
    const std::string& name() const { return name_; }
    // Num only.
    long long value() const { return value_; }
    // Var only.
    int generation() const { return generation_; }
    // Compound arguments or List elements.
    const std::vector<TermPtr>& args() const { return args_; }
    // List tail; null for a proper list.
    const TermPtr& tail() const { return tail_; }

    bool is_atom() const { return kind_ == TermKind::Atom; }
    bool is_num() const { return kind_ == TermKind::Num; }
    bool is_var() const { return kind_ == TermKind::Var; }
    bool is_compound() const { return kind_ == TermKind::Compound; }
    bool is_list() const { return kind_ == TermKind::List; }

    bool is_ground() const;

    // Structural equality. Variables compare by (name, generation).
    bool equals(const Term& other) const;

    // Collects variables in order of first occurrence (left to right,
    // depth first). Duplicates are skipped.
    void collect_vars(std::vector<TermPtr>& out) const;

private:
    Term() = default;

    TermKind kind_ = TermKind::Atom;
    std::string name_;
    long long value_ = 0;
    int generation_ = 0;
    std::vector<TermPtr> args_;
    TermPtr tail_;
};

bool equal_terms(const TermPtr& a, const TermPtr& b);
std::vector<TermPtr> collect_vars(const TermPtr& t);

// Key type for substitution maps: identifies a variable.
struct VarKey {
    std::string name;
    int generation = 0;

    bool operator<(const VarKey& o) const {
        if (generation != o.generation) return generation < o.generation;
        return name < o.name;
    }
    bool operator==(const VarKey& o) const {
        return generation == o.generation && name == o.name;
    }
};

inline VarKey var_key(const Term& v) { return VarKey{v.name(), v.generation()}; }
inline VarKey var_key(const TermPtr& v) { return var_key(*v); }

}  // namespace proslm
