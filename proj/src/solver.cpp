#include "proslm/solver.hpp"

#include <functional>
#include <sstream>

#include "proslm/ops.hpp"
#include "proslm/printer.hpp"
#include "proslm/unify.hpp"

namespace proslm {

namespace {

// Internal signal; converted to ResourceLimitError where the partial tree
// is in scope.
struct StepsExhausted {
    std::string reason;
};

// The search nests one C++ frame group per goal in the partial proof under
// construction, so proof size must stay well below stack capacity (instrumented
// builds have much fatter frames and need a raised stack limit to reach this).
// Hitting it is a resource exhaustion, reported like a spent step budget.
constexpr long long kMaxLiveGoals = 2048;

long long eval_arith(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::Num:
            return t->value();
        case TermKind::Var:
            throw InstantiationError("unbound variable " + print_term(t) +
                                     " in an arithmetic or comparison goal");
        case TermKind::Compound: {
            if (t->args().size() == 2) {
                const std::string& op = t->name();
                if (op == "+" || op == "-" || op == "*" || op == "//") {
                    long long a = eval_arith(t->args()[0]);
                    long long b = eval_arith(t->args()[1]);
                    if (op == "+") return a + b;
                    if (op == "-") return a - b;
                    if (op == "*") return a * b;
                    if (b == 0) throw EvalError("integer division by zero in " + print_term(t));
                    return a / b;
                }
            }
            break;
        }
        default:
            break;
    }
    throw EvalError("term is not arithmetic: " + print_term(t));
}

// goal already carries the bindings in force. Returns the extended
// substitution, or nullopt for ordinary failure.
std::optional<Substitution> eval_builtin(const TermPtr& goal, const Substitution& s,
                                         bool occurs_check) {
    const std::string& op = goal->name();
    const TermPtr& lhs = goal->args()[0];
    const TermPtr& rhs = goal->args()[1];
    if (op == "=") return unify(lhs, rhs, s, occurs_check);
    if (op == "is") {
        long long v = eval_arith(rhs);
        return unify(lhs, Term::num(v), s, occurs_check);
    }
    long long a = eval_arith(lhs);
    long long b = eval_arith(rhs);
    bool ok = op == ">"    ? a > b
              : op == "<"  ? a < b
              : op == ">=" ? a >= b
                           : a <= b;  // =<
    if (ok) return s;
    return std::nullopt;
}

TermPtr fold_conjunction(const std::vector<TermPtr>& ts) {
    TermPtr g = ts.back();
    for (size_t i = ts.size() - 1; i-- > 0;) g = Term::compound(",", {ts[i], g});
    return g;
}

class Search {
public:
    Search(const KnowledgeBase& kb, const SolveConfig& cfg) : kb_(kb), cfg_(cfg) {}

    using Cont = std::function<bool(const Substitution&)>;

    bool prove_seq(const std::vector<TermPtr>& goals, size_t idx, const Substitution& s,
                   int depth, std::vector<GoalTree>& nodes, const Cont& k) {
        if (idx == goals.size()) return k(s);
        // Frames below hold references into `nodes` while later goals push
        // their own entries; element addresses must not move. Each level
        // holds at most one node per goal, so reserving up front pins them.
        nodes.reserve(goals.size());
        if (nodes.size() <= idx) nodes.emplace_back();
        bool fired = false;
        bool ok = prove_goal(goals[idx], s, depth, nodes[idx], [&](const Substitution& s1) {
            fired = true;
            return prove_seq(goals, idx + 1, s1, depth, nodes, k);
        });
        // A goal that failed without ever reaching its continuation leaves
        // stale sibling nodes from an earlier upstream attempt; drop them.
        if (!ok && !fired && nodes.size() > idx + 1)
            nodes.resize(idx + 1);
        return ok;
    }

    bool pruned() const { return pruned_; }
    long long steps() const { return steps_; }

private:
    const KnowledgeBase& kb_;
    const SolveConfig& cfg_;
    long long steps_ = 0;
    long long live_goals_ = 0;
    int generation_ = 0;
    bool pruned_ = false;

    void bump_step() {
        if (++steps_ > cfg_.max_steps)
            throw StepsExhausted{"step budget " + std::to_string(cfg_.max_steps) + " exhausted"};
    }

    // RAII guard for the live-goal count (frames on the proof path).
    struct LiveGoal {
        explicit LiveGoal(long long& n) : n_(n) {
            if (++n_ > kMaxLiveGoals)
                throw StepsExhausted{"proof exceeds " + std::to_string(kMaxLiveGoals) +
                                     " simultaneous goals"};
        }
        ~LiveGoal() { --n_; }
        long long& n_;
    };

    bool prove_goal(const TermPtr& raw, const Substitution& s, int depth, GoalTree& node,
                    const Cont& k) {
        LiveGoal live(live_goals_);
        TermPtr goal = s.apply(raw);
        node = GoalTree{};
        node.goal = goal;
        node.resolved_goal = goal;

        if (depth > cfg_.depth_limit) {
            node.status = GoalTree::Status::DepthExceeded;
            pruned_ = true;
            return false;
        }
        if (is_builtin_goal(goal)) {
            bump_step();
            node.attempts = 1;
            auto s1 = eval_builtin(goal, s, cfg_.occurs_check);
            if (!s1) {
                node.status = GoalTree::Status::BuiltinFailed;
                return false;
            }
            node.status = GoalTree::Status::BuiltinProved;
            return k(*s1);
        }
        if (!goal->is_atom() && !goal->is_compound())
            throw EvalError("goal is not callable: " + print_term(goal));

        for (size_t id : kb_.matching(predicate_of(goal))) {
            bump_step();
            node.attempts += 1;
            node.children.clear();
            node.clause_used = ClauseRef{kb_.clause(id).source, static_cast<int>(id)};
            Clause rc = rename_apart(kb_.clause(id), ++generation_);
            auto s1 = unify(goal, rc.head, s, cfg_.occurs_check);
            if (!s1) {
                node.status = GoalTree::Status::Failed;
                continue;
            }
            if (rc.is_fact()) {
                add_binding_child(node, goal, *s1);
                node.status = GoalTree::Status::Proved;
                if (k(*s1)) return true;
                continue;
            }
            bool derived = false;
            bool accepted =
                prove_seq(rc.body, 0, *s1, depth + 1, node.children, [&](const Substitution& s2) {
                    derived = true;
                    node.status = GoalTree::Status::Proved;
                    return k(s2);
                });
            if (accepted) return true;
            // Locally derivable but rejected downstream keeps Proved so the
            // trace pins the failure on the sibling that refused it.
            if (!derived) node.status = GoalTree::Status::Failed;
        }
        return false;
    }

    // When a fact match bound variables of the attempted goal, record one
    // display child showing the bindings, e.g. "Opening = 900, Closing = 1900".
    void add_binding_child(GoalTree& node, const TermPtr& goal, const Substitution& s1) {
        std::vector<TermPtr> eqs;
        for (const auto& v : collect_vars(goal)) {
            TermPtr val = s1.apply(v);
            if (val->equals(*v)) continue;
            eqs.push_back(Term::compound("=", {Term::var(v->name(), -1), val}));
        }
        if (eqs.empty()) return;
        GoalTree child;
        child.kind = GoalTree::Kind::Binding;
        child.status = GoalTree::Status::Proved;
        child.goal = fold_conjunction(eqs);
        child.resolved_goal = child.goal;
        node.children.push_back(std::move(child));
    }
};

GoalTree make_root(const std::vector<TermPtr>& goals, std::vector<GoalTree> nodes) {
    if (nodes.size() == 1 && goals.size() == 1) return std::move(nodes[0]);
    GoalTree root;
    root.goal = fold_conjunction(goals);
    root.resolved_goal = root.goal;
    bool all = nodes.size() == goals.size();
    for (const auto& n : nodes) all = all && n.proved();
    root.status = all ? GoalTree::Status::Proved : GoalTree::Status::Failed;
    root.children = std::move(nodes);
    return root;
}

void finalize(GoalTree& n, const Substitution& s) {
    n.resolved_goal = n.proved() ? s.apply(n.goal) : n.goal;
    for (auto& c : n.children) finalize(c, s);
}

std::vector<std::pair<std::string, TermPtr>> project_answer(const std::vector<TermPtr>& goals,
                                                            const Substitution& s) {
    std::vector<TermPtr> vars;
    for (const auto& g : goals) g->collect_vars(vars);
    std::vector<std::pair<std::string, TermPtr>> out;
    for (const auto& v : vars) {
        if (v->generation() != 0) continue;
        TermPtr t = s.apply(v);
        if (!t->equals(*v)) out.emplace_back(v->name(), t);
    }
    return out;
}

void render(std::ostream& os, const GoalTree& n, int depth) {
    for (int i = 0; i < depth; ++i) os << "  ";
    char glyph = n.proved() ? '+' : n.status == GoalTree::Status::DepthExceeded ? '!' : '-';
    os << glyph << ' ' << print_term(n.resolved_goal ? n.resolved_goal : n.goal);
    if (n.kind == GoalTree::Kind::Goal) {
        if (n.status == GoalTree::Status::Proved && n.clause_used)
            os << "  (" << n.clause_used->source << ':' << n.clause_used->id << ')';
        else if (n.status == GoalTree::Status::Failed)
            os << (n.attempts == 0 ? "  [no matching clauses]"
                   : n.attempts == 1 ? "  [1 attempt]"
                                     : "  [" + std::to_string(n.attempts) + " attempts]");
        else if (n.status == GoalTree::Status::DepthExceeded)
            os << "  [depth limit]";
    }
    os << '\n';
    for (const auto& c : n.children) render(os, c, depth + 1);
}

}  // namespace

size_t GoalTree::node_count() const {
    size_t n = 1;
    for (const auto& c : children) n += c.node_count();
    return n;
}

const char* status_name(GoalTree::Status s) {
    switch (s) {
        case GoalTree::Status::Proved: return "proved";
        case GoalTree::Status::Failed: return "failed";
        case GoalTree::Status::DepthExceeded: return "depth_exceeded";
        case GoalTree::Status::BuiltinProved: return "builtin_proved";
        case GoalTree::Status::BuiltinFailed: return "builtin_failed";
    }
    return "?";
}

bool is_builtin_goal(const TermPtr& g) {
    return g->is_compound() && g->args().size() == 2 && is_comparison_op(g->name());
}

SolveResult solve(const KnowledgeBase& kb, const std::vector<TermPtr>& goals,
                  const SolveConfig& cfg) {
    if (goals.empty()) throw EvalError("empty goal list");
    Search search(kb, cfg);
    std::vector<GoalTree> nodes;
    Substitution final_s;
    bool found = false;
    try {
        found = search.prove_seq(goals, 0, {}, 0, nodes, [&](const Substitution& s) {
            final_s = s;
            return true;
        });
    } catch (const StepsExhausted& e) {
        throw ResourceLimitError(ResourceLimitError::Kind::Steps, search.steps(),
                                 make_root(goals, std::move(nodes)), e.reason);
    }
    GoalTree root = make_root(goals, std::move(nodes));
    SolveResult r;
    r.steps = search.steps();
    if (found) {
        finalize(root, final_s);
        r.truth = true;
        r.answer = project_answer(goals, final_s);
        r.tree = std::move(root);
        return r;
    }
    if (search.pruned())
        throw ResourceLimitError(
            ResourceLimitError::Kind::Depth, search.steps(), std::move(root),
            "no proof found within depth limit " + std::to_string(cfg.depth_limit) +
                "; truth of the goal is undetermined");
    finalize(root, Substitution{});
    r.truth = false;
    r.tree = std::move(root);
    return r;
}

std::vector<SolveResult> solve_all(const KnowledgeBase& kb, const std::vector<TermPtr>& goals,
                                   const SolveConfig& cfg, size_t max_solutions) {
    if (goals.empty()) throw EvalError("empty goal list");
    Search search(kb, cfg);
    std::vector<GoalTree> nodes;
    std::vector<SolveResult> results;
    bool steps_out = false;
    std::string steps_reason;
    try {
        search.prove_seq(goals, 0, {}, 0, nodes, [&](const Substitution& s) {
            GoalTree snapshot = make_root(goals, nodes);
            finalize(snapshot, s);
            SolveResult r;
            r.truth = true;
            r.answer = project_answer(goals, s);
            r.tree = std::move(snapshot);
            r.steps = search.steps();
            results.push_back(std::move(r));
            return results.size() >= max_solutions;
        });
    } catch (const StepsExhausted& e) {
        steps_out = true;
        steps_reason = e.reason;
    }
    if (results.empty()) {
        if (steps_out)
            throw ResourceLimitError(ResourceLimitError::Kind::Steps, search.steps(),
                                     make_root(goals, std::move(nodes)), steps_reason);
        if (search.pruned())
            throw ResourceLimitError(
                ResourceLimitError::Kind::Depth, search.steps(), make_root(goals, std::move(nodes)),
                "no proof found within depth limit " + std::to_string(cfg.depth_limit) +
                    "; truth of the goal is undetermined");
    }
    return results;
}

std::string render_goal_tree(const GoalTree& t) {
    std::ostringstream os;
    render(os, t, 0);
    return os.str();
}

}  // namespace proslm
