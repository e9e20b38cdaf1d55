#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proslm/clause.hpp"
#include "proslm/errors.hpp"
#include "proslm/substitution.hpp"
#include "proslm/term.hpp"

namespace proslm {

struct SolveConfig {
    int depth_limit = 256;
    long long max_steps = 100000;
    bool first_solution_only = true;
    bool occurs_check = false;
};

// Which stored clause resolved a goal.
struct ClauseRef {
    std::string source;
    int id = -1;
};

// Proof tree node. Goal nodes mirror the search: one node per attempted
// goal, children in body order of the clause recorded in clause_used. A
// failed node keeps the children of its last attempted clause so the trace
// shows where the attempt died. Binding nodes are display-only children
// added when a fact match bound variables of the goal; their goal is a
// ","-chained sequence of '='(Name, Value) terms.
struct GoalTree {
    enum class Kind { Goal, Binding };
    enum class Status { Proved, Failed, DepthExceeded, BuiltinProved, BuiltinFailed };

    Kind kind = Kind::Goal;
    Status status = Status::Failed;
    TermPtr goal;           // as attempted: bindings in force at entry applied
    TermPtr resolved_goal;  // with the final answer bindings applied
    std::optional<ClauseRef> clause_used;
    int attempts = 0;  // clauses tried (user predicates) or 1 (builtins)
    std::vector<GoalTree> children;

    bool proved() const {
        return status == Status::Proved || status == Status::BuiltinProved;
    }
    // Total node count, binding nodes included.
    size_t node_count() const;
};

const char* status_name(GoalTree::Status s);

// Search exhausted a resource. The partial proof tree built so far rides
// along for diagnostics; after a depth-limited exhaustion it contains at
// least one DepthExceeded node.
class ResourceLimitError : public Error {
public:
    enum class Kind { Depth, Steps };
    ResourceLimitError(Kind kind, long long steps, GoalTree partial_tree, const std::string& msg)
        : Error(msg), kind(kind), steps(steps), partial_tree(std::move(partial_tree)) {}
    Kind kind;
    long long steps;
    GoalTree partial_tree;
};

struct SolveResult {
    bool truth = false;
    // Bindings for the query's own variables only, first-occurrence order.
    std::vector<std::pair<std::string, TermPtr>> answer;
    GoalTree tree;
    long long steps = 0;
};

// Proves the conjunction of goals against kb by SLD resolution, clauses in
// source order, leftmost goal first. Returns the first solution, or
// truth=false only when the search space was exhausted with no depth
// pruning (an honest "not derivable"). Throws ResourceLimitError when the
// step budget runs out or when no proof was found but branches were pruned
// at the depth limit; throws InstantiationError/EvalError out of builtins.
SolveResult solve(const KnowledgeBase& kb, const std::vector<TermPtr>& goals,
                  const SolveConfig& cfg = {});

// All solutions (up to max_solutions) via exhaustive backtracking. Trees are
// snapshots of the proof at each accepted solution.
std::vector<SolveResult> solve_all(const KnowledgeBase& kb, const std::vector<TermPtr>& goals,
                                   const SolveConfig& cfg = {}, size_t max_solutions = 256);

bool is_builtin_goal(const TermPtr& g);

// Indented text rendering of a proof tree, one node per line:
//   + proved goal  (source:id)
//   - failed goal  [n attempts]
//   ! depth-limited goal
std::string render_goal_tree(const GoalTree& t);

}  // namespace proslm
