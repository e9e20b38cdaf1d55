#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "proslm/clause.hpp"
#include "proslm/llm_client.hpp"
#include "proslm/percepts.hpp"
#include "proslm/prompts.hpp"
#include "proslm/solver.hpp"
#include "proslm/translator.hpp"

namespace proslm {

// Rendered verbatim under failed validations. Backward chaining can only
// deterministically assert a goal, so failure to prove is ambiguous.
inline const std::string kValidationCaveat =
    "a False value means either the statement is false or the knowledge base is incomplete";

// Outcome of solving one translated goal inside ask.
struct AskGoalResult {
    std::string goal_text;  // Q(p) element
    bool truth = false;
    bool resource_error = false;
    std::string error;  // resource/eval message when not cleanly solved
    // Solver answer, then the same pairs with percepts replaced.
    std::vector<std::pair<std::string, TermPtr>> answer;
    std::vector<std::pair<std::string, TermPtr>> resolved_answer;
    std::vector<PerceptEntry> percept_log;
    std::optional<GoalTree> tree;
    long long steps = 0;
    // C(p) lines handed to the translator, e.g. "p_weather = sunny".
    std::vector<std::string> context_lines;
};

// Everything the ask flow produced, each field traceable to the stage
// before it: question -> translation -> results -> context_nl -> prompt ->
// response.
struct AskBundle {
    std::string question;  // Q(n)
    TranslationResult translation;
    std::vector<AskGoalResult> results;
    std::vector<std::string> context_nl;  // C(n)
    std::string prompt;                   // P, the rendered generator user message
    std::string response;                 // R
};

struct FactVerdict {
    enum class Kind { Proved, NotProven, Untestable };
    std::string goal_text;
    Kind verdict = Kind::NotProven;
    std::string reason;  // set for untestable verdicts
    std::optional<GoalTree> tree;
};

const char* verdict_name(FactVerdict::Kind k);

struct ValidationReport {
    std::string statement;  // R under test
    TranslationResult translation;
    std::vector<FactVerdict> verdicts;
    // Conjunction over proved/not_proven verdicts; untestable ones are
    // excluded but flagged.
    bool overall = true;
    std::string caveat;  // kValidationCaveat when any verdict is not_proven
};

// Wires translator, solver, percepts and generator into the two flows.
// Stateless per call except the KB snapshot; safe for concurrent ask and
// validate with a thread-safe client.
class Pipeline {
public:
    Pipeline(KnowledgeBasePtr kb, PerceptRegistry registry, const Clock& clock,
             LlmClient& client, const PromptStore& prompts, std::string domain,
             SolveConfig solve_cfg = {}, size_t max_prompt_chars = 32768);

    // translate -> parse -> solve each goal -> resolve percepts -> context
    // to NL -> render generator prompt -> generate. A question whose goals
    // all fail still generates a response over an explicit no-context note.
    AskBundle ask(const std::string& question) const;

    // extract facts -> solve each ground goal -> verdict per fact.
    ValidationReport validate(const std::string& statement) const;

    // Generator call alone (temperature 0.7); prompt must fit the budget.
    std::string generate_response(const std::string& question,
                                  const std::vector<std::string>& context_nl) const;
    // The generator user message for given inputs (deterministic).
    std::string render_generator_prompt(const std::string& question,
                                        const std::vector<std::string>& context_nl) const;

    // parse_query + solve, for the query command and tests.
    SolveResult run_query(const std::string& goal_text) const;

    const KnowledgeBasePtr& kb() const { return kb_; }
    void set_kb(KnowledgeBasePtr kb) { kb_ = std::move(kb); }
    const PerceptRegistry& percepts() const { return registry_; }
    const SolveConfig& solve_config() const { return solve_cfg_; }
    ClockReading now() const { return clock_.now(); }

private:
    AskGoalResult solve_ask_goal(const std::string& goal_text) const;

    KnowledgeBasePtr kb_;
    PerceptRegistry registry_;
    const Clock& clock_;
    LlmClient& client_;
    const PromptStore& prompts_;
    Translator translator_;
    std::string domain_;
    SolveConfig solve_cfg_;
    size_t max_prompt_chars_;
};

// Stable machine-readable exports (ordered keys, 2-space indent via dump).
nlohmann::ordered_json tree_to_json(const GoalTree& t);
nlohmann::ordered_json export_ask_bundle(const AskBundle& b);
nlohmann::ordered_json export_validation_report(const ValidationReport& r);

}  // namespace proslm
