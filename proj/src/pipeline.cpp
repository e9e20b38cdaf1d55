#include "proslm/pipeline.hpp"

#include "proslm/errors.hpp"
#include "proslm/parser.hpp"
#include "proslm/printer.hpp"

namespace proslm {

namespace {

std::string answer_equation(const std::string& name, const TermPtr& value) {
    return name + " = " + print_term(value);
}

}  // namespace

const char* verdict_name(FactVerdict::Kind k) {
    switch (k) {
        case FactVerdict::Kind::Proved: return "proved";
        case FactVerdict::Kind::NotProven: return "not_proven";
        case FactVerdict::Kind::Untestable: return "untestable";
    }
    return "?";
}

Pipeline::Pipeline(KnowledgeBasePtr kb, PerceptRegistry registry, const Clock& clock,
                   LlmClient& client, const PromptStore& prompts, std::string domain,
                   SolveConfig solve_cfg, size_t max_prompt_chars)
    : kb_(std::move(kb)),
      registry_(std::move(registry)),
      clock_(clock),
      client_(client),
      prompts_(prompts),
      translator_(client, prompts, domain, max_prompt_chars),
      domain_(std::move(domain)),
      solve_cfg_(solve_cfg),
      max_prompt_chars_(max_prompt_chars) {
    if (!kb_) throw ConfigError("pipeline needs a knowledge base");
}

AskGoalResult Pipeline::solve_ask_goal(const std::string& goal_text) const {
    AskGoalResult r;
    r.goal_text = goal_text;
    KnowledgeBasePtr kb = kb_;  // snapshot for the whole solve
    try {
        SolveResult sr = solve(*kb, parse_query(goal_text), solve_cfg_);
        r.truth = sr.truth;
        r.answer = sr.answer;
        r.tree = std::move(sr.tree);
        r.steps = sr.steps;
    } catch (const ResourceLimitError& e) {
        r.resource_error = true;
        r.error = e.what();
        r.tree = e.partial_tree;
        r.steps = e.steps;
        return r;
    } catch (const Error& e) {
        r.error = e.what();
        return r;
    }
    if (!r.truth) return r;

    PerceptResolution pr = resolve_percepts(r.answer, registry_);
    r.resolved_answer = std::move(pr.answer);
    r.percept_log = std::move(pr.log);

    // C(p): resolved percept readings win; otherwise the answer bindings;
    // for a ground proof, the proven goal itself.
    bool any_percept = false;
    for (const auto& p : r.percept_log)
        if (p.resolved) {
            any_percept = true;
            r.context_lines.push_back(answer_equation(p.name, p.value));
        }
    if (!any_percept) {
        for (const auto& [name, value] : r.resolved_answer)
            r.context_lines.push_back(answer_equation(name, value));
        if (r.resolved_answer.empty() && r.tree)
            r.context_lines.push_back(print_term(r.tree->resolved_goal));
    }
    return r;
}

AskBundle Pipeline::ask(const std::string& question) const {
    AskBundle b;
    b.question = question;
    b.translation = translator_.nl_query_to_goals(question, clock_.now(), kb_->predicates());

    std::vector<ContextItem> items;
    for (const auto& goal_text : b.translation.goals) {
        AskGoalResult r = solve_ask_goal(goal_text);
        for (const auto& line : r.context_lines) items.push_back(ContextItem{line, std::nullopt});
        b.results.push_back(std::move(r));
    }
    b.context_nl = translator_.goals_to_nl(items);
    b.prompt = render_generator_prompt(question, b.context_nl);
    b.response = generate_response(question, b.context_nl);
    return b;
}

ValidationReport Pipeline::validate(const std::string& statement) const {
    ValidationReport report;
    report.statement = statement;
    report.translation = translator_.nl_facts_to_goals(statement);

    KnowledgeBasePtr kb = kb_;
    for (const auto& goal_text : report.translation.goals) {
        FactVerdict v;
        v.goal_text = goal_text;
        try {
            SolveResult sr = solve(*kb, parse_query(goal_text), solve_cfg_);
            v.verdict = sr.truth ? FactVerdict::Kind::Proved : FactVerdict::Kind::NotProven;
            v.tree = std::move(sr.tree);
        } catch (const ResourceLimitError& e) {
            // Neither proved nor honestly refuted: the search ran out of
            // resources, so the fact is untestable rather than False.
            v.verdict = FactVerdict::Kind::Untestable;
            v.reason = e.what();
            v.tree = e.partial_tree;
        } catch (const Error& e) {
            v.verdict = FactVerdict::Kind::Untestable;
            v.reason = e.what();
        }
        report.verdicts.push_back(std::move(v));
    }
    // Non-ground extractions surface as flagged untestable verdicts.
    for (const auto& [text, reason] : report.translation.parse_failures) {
        if (reason != "non-ground") continue;
        FactVerdict v;
        v.goal_text = text;
        v.verdict = FactVerdict::Kind::Untestable;
        v.reason = "non-ground";
        report.verdicts.push_back(std::move(v));
    }

    bool any_not_proven = false;
    for (const auto& v : report.verdicts) {
        if (v.verdict == FactVerdict::Kind::NotProven) {
            any_not_proven = true;
            report.overall = false;
        }
    }
    if (any_not_proven) report.caveat = kValidationCaveat;
    return report;
}

std::string Pipeline::render_generator_prompt(const std::string& question,
                                              const std::vector<std::string>& context_nl) const {
    std::string context;
    if (context_nl.empty()) {
        context = "- (no supporting context found in the knowledge base)";
    } else {
        for (size_t i = 0; i < context_nl.size(); ++i)
            context += (i ? "\n- " : "- ") + context_nl[i];
    }
    return render_template(prompts_.get(TemplateId::Generator),
                           {{"query", question}, {"context", context}});
}

std::string Pipeline::generate_response(const std::string& question,
                                        const std::vector<std::string>& context_nl) const {
    ChatRequest req;
    req.temperature = 0.7;  // generation stays creative; translation does not
    req.messages.push_back({"system", "You are a helpful assistant."});
    req.messages.push_back({"user", render_generator_prompt(question, context_nl)});
    validate_chat_request(req, max_prompt_chars_);
    return client_.complete(req);
}

SolveResult Pipeline::run_query(const std::string& goal_text) const {
    KnowledgeBasePtr kb = kb_;
    return solve(*kb, parse_query(goal_text), solve_cfg_);
}

nlohmann::ordered_json tree_to_json(const GoalTree& t) {
    nlohmann::ordered_json j;
    j["kind"] = t.kind == GoalTree::Kind::Goal ? "goal" : "binding";
    j["status"] = status_name(t.status);
    j["goal"] = t.goal ? print_term(t.goal) : "";
    j["resolved_goal"] = t.resolved_goal ? print_term(t.resolved_goal) : "";
    if (t.clause_used) {
        j["clause"] = {{"source", t.clause_used->source}, {"id", t.clause_used->id}};
    }
    j["attempts"] = t.attempts;
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : t.children) j["children"].push_back(tree_to_json(c));
    return j;
}

nlohmann::ordered_json export_ask_bundle(const AskBundle& b) {
    nlohmann::ordered_json j;
    j["question"] = b.question;
    j["goals"] = b.translation.goals;
    j["parse_failures"] = nlohmann::ordered_json::array();
    for (const auto& [text, reason] : b.translation.parse_failures)
        j["parse_failures"].push_back({{"text", text}, {"reason", reason}});
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : b.results) {
        nlohmann::ordered_json rj;
        rj["goal"] = r.goal_text;
        rj["truth"] = r.truth;
        rj["resource_error"] = r.resource_error;
        if (!r.error.empty()) rj["error"] = r.error;
        rj["answer"] = nlohmann::ordered_json::object();
        for (const auto& [name, value] : r.answer) rj["answer"][name] = print_term(value);
        rj["resolved_answer"] = nlohmann::ordered_json::object();
        for (const auto& [name, value] : r.resolved_answer)
            rj["resolved_answer"][name] = print_term(value);
        rj["percepts"] = nlohmann::ordered_json::array();
        for (const auto& p : r.percept_log)
            rj["percepts"].push_back({{"name", p.name},
                                      {"value", p.value ? print_term(p.value) : ""},
                                      {"resolved", p.resolved}});
        rj["context_lines"] = r.context_lines;
        rj["steps"] = r.steps;
        if (r.tree) rj["tree"] = tree_to_json(*r.tree);
        j["results"].push_back(std::move(rj));
    }
    j["context_nl"] = b.context_nl;
    j["prompt"] = b.prompt;
    j["response"] = b.response;
    return j;
}

nlohmann::ordered_json export_validation_report(const ValidationReport& r) {
    nlohmann::ordered_json j;
    j["statement"] = r.statement;
    j["goals"] = r.translation.goals;
    j["parse_failures"] = nlohmann::ordered_json::array();
    for (const auto& [text, reason] : r.translation.parse_failures)
        j["parse_failures"].push_back({{"text", text}, {"reason", reason}});
    j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts) {
        nlohmann::ordered_json vj;
        vj["goal"] = v.goal_text;
        vj["verdict"] = verdict_name(v.verdict);
        if (!v.reason.empty()) vj["reason"] = v.reason;
        if (v.tree) vj["tree"] = tree_to_json(*v.tree);
        j["verdicts"].push_back(std::move(vj));
    }
    j["overall"] = r.overall;
    j["caveat"] = r.caveat;
    return j;
}

}  // namespace proslm
