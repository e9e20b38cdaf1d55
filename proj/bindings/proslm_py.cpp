// Python bindings. The heavy results (ask bundles, validation reports,
// solve outcomes) cross the boundary as JSON strings; the package wrapper
// parses them into dicts so both sides stay schema-identical.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "proslm/config.hpp"
#include "proslm/errors.hpp"
#include "proslm/parser.hpp"
#include "proslm/pipeline.hpp"
#include "proslm/printer.hpp"

namespace py = pybind11;
using namespace proslm;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> parse_goals_text(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& g : parse_query(text)) out.push_back(print_term(g));
    return out;
}

std::string canonicalize_program_text(const std::string& text) {
    return print_program(parse_program(text, "<input>"));
}

nlohmann::ordered_json answer_json(const std::vector<std::pair<std::string, TermPtr>>& answer) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [name, value] : answer) out[name] = print_term(value);
    return out;
}

std::string solve_text(const std::string& kb_text, const std::string& goal_text, int depth_limit,
                       long long max_steps, bool first_solution_only) {
    KnowledgeBase kb(parse_program(kb_text, "<kb>"));
    SolveConfig cfg;
    cfg.depth_limit = depth_limit;
    cfg.max_steps = max_steps;
    cfg.first_solution_only = first_solution_only;
    nlohmann::ordered_json out;
    try {
        SolveResult r = solve(kb, parse_query(goal_text), cfg);
        out["truth"] = r.truth;
        out["resource_error"] = nullptr;
        out["answer"] = answer_json(r.answer);
        out["steps"] = r.steps;
        out["tree"] = tree_to_json(r.tree);
        out["rendered_tree"] = render_goal_tree(r.tree);
    } catch (const ResourceLimitError& e) {
        out["truth"] = false;
        out["resource_error"] = e.kind == ResourceLimitError::Kind::Depth ? "depth" : "steps";
        out["answer"] = nlohmann::ordered_json::object();
        out["steps"] = e.steps;
        out["tree"] = tree_to_json(e.partial_tree);
        out["rendered_tree"] = render_goal_tree(e.partial_tree);
    }
    return out.dump(2);
}

// Owns every piece the pipeline borrows; mirrors the CLI session.
class Engine {
public:
    explicit Engine(const std::string& config_path) {
        if (!config_path.empty())
            cfg_ = load_config_file(config_path);
        else if (std::filesystem::exists("proslm.conf"))
            cfg_ = load_config_file("proslm.conf");
        kb_ = std::make_shared<const KnowledgeBase>(parse_program(
            read_file(cfg_.kb_path), std::filesystem::path(cfg_.kb_path).filename().string()));
        prompts_ = std::make_unique<PromptStore>(PromptStore::load(cfg_.prompts_dir));
        if (!cfg_.percepts_path.empty()) registry_ = load_percepts_file(cfg_.percepts_path);
        if (cfg_.clock_now.empty())
            clock_ = std::make_unique<SystemClock>();
        else
            clock_ = std::make_unique<FixedClock>(parse_clock_reading(cfg_.clock_now));
        if (cfg_.stub)
            client_ = std::make_unique<StubLlmClient>(StubLlmClient::table_from_file(cfg_.stub_fixtures));
        else
            client_ = std::make_unique<HttpLlmClient>(cfg_.llm);
        pipeline_ = std::make_unique<Pipeline>(kb_, registry_, *clock_, *client_, *prompts_,
                                               cfg_.domain, cfg_.solver, cfg_.llm.max_prompt_chars);
    }

    std::string ask_json(const std::string& question) const {
        return export_ask_bundle(pipeline_->ask(question)).dump(2);
    }

    std::string validate_json(const std::string& statement) const {
        return export_validation_report(pipeline_->validate(statement)).dump(2);
    }

    std::string query_json(const std::string& goal_text) const {
        nlohmann::ordered_json out;
        try {
            SolveResult r = pipeline_->run_query(goal_text);
            out["truth"] = r.truth;
            out["resource_error"] = nullptr;
            out["answer"] = answer_json(r.answer);
            out["steps"] = r.steps;
            out["tree"] = tree_to_json(r.tree);
            out["rendered_tree"] = render_goal_tree(r.tree);
        } catch (const ResourceLimitError& e) {
            out["truth"] = false;
            out["resource_error"] = e.kind == ResourceLimitError::Kind::Depth ? "depth" : "steps";
            out["answer"] = nlohmann::ordered_json::object();
            out["steps"] = e.steps;
            out["tree"] = tree_to_json(e.partial_tree);
            out["rendered_tree"] = render_goal_tree(e.partial_tree);
        }
        return out.dump(2);
    }

    std::vector<std::string> predicates() const { return kb_->predicates(); }
    size_t kb_size() const { return kb_->size(); }
    std::string domain() const { return cfg_.domain; }

private:
    AppConfig cfg_;
    KnowledgeBasePtr kb_;
    std::unique_ptr<PromptStore> prompts_;
    PerceptRegistry registry_;
    std::unique_ptr<Clock> clock_;
    std::unique_ptr<LlmClient> client_;
    std::unique_ptr<Pipeline> pipeline_;
};

}  // namespace

PYBIND11_MODULE(_proslm, m) {
    m.doc() = "definite-clause backward chaining with explainable proof trees";

    py::register_exception<LexError>(m, "LexError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("parse_goals", &parse_goals_text, py::arg("text"),
          "parse a goal conjunction, return each goal in canonical syntax");
    m.def("canonicalize_program", &canonicalize_program_text, py::arg("text"),
          "parse a program and print it back canonically, one clause per line");
    m.def("solve_text", &solve_text, py::arg("kb_text"), py::arg("goal"),
          py::arg("depth_limit") = 256, py::arg("max_steps") = 100000,
          py::arg("first_solution_only") = true,
          "solve a goal against a program given as text; returns a JSON string");

    py::class_<Engine>(m, "Engine")
        .def(py::init<const std::string&>(), py::arg("config_path") = std::string())
        .def("ask_json", &Engine::ask_json, py::arg("question"))
        .def("validate_json", &Engine::validate_json, py::arg("statement"))
        .def("query_json", &Engine::query_json, py::arg("goal"))
        .def("predicates", &Engine::predicates)
        .def("kb_size", &Engine::kb_size)
        .def("domain", &Engine::domain);
}
