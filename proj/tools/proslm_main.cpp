#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "proslm/config.hpp"
#include "proslm/errors.hpp"
#include "proslm/parser.hpp"
#include "proslm/pipeline.hpp"
#include "proslm/printer.hpp"
#include "proslm/service.hpp"

namespace {

using namespace proslm;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // validation failed or pipeline error
constexpr int kExitUsage = 2;    // bad flags, bad syntax, bad translation

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string kb_source_name(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

// Everything a command needs, assembled once per invocation.
struct Session {
    AppConfig cfg;
    KnowledgeBasePtr kb;
    std::unique_ptr<PromptStore> prompts;
    PerceptRegistry registry;
    std::unique_ptr<Clock> clock;
    std::unique_ptr<LlmClient> client;
    std::unique_ptr<Pipeline> pipeline;
    bool trace = false;

    void build() {
        kb = std::make_shared<const KnowledgeBase>(
            parse_program(read_file(cfg.kb_path), kb_source_name(cfg.kb_path)));
        prompts = std::make_unique<PromptStore>(PromptStore::load(cfg.prompts_dir));
        if (!cfg.percepts_path.empty()) registry = load_percepts_file(cfg.percepts_path);
        if (cfg.clock_now.empty())
            clock = std::make_unique<SystemClock>();
        else
            clock = std::make_unique<FixedClock>(parse_clock_reading(cfg.clock_now));
        if (cfg.stub) {
            client = std::make_unique<StubLlmClient>(
                StubLlmClient::table_from_file(cfg.stub_fixtures));
        } else {
            LogSink sink;
            if (trace) sink = [](const std::string& line) { std::cerr << line << "\n"; };
            client = std::make_unique<HttpLlmClient>(cfg.llm, sink);
        }
        pipeline = std::make_unique<Pipeline>(kb, registry, *clock, *client, *prompts,
                                              cfg.domain, cfg.solver, cfg.llm.max_prompt_chars);
    }

    void swap_kb(KnowledgeBase next) {
        kb = std::make_shared<const KnowledgeBase>(std::move(next));
        pipeline->set_kb(kb);
    }
};

std::string answer_to_text(const std::vector<std::pair<std::string, TermPtr>>& answer,
                           bool truth) {
    std::string out = "{'truth': ";
    out += truth ? "True" : "False";
    for (const auto& [name, value] : answer) out += ", '" + name + "': " + print_term(value);
    out += "}";
    return out;
}

void print_ask_trace(const AskBundle& b) {
    std::cout << "Q(p): ";
    for (size_t i = 0; i < b.translation.goals.size(); ++i)
        std::cout << (i ? "; " : "") << b.translation.goals[i];
    std::cout << "\n";
    for (const auto& [text, reason] : b.translation.parse_failures)
        std::cout << "  dropped '" << text << "': " << reason << "\n";
    for (const auto& r : b.results) {
        std::cout << "\ngoal " << r.goal_text << " -> "
                  << answer_to_text(r.resolved_answer.empty() ? r.answer : r.resolved_answer,
                                    r.truth)
                  << "\n";
        if (!r.error.empty()) std::cout << "  " << r.error << "\n";
        for (const auto& p : r.percept_log) {
            if (p.resolved)
                std::cout << "percept " << p.name << " = " << print_term(p.value) << "\n";
            else
                std::cout << "percept " << p.name << " unresolved\n";
        }
        if (r.tree) std::cout << render_goal_tree(*r.tree);
    }
    std::cout << "\nC(n):\n";
    for (const auto& s : b.context_nl) std::cout << "- " << s << "\n";
    std::cout << "\nprompt:\n" << b.prompt << "\n\nresponse:\n";
}

int cmd_ask(Session& s, const std::string& question) {
    AskBundle b = s.pipeline->ask(question);
    if (s.trace) print_ask_trace(b);
    std::cout << b.response << "\n";
    return kExitOk;
}

int cmd_validate(Session& s, const std::string& statement) {
    ValidationReport report = s.pipeline->validate(statement);
    for (const auto& v : report.verdicts) {
        switch (v.verdict) {
            case FactVerdict::Kind::Proved:
                std::cout << v.goal_text << " (True)\n";
                break;
            case FactVerdict::Kind::NotProven:
                std::cout << v.goal_text << " (False)\n";
                break;
            case FactVerdict::Kind::Untestable:
                std::cout << v.goal_text << " (untestable: " << v.reason << ")\n";
                break;
        }
        if (s.trace && v.tree) std::cout << render_goal_tree(*v.tree);
    }
    if (!report.caveat.empty()) std::cout << "note: " << report.caveat << "\n";
    for (const auto& [text, reason] : report.translation.parse_failures) {
        if (reason == "non-ground") continue;
        std::cerr << "unparseable extraction: '" << text << "' (" << reason << ")\n";
        return kExitUsage;
    }
    return report.overall ? kExitOk : kExitFailure;
}

int cmd_query(Session& s, const std::string& goal_text) {
    try {
        SolveResult sr = s.pipeline->run_query(goal_text);
        std::cout << answer_to_text(sr.answer, sr.truth) << "\n";
        std::cout << render_goal_tree(sr.tree);
        return kExitOk;
    } catch (const ResourceLimitError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << render_goal_tree(e.partial_tree);
        return kExitFailure;
    }
}

Clause parse_single_clause(const std::string& text) {
    std::vector<Clause> clauses = parse_program(text, "<input>");
    if (clauses.size() != 1)
        throw ParseError(1, 1, "expected exactly one clause, got " +
                                   std::to_string(clauses.size()));
    return clauses[0];
}

void save_kb(const KnowledgeBase& kb, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << print_program(kb.clauses());
}

int cmd_kb_list(Session& s) {
    for (const auto& c : s.kb->clauses())
        std::cout << c.source << ":" << c.source_id << "  " << print_clause(c) << "\n";
    return kExitOk;
}

int run_repl(Session& s);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ProSLM: explainable backward chaining joined to an LLM"};
    app.require_subcommand(1);
    // Global flags remain valid after the subcommand name.
    app.fallthrough(true);

    std::string config_path, kb_path, now_text;
    bool trace = false, stub = false;
    int depth_limit = -1;
    app.add_option("--config", config_path, "config file (sectioned key=value)");
    app.add_option("--kb", kb_path, "knowledge base file");
    app.add_flag("--trace", trace, "print goals, proof trees and context");
    app.add_option("--now", now_text, "fixed clock reading: 'HHMM weekday month'");
    app.add_flag("--stub", stub, "use the table-driven stub LLM (no network)");
    app.add_option("--depth-limit", depth_limit, "solver depth limit");

    std::string question, statement, goal_text, bind;
    auto* ask = app.add_subcommand("ask", "answer a question with KB-grounded context");
    ask->add_option("question", question, "natural-language question")->required();
    auto* validate = app.add_subcommand("validate", "fact-check a statement against the KB");
    validate->add_option("statement", statement, "statement to validate")->required();
    auto* query = app.add_subcommand("query", "solve a logic goal directly");
    query->add_option("goal", goal_text, "goal conjunction, e.g. \"status(pool, 1100, monday, Y)\"")
        ->required();

    auto* kb_cmd = app.add_subcommand("kb", "inspect or edit the knowledge base");
    kb_cmd->require_subcommand(1);
    std::string kb_arg;
    auto* kb_list = kb_cmd->add_subcommand("list", "print clauses with ids");
    auto* kb_load = kb_cmd->add_subcommand("load", "parse and report a KB file");
    kb_load->add_option("path", kb_arg, "file to load")->required();
    auto* kb_save = kb_cmd->add_subcommand("save", "write the KB in canonical form");
    kb_save->add_option("path", kb_arg, "destination file")->required();
    auto* kb_assert = kb_cmd->add_subcommand("assert", "append a clause and rewrite the KB file");
    kb_assert->add_option("clause", kb_arg, "clause text, e.g. \"dining_hall(oakes).\"")
        ->required();
    auto* kb_retract = kb_cmd->add_subcommand("retract", "remove a clause and rewrite the KB file");
    kb_retract->add_option("clause", kb_arg, "clause text")->required();

    auto* repl = app.add_subcommand("repl", "interactive session");
    auto* serve = app.add_subcommand("serve", "run the JSON-over-HTTP service");
    serve->add_option("bind", bind, "host:port (default from config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is a usage error.
        return code == 0 ? kExitOk : kExitUsage;
    }

    Session session;
    try {
        if (!config_path.empty())
            session.cfg = load_config_file(config_path);
        else if (std::filesystem::exists("proslm.conf"))
            session.cfg = load_config_file("proslm.conf");
        if (!kb_path.empty()) session.cfg.kb_path = kb_path;
        if (!now_text.empty()) session.cfg.clock_now = now_text;
        if (stub) session.cfg.stub = true;
        if (depth_limit > 0) session.cfg.solver.depth_limit = depth_limit;
        session.trace = trace;

        // Empty inputs are usage errors, caught before any network or LLM work.
        if (ask->parsed() && question.empty()) throw std::invalid_argument("question is empty");
        if (validate->parsed() && statement.empty())
            throw std::invalid_argument("statement is empty");
        if (query->parsed() && goal_text.empty()) throw std::invalid_argument("goal is empty");

        session.build();

        if (ask->parsed()) return cmd_ask(session, question);
        if (validate->parsed()) return cmd_validate(session, statement);
        if (query->parsed()) return cmd_query(session, goal_text);
        if (kb_cmd->parsed()) {
            if (kb_list->parsed()) return cmd_kb_list(session);
            if (kb_load->parsed()) {
                KnowledgeBase next(parse_program(read_file(kb_arg), kb_source_name(kb_arg)));
                std::cout << "loaded " << next.size() << " clause(s) from " << kb_arg << "\n";
                return kExitOk;
            }
            if (kb_save->parsed()) {
                save_kb(*session.kb, kb_arg);
                std::cout << "saved " << session.kb->size() << " clause(s) to " << kb_arg << "\n";
                return kExitOk;
            }
            if (kb_assert->parsed()) {
                Clause c = parse_single_clause(kb_arg);
                c.source = kb_source_name(session.cfg.kb_path);
                KnowledgeBase next = session.kb->asserted(std::move(c));
                save_kb(next, session.cfg.kb_path);
                std::cout << "asserted " << kb_arg << "\n";
                return kExitOk;
            }
            if (kb_retract->parsed()) {
                KnowledgeBase next = session.kb->retracted(parse_single_clause(kb_arg));
                save_kb(next, session.cfg.kb_path);
                std::cout << "retracted " << kb_arg << "\n";
                return kExitOk;
            }
        }
        if (repl->parsed()) return run_repl(session);
        if (serve->parsed()) {
            std::string host = session.cfg.service_host;
            int port = session.cfg.service_port;
            if (!bind.empty()) {
                size_t colon = bind.rfind(':');
                if (colon == std::string::npos)
                    throw ConfigError("bind must be host:port, got '" + bind + "'");
                host = bind.substr(0, colon);
                port = std::stoi(bind.substr(colon + 1));
            }
            Service service(*session.pipeline,
                            [](const std::string& line) { std::cerr << line << "\n"; });
            if (!service.run(host, port))
                throw ConfigError("cannot bind " + host + ":" + std::to_string(port));
            return kExitOk;
        }
        return kExitUsage;
    } catch (const LexError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const TranslationEmptyError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "unexpected failure: " << e.what() << "\n";
        return kExitFailure;
    }
}

namespace {

void repl_help() {
    std::cout << "commands:\n"
                 "  ask <question>        grounded answer via the pipeline\n"
                 "  validate <statement>  fact-check against the KB\n"
                 "  query <goal>          solve a goal, print the proof tree\n"
                 "  kb list               print clauses\n"
                 "  kb assert <clause>    add a clause to this session\n"
                 "  kb retract <clause>   remove a clause from this session\n"
                 "  kb load <path>        replace the session KB\n"
                 "  kb save <path>        write the session KB canonically\n"
                 "  trace on|off          toggle proof traces\n"
                 "  history               show session history\n"
                 "  help, quit\n";
}

int run_repl(Session& s) {
    std::cout << "proslm repl; 'help' lists commands\n";
    std::vector<std::string> history;
    std::string line;
    while (std::cout << "proslm> " << std::flush, std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        history.push_back(line);
        std::istringstream is(line);
        std::string cmd;
        is >> cmd;
        std::string rest;
        std::getline(is, rest);
        size_t at = rest.find_first_not_of(" \t");
        rest = at == std::string::npos ? "" : rest.substr(at);
        try {
            if (cmd == "quit" || cmd == "exit") break;
            if (cmd == "help") {
                repl_help();
            } else if (cmd == "history") {
                for (size_t i = 0; i < history.size(); ++i)
                    std::cout << i + 1 << "  " << history[i] << "\n";
            } else if (cmd == "trace") {
                if (rest != "on" && rest != "off") throw ConfigError("trace takes on|off");
                s.trace = rest == "on";
            } else if (cmd == "ask") {
                if (rest.empty()) throw ConfigError("ask needs a question");
                cmd_ask(s, rest);
            } else if (cmd == "validate") {
                if (rest.empty()) throw ConfigError("validate needs a statement");
                cmd_validate(s, rest);
            } else if (cmd == "query") {
                if (rest.empty()) throw ConfigError("query needs a goal");
                cmd_query(s, rest);
            } else if (cmd == "kb") {
                std::istringstream ks(rest);
                std::string sub;
                ks >> sub;
                std::string arg;
                std::getline(ks, arg);
                size_t a = arg.find_first_not_of(" \t");
                arg = a == std::string::npos ? "" : arg.substr(a);
                if (sub == "list") {
                    cmd_kb_list(s);
                } else if (sub == "assert") {
                    Clause c = parse_single_clause(arg);
                    c.source = "<repl>";
                    s.swap_kb(s.kb->asserted(std::move(c)));
                    std::cout << "asserted\n";
                } else if (sub == "retract") {
                    s.swap_kb(s.kb->retracted(parse_single_clause(arg)));
                    std::cout << "retracted\n";
                } else if (sub == "load") {
                    if (arg.empty()) throw ConfigError("kb load needs a path");
                    s.swap_kb(KnowledgeBase(parse_program(read_file(arg), kb_source_name(arg))));
                    std::cout << "loaded " << s.kb->size() << " clause(s)\n";
                } else if (sub == "save") {
                    if (arg.empty()) throw ConfigError("kb save needs a path");
                    save_kb(*s.kb, arg);
                    std::cout << "saved\n";
                } else {
                    throw ConfigError("unknown kb subcommand '" + sub + "'");
                }
            } else {
                throw ConfigError("unknown command '" + cmd + "'; try 'help'");
            }
        } catch (const std::exception& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    return kExitOk;
}

}  // namespace
