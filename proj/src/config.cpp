#include "proslm/config.hpp"

#include <fstream>

#include "proslm/errors.hpp"

namespace proslm {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

int to_int(const std::string& v, const std::string& where) {
    try {
        size_t used = 0;
        int out = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ConfigError(where + " must be an integer, got '" + v + "'");
    }
}

bool to_bool(const std::string& v, const std::string& where) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(where + " must be a boolean, got '" + v + "'");
}

}  // namespace

AppConfig load_config_file(const std::string& path, AppConfig cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);

    std::string section;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::string where = path + ":" + std::to_string(lineno);

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected key = value, got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        std::string full = section + "." + key;

        if (full == "kb.path") cfg.kb_path = value;
        else if (full == "kb.domain") cfg.domain = value;
        else if (full == "prompts.dir") cfg.prompts_dir = value;
        else if (full == "percepts.path") cfg.percepts_path = value;
        else if (full == "llm.endpoint") cfg.llm.endpoint = value;
        else if (full == "llm.model") cfg.llm.model = value;
        else if (full == "llm.credential_env") cfg.llm.credential_env = value;
        else if (full == "llm.timeout_ms") cfg.llm.timeout_ms = to_int(value, where);
        else if (full == "llm.retries") cfg.llm.retries = to_int(value, where);
        else if (full == "llm.backoff_base_ms") cfg.llm.backoff_base_ms = to_int(value, where);
        else if (full == "llm.max_prompt_chars")
            cfg.llm.max_prompt_chars = static_cast<size_t>(to_int(value, where));
        else if (full == "solver.depth_limit") cfg.solver.depth_limit = to_int(value, where);
        else if (full == "solver.max_steps") cfg.solver.max_steps = to_int(value, where);
        else if (full == "solver.occurs_check") cfg.solver.occurs_check = to_bool(value, where);
        else if (full == "stub.enabled") cfg.stub = to_bool(value, where);
        else if (full == "stub.fixtures") cfg.stub_fixtures = value;
        else if (full == "service.host") cfg.service_host = value;
        else if (full == "service.port") cfg.service_port = to_int(value, where);
        else if (full == "clock.now") cfg.clock_now = value;
        else throw ConfigError(where + ": unknown config key '" + full + "'");
    }
    return cfg;
}

}  // namespace proslm
