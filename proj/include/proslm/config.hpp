#pragma once

#include <optional>
#include <string>

#include "proslm/llm_client.hpp"
#include "proslm/solver.hpp"

namespace proslm {

// Everything the app needs to assemble a pipeline. Precedence:
// CLI flags > config file > these defaults.
struct AppConfig {
    std::string kb_path = "kb/ucsc.pl";
    std::string domain = "ucsc";
    std::string prompts_dir = "prompts";
    std::string percepts_path;  // empty: no percepts file
    ClientConfig llm;
    SolveConfig solver;
    bool stub = false;
    std::string stub_fixtures = "fixtures/stub_ucsc.json";
    std::string service_host = "127.0.0.1";
    int service_port = 8080;
    // "HHMM weekday month"; empty means the system clock.
    std::string clock_now;
};

// Sectioned key=value file ('#' comments). Unknown sections or keys are
// ConfigErrors so typos never silently fall back to defaults. Keys:
//   [kb] path, domain          [prompts] dir        [percepts] path
//   [llm] endpoint, model, credential_env, timeout_ms, retries,
//         backoff_base_ms, max_prompt_chars
//   [solver] depth_limit, max_steps, occurs_check
//   [stub] enabled, fixtures   [service] host, port [clock] now
AppConfig load_config_file(const std::string& path, AppConfig base = {});

}  // namespace proslm
