#pragma once

#include <memory>
#include <string>

#include "proslm/llm_client.hpp"
#include "proslm/pipeline.hpp"

namespace proslm {

// JSON-over-HTTP surface for the pipeline. Read-only: no KB mutation.
//   POST /ask      {"question": "..."}  -> AskBundle export
//   POST /validate {"statement": "..."} -> ValidationReport export
//   GET  /healthz                       -> {"status": "ok"}
// Malformed bodies get 400, pipeline failures 502 with the error kind;
// handler exceptions never take the process down. Requests are logged with
// latency through the optional sink.
class Service {
public:
    explicit Service(const Pipeline& pipeline, LogSink log = nullptr);
    ~Service();

    // Binds and blocks until stop(). False when the bind fails.
    bool run(const std::string& host, int port);

    // Binds an ephemeral port and serves from a background thread; returns
    // the port. Used by tests and the REPL-adjacent tooling.
    int start_async(const std::string& host);

    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace proslm
