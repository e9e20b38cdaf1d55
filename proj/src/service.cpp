#include "proslm/service.hpp"

#include <chrono>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "proslm/errors.hpp"

namespace proslm {

namespace {

using nlohmann::json;

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const TranslationEmptyError*>(&e)) return "translation_empty";
    if (dynamic_cast<const CleaningError*>(&e)) return "cleaning";
    if (dynamic_cast<const ResourceLimitError*>(&e)) return "resource_limit";
    if (dynamic_cast<const ClientError*>(&e)) return "client";
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const LexError*>(&e)) return "parse";
    if (dynamic_cast<const ConfigError*>(&e)) return "config";
    if (dynamic_cast<const Error*>(&e)) return "pipeline";
    return "internal";
}

}  // namespace

struct Service::Impl {
    const Pipeline& pipeline;
    LogSink log;
    httplib::Server server;
    std::thread thread;

    Impl(const Pipeline& p, LogSink l) : pipeline(p), log(std::move(l)) { install(); }

    void say(const std::string& line) {
        if (log) log(line);
    }

    // Pulls one required nonempty string field from the request body;
    // returns nullopt after writing the 400.
    std::optional<std::string> required_field(const httplib::Request& req, httplib::Response& res,
                                              const char* field) {
        json body = json::parse(req.body, nullptr, false);
        if (body.is_discarded() || !body.is_object()) {
            res.status = 400;
            res.set_content(json{{"error", "body must be a JSON object"}}.dump(), "application/json");
            return std::nullopt;
        }
        if (!body.contains(field) || !body[field].is_string() ||
            body[field].get<std::string>().empty()) {
            res.status = 400;
            res.set_content(
                json{{"error", std::string("missing or empty string field '") + field + "'"}}
                    .dump(),
                "application/json");
            return std::nullopt;
        }
        return body[field].get<std::string>();
    }

    template <typename Fn>
    void handle(const char* route, const httplib::Request& req, httplib::Response& res, Fn fn) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn();
        } catch (const std::exception& e) {
            res.status = 502;
            res.set_content(json{{"error", e.what()}, {"kind", error_kind(e)}}.dump(),
                            "application/json");
        } catch (...) {
            res.status = 502;
            res.set_content(json{{"error", "unknown failure"}, {"kind", "internal"}}.dump(),
                            "application/json");
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        // httplib stamps 200 only after the handler returns.
        int status = res.status == -1 ? 200 : res.status;
        say(std::string(req.method) + " " + route + " " + std::to_string(status) + " " +
            std::to_string(ms) + "ms");
    }

    void install() {
        server.Get("/healthz", [this](const httplib::Request& req, httplib::Response& res) {
            handle("/healthz", req, res, [&] {
                res.set_content(json{{"status", "ok"}}.dump(), "application/json");
            });
        });
        server.Post("/ask", [this](const httplib::Request& req, httplib::Response& res) {
            handle("/ask", req, res, [&] {
                auto question = required_field(req, res, "question");
                if (!question) return;
                res.set_content(export_ask_bundle(pipeline.ask(*question)).dump(2),
                                "application/json");
            });
        });
        server.Post("/validate", [this](const httplib::Request& req, httplib::Response& res) {
            handle("/validate", req, res, [&] {
                auto statement = required_field(req, res, "statement");
                if (!statement) return;
                res.set_content(export_validation_report(pipeline.validate(*statement)).dump(2),
                                "application/json");
            });
        });
    }
};

Service::Service(const Pipeline& pipeline, LogSink log)
    : impl_(std::make_unique<Impl>(pipeline, std::move(log))) {}

Service::~Service() { stop(); }

bool Service::run(const std::string& host, int port) {
    impl_->say("listening on " + host + ":" + std::to_string(port));
    return impl_->server.listen(host, port);
}

int Service::start_async(const std::string& host) {
    int port = impl_->server.bind_to_any_port(host);
    if (port <= 0) throw ConfigError("cannot bind service on " + host);
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    impl_->say("listening on " + host + ":" + std::to_string(port));
    return port;
}

void Service::stop() {
    if (!impl_) return;
    impl_->server.stop();
    if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace proslm
