#include "proslm/llm_client.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "proslm/errors.hpp"

namespace proslm {

namespace {

using nlohmann::json;

std::pair<std::string, std::string> split_endpoint(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw ConfigError("endpoint must look like http://host:port/path, got '" + url + "'");
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

std::string redact(std::string text, const std::string& secret) {
    if (secret.empty()) return text;
    size_t at = 0;
    while ((at = text.find(secret, at)) != std::string::npos) {
        text.replace(at, secret.size(), "***");
        at += 3;
    }
    return text;
}

const std::string& last_user_message(const ChatRequest& req) {
    for (auto it = req.messages.rbegin(); it != req.messages.rend(); ++it)
        if (it->role == "user") return it->content;
    throw std::invalid_argument("chat request has no user message");
}

}  // namespace

void validate_chat_request(const ChatRequest& req, size_t max_chars) {
    if (req.messages.empty()) throw std::invalid_argument("chat request has no messages");
    size_t total = 0;
    for (const auto& m : req.messages) {
        if (m.role != "system" && m.role != "user" && m.role != "assistant")
            throw std::invalid_argument("unknown chat role '" + m.role + "'");
        if (m.content.empty()) throw std::invalid_argument("empty message content");
        total += m.content.size();
    }
    if (req.temperature < 0.0 || req.temperature > 2.0)
        throw std::invalid_argument("temperature must be in [0, 2]");
    if (req.max_tokens <= 0) throw std::invalid_argument("max_tokens must be positive");
    if (total > max_chars)
        throw PromptTooLargeError(std::to_string(total) + " chars exceeds budget of " +
                                  std::to_string(max_chars));
}

HttpLlmClient::HttpLlmClient(ClientConfig cfg, LogSink log)
    : cfg_(std::move(cfg)), log_(std::move(log)) {
    split_endpoint(cfg_.endpoint);  // validate eagerly
}

std::string HttpLlmClient::complete(const ChatRequest& req) {
    validate_chat_request(req, cfg_.max_prompt_chars);

    auto [base, path] = split_endpoint(cfg_.endpoint);
    const char* cred = std::getenv(cfg_.credential_env.c_str());
    std::string secret = cred ? cred : "";

    json body;
    body["model"] = cfg_.model;
    body["temperature"] = req.temperature;
    body["max_tokens"] = req.max_tokens;
    body["messages"] = json::array();
    for (const auto& m : req.messages)
        body["messages"].push_back({{"role", m.role}, {"content", m.content}});
    std::string payload = body.dump();

    auto log = [&](const std::string& line) {
        if (log_) log_(redact(line, secret));
    };

    httplib::Headers headers;
    if (!secret.empty()) headers.emplace("Authorization", "Bearer " + secret);

    std::string last_failure = "no attempt made";
    bool last_was_timeout = false;
    for (int attempt = 0; attempt <= cfg_.retries; ++attempt) {
        if (attempt > 0) {
            int delay = cfg_.backoff_base_ms * (1 << (attempt - 1));
            log("llm retry " + std::to_string(attempt) + " after " + std::to_string(delay) + "ms");
            std::this_thread::sleep_for(std::chrono::milliseconds(delay));
        }
        log("llm request model=" + cfg_.model + " endpoint=" + cfg_.endpoint +
            " bytes=" + std::to_string(payload.size()) +
            " temperature=" + std::to_string(req.temperature));

        httplib::Client cli(base);
        cli.set_connection_timeout(0, cfg_.timeout_ms * 1000);
        cli.set_read_timeout(0, cfg_.timeout_ms * 1000);
        cli.set_write_timeout(0, cfg_.timeout_ms * 1000);

        auto res = cli.Post(path, headers, payload, "application/json");
        if (!res) {
            auto err = res.error();
            last_was_timeout = err == httplib::Error::ConnectionTimeout ||
                               err == httplib::Error::Read || err == httplib::Error::Write;
            last_failure = std::string("transport failure: ") + httplib::to_string(err);
            log("llm attempt failed: " + last_failure);
            continue;
        }
        if (res->status >= 500) {
            last_was_timeout = false;
            last_failure = "server error " + std::to_string(res->status);
            log("llm attempt failed: " + last_failure);
            continue;
        }
        if (res->status >= 400) {
            log("llm provider rejected request: status " + std::to_string(res->status));
            throw ClientError(ClientError::Kind::Provider,
                              "provider returned " + std::to_string(res->status) + ": " +
                                  redact(res->body.substr(0, 200), secret));
        }
        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded() || !reply.contains("choices") || reply["choices"].empty() ||
            !reply["choices"][0].contains("message") ||
            !reply["choices"][0]["message"].contains("content") ||
            !reply["choices"][0]["message"]["content"].is_string()) {
            log("llm provider sent malformed body");
            throw ClientError(ClientError::Kind::Provider,
                              "malformed provider response: " +
                                  redact(res->body.substr(0, 200), secret));
        }
        std::string content = reply["choices"][0]["message"]["content"].get<std::string>();
        log("llm response bytes=" + std::to_string(content.size()));
        return content;
    }
    if (last_was_timeout)
        throw ClientError(ClientError::Kind::Timeout,
                          "llm request timed out after " + std::to_string(cfg_.retries + 1) +
                              " attempt(s): " + last_failure);
    if (last_failure.rfind("server error", 0) == 0)
        throw ClientError(ClientError::Kind::Provider,
                          "provider kept failing after " + std::to_string(cfg_.retries + 1) +
                              " attempt(s): " + last_failure);
    throw ClientError(ClientError::Kind::Network,
                      "llm request failed after " + std::to_string(cfg_.retries + 1) +
                          " attempt(s): " + last_failure);
}

StubLlmClient::StubLlmClient(std::vector<std::pair<std::string, std::string>> table)
    : table_(std::move(table)) {
    for (size_t i = 0; i < table_.size(); ++i)
        for (size_t j = i + 1; j < table_.size(); ++j)
            if (table_[i].first == table_[j].first)
                throw ClientError(ClientError::Kind::Construction,
                                  "duplicate stub match: '" + table_[i].first + "'");
}

std::vector<std::pair<std::string, std::string>> StubLlmClient::table_from_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ClientError(ClientError::Kind::Construction, "cannot open stub fixture: " + path);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_array())
        throw ClientError(ClientError::Kind::Construction,
                          "stub fixture must be a JSON array: " + path);
    std::vector<std::pair<std::string, std::string>> table;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("match") || !entry.contains("response") ||
            !entry["match"].is_string() || !entry["response"].is_string())
            throw ClientError(ClientError::Kind::Construction,
                              "stub fixture entries need string 'match' and 'response': " + path);
        table.emplace_back(entry["match"].get<std::string>(),
                           entry["response"].get<std::string>());
    }
    return table;
}

std::string StubLlmClient::complete(const ChatRequest& req) {
    validate_chat_request(req, SIZE_MAX);
    const std::string& prompt = last_user_message(req);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        calls_.push_back(prompt);
    }
    for (const auto& [match, response] : table_)
        if (match == prompt) return response;
    throw ClientError(ClientError::Kind::StubMiss,
                      "no stub entry matches prompt: '" + prompt.substr(0, 200) + "'");
}

std::vector<std::string> StubLlmClient::calls() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return calls_;
}

}  // namespace proslm
