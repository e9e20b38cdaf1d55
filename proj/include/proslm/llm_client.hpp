#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace proslm {

struct ChatMessage {
    std::string role;  // "system" | "user" | "assistant"
    std::string content;
};

struct ChatRequest {
    std::vector<ChatMessage> messages;
    double temperature = 0.0;
    int max_tokens = 512;
};

struct ClientConfig {
    std::string endpoint = "http://localhost:8080/v1/chat/completions";
    std::string model = "default";
    // Name of the environment variable holding the API key. The key itself
    // is read at request time and never stored, logged, or serialized.
    std::string credential_env = "PROSLM_API_KEY";
    int timeout_ms = 30000;
    int retries = 2;          // attempts beyond the first
    int backoff_base_ms = 250;
    size_t max_prompt_chars = 32768;
};

// One chat completion: messages in, assistant text out. Implementations
// throw ClientError; they never return empty silently.
class LlmClient {
public:
    virtual ~LlmClient() = default;
    virtual std::string complete(const ChatRequest& req) = 0;
};

using LogSink = std::function<void(const std::string&)>;

// Provider-agnostic HTTP client for chat-completion style endpoints
// (JSON body with messages, reply under choices[0].message.content).
// Transient failures (transport errors, 5xx) retry with exponential
// backoff; 4xx raises ClientError::Kind::Provider immediately. Log lines
// never include the credential.
class HttpLlmClient : public LlmClient {
public:
    explicit HttpLlmClient(ClientConfig cfg, LogSink log = nullptr);
    std::string complete(const ChatRequest& req) override;

private:
    ClientConfig cfg_;
    LogSink log_;
};

// Deterministic test double: maps the final user message to a canned reply
// by exact match. A miss throws ClientError::Kind::StubMiss quoting the
// unmatched prompt.
class StubLlmClient : public LlmClient {
public:
    explicit StubLlmClient(std::vector<std::pair<std::string, std::string>> table);
    // JSON fixture: [{"match": "...", "response": "..."}, ...]
    static std::vector<std::pair<std::string, std::string>> table_from_file(
        const std::string& path);

    std::string complete(const ChatRequest& req) override;

    // Prompts completed so far, in call order (for assertions). Safe to
    // call concurrently with complete().
    std::vector<std::string> calls() const;

private:
    std::vector<std::pair<std::string, std::string>> table_;
    mutable std::mutex mutex_;
    std::vector<std::string> calls_;
};

// Shared request validation: at least one message, nonempty role/content,
// temperature in [0, 2], total content within max_chars.
void validate_chat_request(const ChatRequest& req, size_t max_chars);

}  // namespace proslm
