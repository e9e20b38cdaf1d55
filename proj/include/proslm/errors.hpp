#pragma once

#include <stdexcept>
#include <string>

namespace proslm {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexer rejected a character. Positions are 1-based.
class LexError : public Error {
public:
    LexError(int line, int col, const std::string& msg)
        : Error("lex error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

// Parser rejected the token stream. Carries the expected-token description.
class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& msg, std::string expected = "")
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg +
                (expected.empty() ? "" : " (expected " + expected + ")")),
          line(line), col(col), expected(std::move(expected)) {}
    int line;
    int col;
    std::string expected;
};

// A comparison or arithmetic goal saw an unbound variable.
class InstantiationError : public Error {
public:
    explicit InstantiationError(const std::string& msg) : Error("instantiation error: " + msg) {}
};

// A builtin saw a value of the wrong shape (non-integer operand, division by zero).
class EvalError : public Error {
public:
    explicit EvalError(const std::string& msg) : Error("evaluation error: " + msg) {}
};

// Substitution composition was asked to rebind a variable to a conflicting term.
// The solver never does this; hitting it means a bug upstream.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

// retract on a clause the knowledge base does not hold.
class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& msg) : Error("not found: " + msg) {}
};

// A percept provider failed or a registration was invalid.
class PerceptError : public Error {
public:
    explicit PerceptError(const std::string& msg) : Error("percept error: " + msg) {}
};

// LLM client failures, one kind per failure class so callers can react.
class ClientError : public Error {
public:
    enum class Kind { Network, Provider, Timeout, StubMiss, Construction };
    ClientError(Kind kind, const std::string& msg) : Error(msg), kind(kind) {}
    Kind kind;
};

// The translator produced no usable goals.
class TranslationEmptyError : public Error {
public:
    explicit TranslationEmptyError(const std::string& msg) : Error("translation empty: " + msg) {}
};

// clean_llm_list could not make sense of the raw reply. Carries the raw text.
class CleaningError : public Error {
public:
    CleaningError(const std::string& msg, std::string raw)
        : Error("cleaning error: " + msg), raw(std::move(raw)) {}
    std::string raw;
};

// Rendered prompt exceeds the configured size budget.
class PromptTooLargeError : public Error {
public:
    explicit PromptTooLargeError(const std::string& msg) : Error("prompt too large: " + msg) {}
};

// Bad configuration file, template, or fixture.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("config error: " + msg) {}
};

}  // namespace proslm
