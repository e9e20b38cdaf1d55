#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proslm/llm_client.hpp"
#include "proslm/percepts.hpp"
#include "proslm/prompts.hpp"

namespace proslm {

struct TranslationResult {
    std::string raw;                  // untouched model reply
    std::vector<std::string> goals;   // cleaned strings that parse
    // (offending string, reason). Everything extracted from raw lands in
    // goals or here; nothing is dropped silently.
    std::vector<std::pair<std::string, std::string>> parse_failures;
};

// One unit of logic context headed to natural language. truth is set when
// translating validation verdicts ("goal, {truth: 'True'}" form) and empty
// for context gathering ("Y = [quiet, wifi]" form).
struct ContextItem {
    std::string text;
    std::optional<bool> truth;
};

// Normalizes a raw LLM reply into a list of strings: strips code fences,
// one surrounding [list], per-item quotes (single or double) and trailing
// periods. Preserves order, never invents items, and is idempotent per
// item. A '[' without its ']' raises CleaningError carrying the raw text.
std::vector<std::string> clean_llm_list(const std::string& raw);

// NL <-> logic translation via prompt templates over an LlmClient.
// Stateless apart from configuration; safe for concurrent use when the
// client is.
class Translator {
public:
    Translator(LlmClient& client, const PromptStore& prompts, std::string domain,
               size_t max_prompt_chars = 32768);

    // Question -> query goals. Renders query_to_logic with the domain, the
    // clock reading, and the KB predicate vocabulary; every extracted goal
    // must parse via parse_query or is moved to parse_failures. No goal
    // parsing -> TranslationEmptyError.
    TranslationResult nl_query_to_goals(const std::string& question, const ClockReading& now,
                                        const std::vector<std::string>& vocabulary) const;

    // Statement -> ground fact goals. Goals with variables are flagged
    // non-ground in parse_failures and excluded from goals.
    TranslationResult nl_facts_to_goals(const std::string& statement) const;

    // Logic context -> NL sentences, one client call per item, sentences
    // concatenated in item order.
    std::vector<std::string> goals_to_nl(const std::vector<ContextItem>& context) const;

    // The exact user message sent for a context item (stub tables key on it).
    static std::string context_line(const ContextItem& item);

private:
    TranslationResult translate_to_goals(const PromptTemplate& tpl,
                                         const std::map<std::string, std::string>& values,
                                         const std::string& user_text, bool require_ground) const;

    LlmClient& client_;
    const PromptStore& prompts_;
    std::string domain_;
    size_t max_prompt_chars_;
};

}  // namespace proslm
