#include "proslm/translator.hpp"

#include <sstream>

#include "proslm/errors.hpp"
#include "proslm/parser.hpp"

namespace proslm {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string strip_code_fences(const std::string& s) {
    std::istringstream is(s);
    std::ostringstream os;
    std::string line;
    while (std::getline(is, line)) {
        if (trim(line).rfind("```", 0) == 0) continue;
        os << line << '\n';
    }
    return os.str();
}

std::string clean_item(std::string item) {
    item = trim(item);
    if (item.size() >= 2) {
        char q = item.front();
        if ((q == '\'' || q == '"') && item.back() == q)
            item = trim(item.substr(1, item.size() - 2));
    }
    if (!item.empty() && item.back() == '.') item = trim(item.substr(0, item.size() - 1));
    return item;
}

// Splits the inside of a [...] on commas that sit outside quotes and
// outside nested parens/brackets.
std::vector<std::string> split_items(const std::string& body, const std::string& raw) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    char quote = 0;
    for (char c : body) {
        if (quote) {
            if (c == quote) quote = 0;
            current += c;
            continue;
        }
        if (c == '\'' || c == '"') {
            quote = c;
            current += c;
            continue;
        }
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth < 0) throw CleaningError("unbalanced brackets in list", raw);
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
            continue;
        }
        current += c;
    }
    if (depth != 0 || quote) throw CleaningError("unbalanced list structure", raw);
    out.push_back(current);
    return out;
}

}  // namespace

std::vector<std::string> clean_llm_list(const std::string& raw) {
    std::string text = trim(strip_code_fences(raw));
    if (text.empty()) return {};

    std::vector<std::string> items;
    if (text.front() == '[') {
        if (text.back() != ']')
            throw CleaningError("list opened with '[' but never closed", raw);
        std::string body = text.substr(1, text.size() - 2);
        if (trim(body).empty()) return {};
        items = split_items(body, raw);
    } else {
        // Bare reply: one item per nonempty line, tolerating "- " bullets.
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            line = trim(line);
            if (line.rfind("- ", 0) == 0) line = line.substr(2);
            if (!line.empty()) items.push_back(line);
        }
    }

    std::vector<std::string> out;
    for (auto& item : items) {
        std::string cleaned = clean_item(std::move(item));
        if (!cleaned.empty()) out.push_back(std::move(cleaned));
    }
    return out;
}

Translator::Translator(LlmClient& client, const PromptStore& prompts, std::string domain,
                       size_t max_prompt_chars)
    : client_(client), prompts_(prompts), domain_(std::move(domain)),
      max_prompt_chars_(max_prompt_chars) {}

TranslationResult Translator::translate_to_goals(const PromptTemplate& tpl,
                                                 const std::map<std::string, std::string>& values,
                                                 const std::string& user_text,
                                                 bool require_ground) const {
    ChatRequest req;
    req.temperature = 0.0;  // translation must be reproducible
    req.messages.push_back({"system", render_template(tpl, values)});
    req.messages.push_back({"user", user_text});
    validate_chat_request(req, max_prompt_chars_);

    TranslationResult result;
    result.raw = client_.complete(req);
    for (const auto& item : clean_llm_list(result.raw)) {
        try {
            std::vector<TermPtr> goals = parse_query(item);
            if (require_ground) {
                bool ground = true;
                for (const auto& g : goals) ground = ground && g->is_ground();
                if (!ground) {
                    result.parse_failures.emplace_back(item, "non-ground");
                    continue;
                }
            }
            result.goals.push_back(item);
        } catch (const Error& e) {
            result.parse_failures.emplace_back(item, e.what());
        }
    }
    if (result.goals.empty()) {
        std::string detail = result.parse_failures.empty()
                                 ? "model returned no goals"
                                 : "no extracted goal parsed; first failure: '" +
                                       result.parse_failures.front().first + "' (" +
                                       result.parse_failures.front().second + ")";
        throw TranslationEmptyError(detail);
    }
    return result;
}

TranslationResult Translator::nl_query_to_goals(const std::string& question,
                                                const ClockReading& now,
                                                const std::vector<std::string>& vocabulary) const {
    if (trim(question).empty()) throw std::invalid_argument("question is empty");
    std::ostringstream now_text;
    now_text << "hour " << now.hour << " on " << now.weekday << ", month " << now.month;
    std::string vocab;
    for (size_t i = 0; i < vocabulary.size(); ++i)
        vocab += (i ? ", " : "") + vocabulary[i];
    if (vocab.empty()) vocab = "(no predicates loaded)";
    return translate_to_goals(prompts_.get(TemplateId::QueryToLogic),
                              {{"domain", domain_}, {"now", now_text.str()}, {"context", vocab}},
                              question, /*require_ground=*/false);
}

TranslationResult Translator::nl_facts_to_goals(const std::string& statement) const {
    if (trim(statement).empty()) throw std::invalid_argument("statement is empty");
    return translate_to_goals(prompts_.get(TemplateId::FactsToLogic), {{"domain", domain_}},
                              statement, /*require_ground=*/true);
}

std::string Translator::context_line(const ContextItem& item) {
    if (!item.truth) return item.text;
    return item.text + ", {truth: '" + (*item.truth ? "True" : "False") + "'}";
}

std::vector<std::string> Translator::goals_to_nl(const std::vector<ContextItem>& context) const {
    const PromptTemplate& tpl = prompts_.get(TemplateId::LogicToNl);
    std::vector<std::string> out;
    for (const auto& item : context) {
        ChatRequest req;
        req.temperature = 0.0;
        req.messages.push_back({"system", tpl.text});
        req.messages.push_back({"user", context_line(item)});
        validate_chat_request(req, max_prompt_chars_);
        for (auto& sentence : clean_llm_list(client_.complete(req)))
            out.push_back(std::move(sentence));
    }
    return out;
}

}  // namespace proslm
