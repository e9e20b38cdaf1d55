#include "proslm/prompts.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "proslm/errors.hpp"

namespace proslm {

namespace {

const std::set<std::string>& declared_placeholders(TemplateId id) {
    static const std::set<std::string> query{"domain", "now", "context"};
    static const std::set<std::string> facts{"domain"};
    static const std::set<std::string> none{};
    static const std::set<std::string> gen{"query", "context"};
    switch (id) {
        case TemplateId::QueryToLogic: return query;
        case TemplateId::FactsToLogic: return facts;
        case TemplateId::LogicToNl: return none;
        case TemplateId::Generator: return gen;
    }
    return none;
}

// All four placeholder names the pipeline knows about. A known name inside
// a template that does not declare it is a wiring mistake, not literal text.
const std::set<std::string>& known_placeholders() {
    static const std::set<std::string> all{"domain", "now", "context", "query"};
    return all;
}

// {identifier} occurrences; other braces are literal text.
std::vector<std::string> scan_braced_names(const std::string& text) {
    std::vector<std::string> out;
    for (size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != '{') continue;
        size_t end = i + 1;
        while (end < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
            ++end;
        if (end > i + 1 && end < text.size() && text[end] == '}')
            out.push_back(text.substr(i + 1, end - i - 1));
    }
    return out;
}

}  // namespace

const char* template_file_name(TemplateId id) {
    switch (id) {
        case TemplateId::QueryToLogic: return "query_to_logic.txt";
        case TemplateId::FactsToLogic: return "facts_to_logic.txt";
        case TemplateId::LogicToNl: return "logic_to_nl.txt";
        case TemplateId::Generator: return "generator.txt";
    }
    return "";
}

PromptStore PromptStore::load(const std::string& dir) {
    PromptStore store;
    for (TemplateId id : {TemplateId::QueryToLogic, TemplateId::FactsToLogic,
                          TemplateId::LogicToNl, TemplateId::Generator}) {
        std::string path = dir + "/" + template_file_name(id);
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open prompt template: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        PromptTemplate tpl{id, buf.str()};
        // Editors append trailing newlines; rendered prompts must not carry
        // them (stub tables match rendered text byte for byte).
        size_t end = tpl.text.find_last_not_of(" \t\r\n");
        tpl.text = end == std::string::npos ? "" : tpl.text.substr(0, end + 1);
        if (tpl.text.empty()) throw ConfigError("empty prompt template: " + path);
        const auto& declared = declared_placeholders(id);
        for (const auto& name : scan_braced_names(tpl.text)) {
            if (known_placeholders().count(name) && !declared.count(name))
                throw ConfigError("template " + path + " uses undeclared placeholder {" +
                                  name + "}");
        }
        store.templates_[id] = std::move(tpl);
    }
    return store;
}

const PromptTemplate& PromptStore::get(TemplateId id) const {
    auto it = templates_.find(id);
    if (it == templates_.end()) throw ConfigError("prompt template not loaded");
    return it->second;
}

std::string render_template(const PromptTemplate& tpl,
                            const std::map<std::string, std::string>& values) {
    const auto& declared = declared_placeholders(tpl.id);
    for (const auto& name : declared) {
        // Every declared placeholder present in the text needs a value.
        if (tpl.text.find("{" + name + "}") != std::string::npos && !values.count(name))
            throw ConfigError("missing value for placeholder {" + name + "}");
    }
    std::string out = tpl.text;
    for (const auto& [key, value] : values) {
        if (!declared.count(key))
            throw ConfigError("template does not declare placeholder {" + key + "}");
        std::string needle = "{" + key + "}";
        size_t at = 0;
        while ((at = out.find(needle, at)) != std::string::npos) {
            out.replace(at, needle.size(), value);
            at += value.size();
        }
    }
    return out;
}

}  // namespace proslm
