#pragma once

#include <map>
#include <string>

namespace proslm {

// The four prompt roles in the translation pipeline. Templates live in text
// files so prompt changes never require a rebuild.
enum class TemplateId { QueryToLogic, FactsToLogic, LogicToNl, Generator };

const char* template_file_name(TemplateId id);

struct PromptTemplate {
    TemplateId id = TemplateId::QueryToLogic;
    std::string text;
};

// Loads the four templates from a directory and validates that each uses
// only the placeholders declared for its role:
//   query_to_logic: {domain} {now} {context}
//   facts_to_logic: {domain}
//   logic_to_nl:    (none)
//   generator:      {query} {context}
// Braces around anything other than those four names are literal text
// (prompt examples legitimately contain JSON-ish braces); a known
// placeholder appearing in a template that does not declare it fails
// loading with ConfigError.
class PromptStore {
public:
    static PromptStore load(const std::string& dir);
    const PromptTemplate& get(TemplateId id) const;

private:
    std::map<TemplateId, PromptTemplate> templates_;
};

// Replaces each declared {key} with its value; keys absent from `values`
// raise ConfigError, unknown braces are left untouched.
std::string render_template(const PromptTemplate& tpl,
                            const std::map<std::string, std::string>& values);

}  // namespace proslm
