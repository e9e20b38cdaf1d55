#include "proslm/percepts.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "proslm/errors.hpp"
#include "proslm/parser.hpp"
#include "proslm/printer.hpp"

namespace proslm {

namespace {

const char* kWeekdays[7] = {"sunday",   "monday", "tuesday", "wednesday",
                            "thursday", "friday", "saturday"};

TermPtr replace_percepts(const TermPtr& t, const PerceptRegistry& reg,
                         std::vector<PerceptEntry>& log) {
    switch (t->kind()) {
        case TermKind::Num:
        case TermKind::Var:
            return t;
        case TermKind::Atom: {
            if (!is_percept_name(t->name())) return t;
            auto v = reg.lookup(t->name());
            if (v) {
                log.push_back(PerceptEntry{t->name(), *v, true});
                return *v;
            }
            log.push_back(PerceptEntry{t->name(), nullptr, false});
            return t;
        }
        case TermKind::Compound: {
            std::vector<TermPtr> args;
            args.reserve(t->args().size());
            for (const auto& a : t->args()) args.push_back(replace_percepts(a, reg, log));
            return Term::compound(t->name(), std::move(args));
        }
        case TermKind::List: {
            std::vector<TermPtr> elems;
            elems.reserve(t->args().size());
            for (const auto& e : t->args()) elems.push_back(replace_percepts(e, reg, log));
            return Term::list(std::move(elems), t->tail());
        }
    }
    return t;
}

}  // namespace

bool is_percept_name(const std::string& name) {
    return name.rfind("p_", 0) == 0 && name.size() > 2;
}

ClockReading SystemClock::now() const {
    std::time_t t = std::time(nullptr);
    std::tm local{};
    localtime_r(&t, &local);
    ClockReading r;
    r.hour = local.tm_hour * 100 + local.tm_min;
    r.weekday = kWeekdays[local.tm_wday % 7];
    r.month = local.tm_mon + 1;
    return r;
}

ClockReading parse_clock_reading(const std::string& text) {
    std::istringstream is(text);
    ClockReading r;
    std::string hour, weekday, month;
    if (!(is >> hour >> weekday >> month))
        throw ConfigError("clock reading must be 'HHMM weekday month', got '" + text + "'");
    std::string extra;
    if (is >> extra)
        throw ConfigError("trailing input in clock reading: '" + extra + "'");
    try {
        r.hour = std::stoi(hour);
        r.month = std::stoi(month);
    } catch (const std::exception&) {
        throw ConfigError("clock reading must be 'HHMM weekday month', got '" + text + "'");
    }
    if (r.hour < 0 || r.hour > 2359 || r.hour % 100 > 59)
        throw ConfigError("hour must be HHMM in 0000..2359, got '" + hour + "'");
    if (r.month < 1 || r.month > 12)
        throw ConfigError("month must be 1..12, got '" + month + "'");
    bool known = false;
    for (const char* d : kWeekdays) known = known || weekday == d;
    if (!known) throw ConfigError("unknown weekday '" + weekday + "'");
    r.weekday = weekday;
    return r;
}

void PerceptRegistry::register_provider(const std::string& name,
                                        std::function<TermPtr()> provider) {
    if (!is_percept_name(name))
        throw PerceptError("percept names start with p_: '" + name + "'");
    if (!provider) throw PerceptError("null provider for '" + name + "'");
    providers_[name] = std::move(provider);
}

void PerceptRegistry::set_static(const std::string& name, TermPtr value) {
    if (!is_percept_name(name))
        throw PerceptError("percept names start with p_: '" + name + "'");
    if (!value) throw PerceptError("null value for '" + name + "'");
    overrides_[name] = std::move(value);
}

bool PerceptRegistry::has(const std::string& name) const {
    return overrides_.count(name) > 0 || providers_.count(name) > 0;
}

std::optional<TermPtr> PerceptRegistry::lookup(const std::string& name) const {
    auto o = overrides_.find(name);
    if (o != overrides_.end()) return o->second;
    auto p = providers_.find(name);
    if (p == providers_.end()) return std::nullopt;
    try {
        TermPtr v = p->second();
        if (!v) throw PerceptError("provider for '" + name + "' returned no value");
        return v;
    } catch (const PerceptError&) {
        throw;
    } catch (const std::exception& e) {
        throw PerceptError("provider for '" + name + "' failed: " + e.what());
    }
}

std::vector<std::string> PerceptRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [n, _] : overrides_) out.push_back(n);
    for (const auto& [n, _] : providers_)
        if (!overrides_.count(n)) out.push_back(n);
    return out;
}

PerceptResolution resolve_percepts(const std::vector<std::pair<std::string, TermPtr>>& answer,
                                   const PerceptRegistry& registry) {
    PerceptResolution out;
    for (const auto& [name, value] : answer)
        out.answer.emplace_back(name, replace_percepts(value, registry, out.log));
    return out;
}

GoalTree resolve_percepts_in_tree(const GoalTree& tree, const PerceptRegistry& registry) {
    GoalTree out = tree;
    std::vector<PerceptEntry> ignored;
    if (out.goal) out.goal = replace_percepts(out.goal, registry, ignored);
    if (out.resolved_goal) out.resolved_goal = replace_percepts(out.resolved_goal, registry, ignored);
    out.children.clear();
    for (const auto& c : tree.children) out.children.push_back(resolve_percepts_in_tree(c, registry));
    return out;
}

PerceptRegistry load_percepts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open percepts file: " + path);
    PerceptRegistry reg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream is(line);
        std::string name, value;
        if (!(is >> name)) continue;  // blank or comment-only line
        std::getline(is, value);
        size_t at = value.find_first_not_of(" \t");
        if (at == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": percept '" + name +
                              "' has no value");
        value = value.substr(at);
        try {
            reg.set_static(name, parse_term(value));
        } catch (const Error& e) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return reg;
}

}  // namespace proslm
