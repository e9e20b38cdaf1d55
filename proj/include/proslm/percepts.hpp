#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proslm/solver.hpp"
#include "proslm/term.hpp"

namespace proslm {

// Wall-clock reading in the shape the reasoner consumes: hour as HHMM
// (1100 is 11:00), weekday as a lowercase atom name, month 1..12.
struct ClockReading {
    int hour = 0;
    std::string weekday = "monday";
    int month = 1;
};

class Clock {
public:
    virtual ~Clock() = default;
    virtual ClockReading now() const = 0;
};

// Local time from the system clock.
class SystemClock : public Clock {
public:
    ClockReading now() const override;
};

// Pinned reading for reproducible runs and tests.
class FixedClock : public Clock {
public:
    explicit FixedClock(ClockReading r) : reading_(std::move(r)) {}
    ClockReading now() const override { return reading_; }

private:
    ClockReading reading_;
};

// Parses "1100 monday 1" (hour weekday month).
ClockReading parse_clock_reading(const std::string& text);

// Maps percept names (atoms starting with "p_") to live values. Static
// overrides win over providers; providers are consulted at resolution time.
class PerceptRegistry {
public:
    // name must start with "p_"; throws PerceptError otherwise.
    void register_provider(const std::string& name, std::function<TermPtr()> provider);
    void set_static(const std::string& name, TermPtr value);

    bool has(const std::string& name) const;
    // Current value: static override first, then provider. A provider that
    // throws is reported as PerceptError naming the percept.
    std::optional<TermPtr> lookup(const std::string& name) const;

    std::vector<std::string> names() const;

private:
    std::map<std::string, std::function<TermPtr()>> providers_;
    std::map<std::string, TermPtr> overrides_;
};

struct PerceptEntry {
    std::string name;
    TermPtr value;  // null when unresolved
    bool resolved = false;
};

struct PerceptResolution {
    // Answer pairs with percept atoms replaced by their readings.
    std::vector<std::pair<std::string, TermPtr>> answer;
    // One entry per percept occurrence, in traversal order.
    std::vector<PerceptEntry> log;
};

// Replaces percept atoms in solved answer bindings with registry values.
// Runs after solving, never during it: percepts are answer decoration, not
// proof input. Unregistered percepts pass through unchanged and are logged
// as unresolved.
PerceptResolution resolve_percepts(const std::vector<std::pair<std::string, TermPtr>>& answer,
                                   const PerceptRegistry& registry);

// Same replacement over a proof tree's resolved goals (for display).
GoalTree resolve_percepts_in_tree(const GoalTree& tree, const PerceptRegistry& registry);

// Percepts config: one "name value" pair per line, # comments, blank lines
// allowed. Values parse as terms ("p_weather sunny", "p_temperature 21").
PerceptRegistry load_percepts_file(const std::string& path);

bool is_percept_name(const std::string& name);

}  // namespace proslm
