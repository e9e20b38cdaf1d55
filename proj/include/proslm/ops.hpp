#pragma once

#include <string>

namespace proslm {

// Operator table shared by the parser and the printer.
// Comparisons are non-associative; the arithmetic operators are
// left-associative. Lower priority binds tighter.
inline bool is_comparison_op(const std::string& s) {
    return s == ">" || s == "<" || s == ">=" || s == "=<" || s == "=" || s == "is";
}

inline bool is_additive_op(const std::string& s) { return s == "+" || s == "-"; }

inline bool is_multiplicative_op(const std::string& s) { return s == "*" || s == "//"; }

inline int infix_priority(const std::string& s) {
    if (is_comparison_op(s)) return 700;
    if (is_additive_op(s)) return 500;
    if (is_multiplicative_op(s)) return 400;
    return 0;
}

}  // namespace proslm
