#include "proslm/lexer.hpp"

#include <cctype>

#include "proslm/errors.hpp"

namespace proslm {

const char* token_kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::Atom: return "atom";
        case TokenKind::Variable: return "variable";
        case TokenKind::Integer: return "integer";
        case TokenKind::Punct: return "punctuation";
        case TokenKind::Operator: return "operator";
        case TokenKind::Comment: return "comment";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1, col = 1;

    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto push = [&](TokenKind kind, size_t len) {
        out.push_back(Token{kind, text.substr(i, len), line, col});
        advance(len);
    };

    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '%') {
            size_t end = text.find('\n', i);
            size_t len = (end == std::string::npos ? text.size() : end) - i;
            push(TokenKind::Comment, len);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t len = 1;
            while (i + len < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i + len])))
                ++len;
            // An identifier glued to digits (12abc) is not a token.
            if (i + len < text.size() && ident_char(text[i + len]))
                throw LexError(line, col, "malformed integer '" +
                                              text.substr(i, len + 1) + "...'");
            push(TokenKind::Integer, len);
            continue;
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            size_t len = 1;
            while (i + len < text.size() && ident_char(text[i + len])) ++len;
            push(TokenKind::Atom, len);
            continue;
        }
        if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
            size_t len = 1;
            while (i + len < text.size() && ident_char(text[i + len])) ++len;
            push(TokenKind::Variable, len);
            continue;
        }
        switch (c) {
            case '(': case ')': case '[': case ']': case '|': case ',': case '.':
                push(TokenKind::Punct, 1);
                continue;
            case ':':
                if (i + 1 < text.size() && text[i + 1] == '-') {
                    push(TokenKind::Operator, 2);
                    continue;
                }
                throw LexError(line, col, "':' must be followed by '-'");
            case '>':
                if (i + 1 < text.size() && text[i + 1] == '=') {
                    push(TokenKind::Operator, 2);
                } else {
                    push(TokenKind::Operator, 1);
                }
                continue;
            case '<':
                push(TokenKind::Operator, 1);
                continue;
            case '=':
                if (i + 1 < text.size() && text[i + 1] == '<') {
                    push(TokenKind::Operator, 2);
                } else {
                    push(TokenKind::Operator, 1);
                }
                continue;
            case '+': case '*':
                push(TokenKind::Operator, 1);
                continue;
            case '-':
                push(TokenKind::Operator, 1);
                continue;
            case '/':
                if (i + 1 < text.size() && text[i + 1] == '/') {
                    push(TokenKind::Operator, 2);
                    continue;
                }
                throw LexError(line, col, "single '/' is not an operator; use '//'");
            default:
                throw LexError(line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back(Token{TokenKind::End, "", line, col});
    return out;
}

}  // namespace proslm
