#pragma once

#include <string>
#include <vector>

namespace proslm {

enum class TokenKind { Atom, Variable, Integer, Punct, Operator, Comment, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string lexeme;
    int line = 1;
    int col = 1;
};

const char* token_kind_name(TokenKind k);

// Tokenizes a program or query. Whitespace is skipped; % line comments are
// emitted as Comment tokens so callers can drop or keep them. The stream
// always ends with a single End token. Throws LexError on characters outside
// the language.
std::vector<Token> tokenize(const std::string& text);

}  // namespace proslm
