#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace maint {

enum class TokKind {
    Identifier,
    Keyword,
    IntLit,
    FloatLit,
    StringLit,
    CharLit,
    Op,          // operator punctuation, longest-match
    Punct,       // ( ) { } [ ] ; , @
    LineComment, // text without the leading //
    BlockComment,
    DocComment, // /** ... */
    End,
};

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    int line = 1;
};

struct LexDiagnostic {
    int line = 0;
    std::string message;
};

bool is_java_keyword(std::string_view word);

// Tokenizes one source file. Comments are emitted inline as tokens so callers
// can attach doc comments to declarations. Malformed input (unterminated
// string or comment) is reported and lexing recovers at the next line or EOF.
std::vector<Token> lex(std::string_view source, std::vector<LexDiagnostic> &diagnostics);

} // namespace maint
