#include "maint/lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace maint {

namespace {

const std::unordered_set<std::string_view> kKeywords = {
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
    "class", "const", "continue", "default", "do", "double", "else", "enum",
    "extends", "final", "finally", "float", "for", "goto", "if", "implements",
    "import", "instanceof", "int", "interface", "long", "native", "new",
    "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "try", "void", "volatile", "while",
    // literal keywords; classified as operands downstream
    "true", "false", "null",
};

// Multi-character operators, longest first within each leading character.
const std::array<std::string_view, 38> kOperators = {
    ">>>=", ">>>", ">>=", "<<=", "->", "::", "++", "--", "==", "!=", "<=",
    ">=",   "&&",  "||",  "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "<<",   ">>",  "+",   "-",  "*",  "/",  "%",  "!",  "~",  "&",  "|",
    "^",    "<",   ">",   "=",  "?",
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
           static_cast<unsigned char>(c) >= 0x80;
}

bool is_ident_part(char c) {
    return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

} // namespace

bool is_java_keyword(std::string_view word) { return kKeywords.count(word) > 0; }

std::vector<Token> lex(std::string_view src, std::vector<LexDiagnostic> &diagnostics) {
    std::vector<Token> tokens;
    size_t i = 0;
    int line = 1;
    const size_t n = src.size();

    auto push = [&](TokKind kind, std::string text, int at) {
        tokens.push_back(Token{kind, std::move(text), at});
    };

    while (i < n) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }

        // comments
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            size_t start = i + 2;
            size_t end = src.find('\n', start);
            if (end == std::string_view::npos) end = n;
            push(TokKind::LineComment, std::string(src.substr(start, end - start)), line);
            i = end;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            bool doc = i + 2 < n && src[i + 2] == '*' && !(i + 3 < n && src[i + 3] == '/');
            int at = line;
            size_t start = i + 2;
            size_t end = src.find("*/", start);
            if (end == std::string_view::npos) {
                diagnostics.push_back({at, "unterminated block comment"});
                for (size_t k = start; k < n; ++k)
                    if (src[k] == '\n') ++line;
                i = n;
                push(doc ? TokKind::DocComment : TokKind::BlockComment,
                     std::string(src.substr(start)), at);
                continue;
            }
            for (size_t k = start; k < end; ++k)
                if (src[k] == '\n') ++line;
            push(doc ? TokKind::DocComment : TokKind::BlockComment,
                 std::string(src.substr(start, end - start)), at);
            i = end + 2;
            continue;
        }

        // string literal
        if (c == '"') {
            int at = line;
            // Java 15 text blocks: """ ... """
            if (i + 2 < n && src[i + 1] == '"' && src[i + 2] == '"') {
                size_t end = src.find("\"\"\"", i + 3);
                if (end == std::string_view::npos) {
                    diagnostics.push_back({at, "unterminated text block"});
                    for (size_t k = i; k < n; ++k)
                        if (src[k] == '\n') ++line;
                    push(TokKind::StringLit, std::string(src.substr(i + 3)), at);
                    i = n;
                    continue;
                }
                for (size_t k = i; k < end; ++k)
                    if (src[k] == '\n') ++line;
                push(TokKind::StringLit, std::string(src.substr(i + 3, end - (i + 3))), at);
                i = end + 3;
                continue;
            }
            std::string value;
            size_t k = i + 1;
            bool closed = false;
            while (k < n) {
                char d = src[k];
                if (d == '\\' && k + 1 < n) {
                    value.push_back(d);
                    value.push_back(src[k + 1]);
                    k += 2;
                    continue;
                }
                if (d == '"') {
                    closed = true;
                    ++k;
                    break;
                }
                if (d == '\n') break; // string literals do not span lines
                value.push_back(d);
                ++k;
            }
            if (!closed) diagnostics.push_back({at, "unterminated string literal"});
            push(TokKind::StringLit, std::move(value), at);
            i = k;
            continue;
        }

        // char literal
        if (c == '\'') {
            int at = line;
            std::string value;
            size_t k = i + 1;
            bool closed = false;
            while (k < n) {
                char d = src[k];
                if (d == '\\' && k + 1 < n) {
                    value.push_back(d);
                    value.push_back(src[k + 1]);
                    k += 2;
                    continue;
                }
                if (d == '\'') {
                    closed = true;
                    ++k;
                    break;
                }
                if (d == '\n') break;
                value.push_back(d);
                ++k;
            }
            if (!closed) diagnostics.push_back({at, "unterminated char literal"});
            push(TokKind::CharLit, std::move(value), at);
            i = k;
            continue;
        }

        // number
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            size_t k = i;
            bool is_float = false;
            if (src[k] == '0' && k + 1 < n && (src[k + 1] == 'x' || src[k + 1] == 'X')) {
                k += 2;
                while (k < n && (std::isxdigit(static_cast<unsigned char>(src[k])) || src[k] == '_'))
                    ++k;
            } else if (src[k] == '0' && k + 1 < n && (src[k + 1] == 'b' || src[k + 1] == 'B')) {
                k += 2;
                while (k < n && (src[k] == '0' || src[k] == '1' || src[k] == '_')) ++k;
            } else {
                while (k < n && (std::isdigit(static_cast<unsigned char>(src[k])) || src[k] == '_'))
                    ++k;
                if (k < n && src[k] == '.' && k + 1 < n &&
                    std::isdigit(static_cast<unsigned char>(src[k + 1]))) {
                    is_float = true;
                    ++k;
                    while (k < n &&
                           (std::isdigit(static_cast<unsigned char>(src[k])) || src[k] == '_'))
                        ++k;
                }
                if (k < n && (src[k] == 'e' || src[k] == 'E')) {
                    size_t e = k + 1;
                    if (e < n && (src[e] == '+' || src[e] == '-')) ++e;
                    if (e < n && std::isdigit(static_cast<unsigned char>(src[e]))) {
                        is_float = true;
                        k = e;
                        while (k < n && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                    }
                }
            }
            if (k < n && (src[k] == 'f' || src[k] == 'F' || src[k] == 'd' || src[k] == 'D')) {
                is_float = true;
                ++k;
            } else if (k < n && (src[k] == 'l' || src[k] == 'L')) {
                ++k;
            }
            push(is_float ? TokKind::FloatLit : TokKind::IntLit,
                 std::string(src.substr(i, k - i)), line);
            i = k;
            continue;
        }

        // identifier / keyword
        if (is_ident_start(c)) {
            size_t k = i;
            while (k < n && is_ident_part(src[k])) ++k;
            std::string word(src.substr(i, k - i));
            push(is_java_keyword(word) ? TokKind::Keyword : TokKind::Identifier,
                 std::move(word), line);
            i = k;
            continue;
        }

        // operators, longest match
        bool matched = false;
        for (std::string_view op : kOperators) {
            if (src.substr(i, op.size()) == op) {
                push(TokKind::Op, std::string(op), line);
                i += op.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;

        switch (c) {
        case '(': case ')': case '{': case '}': case '[': case ']':
        case ';': case ',': case '@': case ':': case '.':
            push(TokKind::Punct, std::string(1, c), line);
            ++i;
            break;
        default:
            diagnostics.push_back({line, std::string("unexpected character '") + c + "'"});
            ++i;
            break;
        }
    }

    push(TokKind::End, "", line);
    return tokens;
}

} // namespace maint
