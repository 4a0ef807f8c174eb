#include "eductive/lang/lexer.hpp"

#include <cctype>
#include <charconv>
#include <unordered_set>

namespace eductive::lang {

namespace {

const std::unordered_set<std::string_view> kKeywords = {
    "where", "dimension", "end", "if", "then", "else",
    "true",  "false",     "first", "next", "fby",
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> tokenize(std::string_view src, Diagnostics& diags) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1, col = 1;

    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };

    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
            SourceLoc open{line, col};
            advance(2);
            bool closed = false;
            while (i < src.size()) {
                if (src[i] == '*' && i + 1 < src.size() && src[i + 1] == '/') {
                    advance(2);
                    closed = true;
                    break;
                }
                advance(1);
            }
            if (!closed)
                diags.push_back({DiagKind::SyntaxError, open, "unterminated block comment", ""});
            continue;
        }

        SourceLoc loc{line, col};

        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
            bool is_float = false;
            if (i < src.size() && src[i] == '.' && i + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
                is_float = true;
                advance(1);
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                    advance(1);
            }
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
                size_t j = i + 1;
                if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
                if (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                    is_float = true;
                    advance(j - i);
                    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                        advance(1);
                }
            }
            std::string_view text = src.substr(start, i - start);
            Token t{is_float ? TokKind::Float : TokKind::Int, std::string(text), 0, 0.0, loc};
            if (is_float) {
                std::from_chars(text.data(), text.data() + text.size(), t.float_value);
            } else {
                auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), t.int_value);
                if (ec != std::errc{}) {
                    diags.push_back(
                        {DiagKind::SyntaxError, loc, "integer literal out of range", ""});
                    t.int_value = 0;
                }
                (void)p;
            }
            out.push_back(std::move(t));
            continue;
        }

        if (ident_start(c)) {
            size_t start = i;
            while (i < src.size() && ident_char(src[i])) advance(1);
            std::string text(src.substr(start, i - start));
            TokKind kind = kKeywords.count(text) ? TokKind::Keyword : TokKind::Ident;
            out.push_back({kind, std::move(text), 0, 0.0, loc});
            continue;
        }

        // Two-character operators first.
        if (i + 1 < src.size()) {
            std::string_view two = src.substr(i, 2);
            if (two == "<=" || two == ">=" || two == "==" || two == "!=" || two == "&&" ||
                two == "||") {
                out.push_back({TokKind::Op, std::string(two), 0, 0.0, loc});
                advance(2);
                continue;
            }
        }
        if (std::string_view("+-*/%<>!@:;=.,#()").find(c) != std::string_view::npos) {
            out.push_back({TokKind::Op, std::string(1, c), 0, 0.0, loc});
            advance(1);
            continue;
        }

        diags.push_back({DiagKind::SyntaxError, loc,
                         std::string("unexpected character '") + c + "'", ""});
        advance(1);
    }

    out.push_back({TokKind::EndOfFile, "", 0, 0.0, {line, col}});
    return out;
}

}  // namespace eductive::lang
