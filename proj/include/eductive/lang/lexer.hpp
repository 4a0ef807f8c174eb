#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eductive/lang/ast.hpp"
#include "eductive/lang/diagnostics.hpp"

namespace eductive::lang {

enum class TokKind : uint8_t {
    Int,
    Float,
    Ident,
    Keyword,   // where dimension end if then else true false first next fby
    Op,        // + - * / % < <= > >= == != && || ! @ : ; = . , # ( )
    EndOfFile,
};

struct Token {
    TokKind kind;
    std::string text;
    int64_t int_value = 0;
    double float_value = 0.0;
    SourceLoc loc;

    bool is_kw(std::string_view kw) const { return kind == TokKind::Keyword && text == kw; }
    bool is_op(std::string_view op) const { return kind == TokKind::Op && text == op; }
};

/// Tokenizes a whole source string. Comments (// and /* */) and whitespace
/// are skipped; the trailing token is always EndOfFile. Lexical errors are
/// reported in diags and the offending character skipped, so lexing is total.
std::vector<Token> tokenize(std::string_view source, Diagnostics& diags);

}  // namespace eductive::lang
