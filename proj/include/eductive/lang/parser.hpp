#pragma once

#include <optional>
#include <string_view>

#include "eductive/lang/ast.hpp"
#include "eductive/lang/diagnostics.hpp"

namespace eductive::lang {

struct ParseResult {
    std::optional<Ast> ast;  // present iff no syntax errors
    Diagnostics diags;

    bool ok() const { return ast.has_value(); }
};

/// Parses a whole program. Total: malformed input yields diagnostics with
/// line/column, never a crash.
///
/// Surface grammar, low to high precedence:
///   expr        := fby ('where' decls 'end')*
///   fby         := or ('fby' '.' dim fby)?          (right associative)
///   or / and / eq / rel / add / mul                 (left associative)
///   prefix      := ('!' | '-' | 'first' '.' d | 'next' '.' d) prefix | at
///   at          := primary ('@' dim ':' prefix)*
///   primary     := literal | ident | ident '(' args ')' | '#' dim
///                | '(' expr ')' | 'if' expr 'then' expr 'else' expr
///   decls       := ('dimension' d (',' d)* ';' | ident '=' expr ';')*
ParseResult parse_program(std::string_view source);

}  // namespace eductive::lang
