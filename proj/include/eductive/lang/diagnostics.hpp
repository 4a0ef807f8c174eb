#pragma once

#include <string>
#include <vector>

#include "eductive/lang/ast.hpp"

namespace eductive::lang {

enum class DiagKind {
    SyntaxError,
    UndefinedIdentifier,
    DuplicateDefinition,
    DimensionShadowing,
    UnknownDimension,
};

const char* diag_kind_name(DiagKind kind);

struct Diagnostic {
    DiagKind kind;
    SourceLoc loc;
    std::string message;
    std::string name;  // offending identifier, when applicable

    std::string to_string() const;
};

using Diagnostics = std::vector<Diagnostic>;

}  // namespace eductive::lang
