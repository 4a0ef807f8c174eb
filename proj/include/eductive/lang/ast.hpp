#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace eductive::lang {

using NodeId = int32_t;
constexpr NodeId kNoNode = -1;

enum class NodeOp : uint8_t {
    IntLit,
    FloatLit,
    BoolLit,
    Ident,
    BinOp,
    UnOp,
    If,
    At,
    HashDim,
    Where,
    ProcCall,
    // Surface sugar, removed by desugaring.
    First,
    Next,
    Fby,
};

const char* node_op_name(NodeOp op);
bool node_op_from_name(const std::string& name, NodeOp& out);
bool is_sugar_op(NodeOp op);

struct SourceLoc {
    int line = 0;
    int col = 0;
};

/// Declarations attached to a Where node. def_names[i] is defined by
/// children[i + 1]; children[0] is the body expression.
struct WhereDecls {
    std::vector<std::string> dimensions;
    std::vector<std::string> def_names;

    bool operator==(const WhereDecls&) const = default;
};

struct AstNode {
    NodeId id = kNoNode;
    NodeOp op{};
    std::vector<NodeId> children;
    // IntLit/FloatLit/BoolLit carry their literal; Ident/ProcCall the name;
    // BinOp/UnOp the operator symbol; HashDim/First/Next/Fby the dimension;
    // Where its declarations.
    std::variant<std::monostate, int64_t, double, bool, std::string, WhereDecls> payload;
    SourceLoc loc;

    int64_t int_lit() const { return std::get<int64_t>(payload); }
    double float_lit() const { return std::get<double>(payload); }
    bool bool_lit() const { return std::get<bool>(payload); }
    const std::string& text() const { return std::get<std::string>(payload); }
    const WhereDecls& where() const { return std::get<WhereDecls>(payload); }
};

/// Flat node arena holding one expression tree. Node ids index the arena;
/// they are re-canonicalized (preorder) at Geer generation.
class Ast {
public:
    NodeId add(AstNode node) {
        node.id = static_cast<NodeId>(nodes_.size());
        nodes_.push_back(std::move(node));
        return nodes_.back().id;
    }

    const AstNode& node(NodeId id) const { return nodes_.at(static_cast<size_t>(id)); }
    AstNode& node(NodeId id) { return nodes_.at(static_cast<size_t>(id)); }

    NodeId root() const { return root_; }
    void set_root(NodeId id) { root_ = id; }

    size_t size() const { return nodes_.size(); }

private:
    std::vector<AstNode> nodes_;
    NodeId root_ = kNoNode;
};

/// Renders a tree back to concrete syntax (fully parenthesized). Used for
/// structural round-trip checks and diagnostics.
std::string to_source(const Ast& ast, NodeId id);
inline std::string to_source(const Ast& ast) { return to_source(ast, ast.root()); }

}  // namespace eductive::lang
