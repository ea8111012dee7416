#ifndef IASI_EXPR_HPP
#define IASI_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "iasi/graph.hpp"

namespace iasi {

/// Surface syntax for building graphs:
///   expr := ident '(' args ')' | '@' path
///   args := expr (',' expr)* | int (',' int)*
/// Constructors: path(k), cycle(k), complete(k), kbip(a,b), fan(k), wheel(k).
/// Unary: complement(e). Binary: union(e1,e2), intersect(e1,e2), join(e1,e2),
/// ringsum(e1,e2). '@path' loads a graph text file. Whitespace insignificant,
/// identifiers lowercase.
struct GraphExpr {
    enum class Op {
        Path,
        Cycle,
        Complete,
        Kbip,
        Fan,
        Wheel,
        Complement,
        Union,
        Intersect,
        Join,
        Ringsum,
        File,
    };

    Op op;
    std::vector<int> ints;
    std::vector<std::unique_ptr<GraphExpr>> children;
    std::string file;
};

/// Parses the grammar above; syntax errors carry a 1-based column.
std::unique_ptr<GraphExpr> parse_expr(std::string_view text);

/// Evaluates via graph-core. join relabels the right operand into a fresh id
/// block (shift by left max id + 1) and appends a note per shift; the other
/// binary operations identify vertices by id as written.
Graph eval_expr(const GraphExpr& e, std::vector<std::string>* notes = nullptr);

/// parse_expr + eval_expr.
Graph graph_from_expr(const std::string& text, std::vector<std::string>* notes = nullptr);

} // namespace iasi

#endif
