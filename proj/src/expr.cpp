#include "iasi/expr.hpp"

#include <cctype>
#include <limits>
#include <map>

#include "iasi/error.hpp"
#include "iasi/io.hpp"

namespace iasi {

namespace {

struct OpInfo {
    GraphExpr::Op op;
    int int_args;   // -1: takes subexpressions instead
    int expr_args;
};

const std::map<std::string, OpInfo, std::less<>>& op_table() {
    static const std::map<std::string, OpInfo, std::less<>> table = {
        {"path", {GraphExpr::Op::Path, 1, 0}},
        {"cycle", {GraphExpr::Op::Cycle, 1, 0}},
        {"complete", {GraphExpr::Op::Complete, 1, 0}},
        {"kbip", {GraphExpr::Op::Kbip, 2, 0}},
        {"fan", {GraphExpr::Op::Fan, 1, 0}},
        {"wheel", {GraphExpr::Op::Wheel, 1, 0}},
        {"complement", {GraphExpr::Op::Complement, 0, 1}},
        {"union", {GraphExpr::Op::Union, 0, 2}},
        {"intersect", {GraphExpr::Op::Intersect, 0, 2}},
        {"join", {GraphExpr::Op::Join, 0, 2}},
        {"ringsum", {GraphExpr::Op::Ringsum, 0, 2}},
    };
    return table;
}

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void error(std::size_t at, const std::string& msg) {
        fail(ErrorKind::ParseError, "column " + std::to_string(at + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            error(pos, std::string("expected '") + c + "'");
        ++pos;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            error(pos, "expected a non-negative integer");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > std::numeric_limits<int>::max())
                error(start, "integer literal too large");
            ++pos;
        }
        return static_cast<int>(v);
    }

    std::unique_ptr<GraphExpr> parse() {
        skip_ws();
        if (pos >= s.size()) error(pos, "expected an expression");
        if (s[pos] == '@') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
                   s[pos] != ',' && s[pos] != '(' && s[pos] != ')')
                ++pos;
            if (pos == start) error(start, "expected a file path after '@'");
            auto e = std::make_unique<GraphExpr>();
            e->op = GraphExpr::Op::File;
            e->file = std::string(s.substr(start, pos - start));
            return e;
        }
        std::size_t start = pos;
        while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_'))
            ++pos;
        if (pos == start) error(start, "expected an identifier or '@'");
        std::string_view ident = s.substr(start, pos - start);
        auto it = op_table().find(ident);
        if (it == op_table().end())
            error(start, "unknown identifier '" + std::string(ident) + "'");
        const OpInfo& info = it->second;

        auto e = std::make_unique<GraphExpr>();
        e->op = info.op;
        expect('(');
        if (info.int_args > 0) {
            for (int i = 0; i < info.int_args; ++i) {
                if (i) expect(',');
                e->ints.push_back(parse_int());
            }
        } else {
            for (int i = 0; i < info.expr_args; ++i) {
                if (i) expect(',');
                skip_ws();
                if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    error(pos, "'" + std::string(ident) + "' takes graph arguments");
                e->children.push_back(parse());
            }
        }
        skip_ws();
        if (pos < s.size() && s[pos] == ',')
            error(pos, "'" + std::string(ident) + "' takes " +
                           std::to_string(std::max(info.int_args, info.expr_args)) +
                           " argument(s)");
        expect(')');
        return e;
    }
};

} // namespace

std::unique_ptr<GraphExpr> parse_expr(std::string_view text) {
    Parser parser{text};
    auto e = parser.parse();
    if (!parser.at_end()) parser.error(parser.pos, "unexpected trailing input");
    return e;
}

Graph eval_expr(const GraphExpr& e, std::vector<std::string>* notes) {
    switch (e.op) {
        case GraphExpr::Op::Path:
            return Graph::make_path(e.ints[0]);
        case GraphExpr::Op::Cycle:
            return Graph::make_cycle(e.ints[0]);
        case GraphExpr::Op::Complete:
            return Graph::make_complete(e.ints[0]);
        case GraphExpr::Op::Kbip:
            return Graph::make_complete_bipartite(e.ints[0], e.ints[1]);
        case GraphExpr::Op::Fan: {
            Graph p = Graph::make_path(e.ints[0]);
            Graph hub;
            hub.add_vertex(e.ints[0]);
            return graph_join(p, hub);
        }
        case GraphExpr::Op::Wheel: {
            int k = e.ints[0];
            if (k < 4) fail(ErrorKind::InvalidParameter, "wheel: k must be >= 4");
            Graph rim = Graph::make_cycle(k - 1);
            Graph hub;
            hub.add_vertex(k - 1);
            return graph_join(rim, hub);
        }
        case GraphExpr::Op::Complement:
            return complement(eval_expr(*e.children[0], notes));
        case GraphExpr::Op::Union:
            return graph_union(eval_expr(*e.children[0], notes), eval_expr(*e.children[1], notes));
        case GraphExpr::Op::Intersect:
            return graph_intersection(eval_expr(*e.children[0], notes),
                                      eval_expr(*e.children[1], notes));
        case GraphExpr::Op::Ringsum:
            return ring_sum(eval_expr(*e.children[0], notes), eval_expr(*e.children[1], notes));
        case GraphExpr::Op::Join: {
            Graph left = eval_expr(*e.children[0], notes);
            Graph right = eval_expr(*e.children[1], notes);
            int offset = left.vertices().empty() ? 0 : left.vertices().back() + 1;
            if (notes)
                notes->push_back("join: right operand ids shifted by +" +
                                 std::to_string(offset));
            return graph_join(left, right.relabeled_shifted(offset));
        }
        case GraphExpr::Op::File:
            return load_graph_file(e.file);
    }
    fail(ErrorKind::ParseError, "malformed expression tree");
}

Graph graph_from_expr(const std::string& text, std::vector<std::string>* notes) {
    return eval_expr(*parse_expr(text), notes);
}

} // namespace iasi
