#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iasi/catalog.hpp"
#include "iasi/error.hpp"
#include "iasi/expr.hpp"
#include "iasi/io.hpp"
#include "iasi/label.hpp"
#include "iasi/sparing.hpp"

namespace {

using namespace iasi;

// Exit codes: 0 success, 1 semantic failure (verify: not weak; check: any
// REFUTED row), 2 usage / parse / limit errors.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kError = 2;

void emit(const std::string& content, const std::string& output) {
    if (output.empty()) {
        std::cout << content;
        std::cout.flush();
    } else {
        save_text_file(output, content);
    }
}

Graph evaluate(const std::string& expr) {
    std::vector<std::string> notes;
    Graph g = graph_from_expr(expr, &notes);
    for (const auto& n : notes) std::cerr << "note: " << n << "\n";
    return g;
}

struct Range {
    int lo = 0;
    int hi = -1; // empty

    bool set() const { return hi >= lo && !(lo == 0 && hi == -1); }
    std::vector<int> values() const {
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
};

Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad range '" + text + "' (expected A or A..B)");
    }
    if (r.hi < r.lo) fail(ErrorKind::ParseError, "bad range '" + text + "' (A > B)");
    return r;
}

struct CheckOptions {
    std::string theorem;
    std::string n, m, t, a, b;
    std::string family = "path";
    std::string fam1 = "path", fam2 = "path";
    std::string mode = "regular";
    std::string instance = "both";
    std::string convention = "vertices";
    std::string format = "csv";
};

Range required_range(const std::string& text, const char* flag) {
    if (text.empty())
        fail(ErrorKind::InvalidParameter, std::string("missing required range --") + flag);
    return parse_range(text);
}

std::vector<CheckParams> build_points(TheoremId id, const CheckOptions& opt) {
    std::vector<CheckParams> points;
    auto push = [&](const CheckParams& p) { points.push_back(p); };
    switch (id) {
        case TheoremId::BIPARTITE_ZERO:
        case TheoremId::COMPLEMENT_RREG_BOUND: {
            CheckParams base;
            base.family = opt.family;
            base.mode = opt.mode;
            if (opt.family == "kbip") {
                for (int a : required_range(opt.a, "a").values())
                    for (int b : required_range(opt.b, "b").values()) {
                        CheckParams p = base;
                        p.a = a;
                        p.b = b;
                        push(p);
                    }
            } else {
                for (int n : required_range(opt.n, "n").values()) {
                    CheckParams p = base;
                    p.n = n;
                    push(p);
                }
            }
            break;
        }
        case TheoremId::ODD_CYCLE_ONE:
        case TheoremId::CYCLE_PARITY:
        case TheoremId::COMPLETE_GRAPH:
        case TheoremId::FAN_SPARING:
        case TheoremId::WHEEL_SPARING:
        case TheoremId::COMPLEMENT_CYCLE:
            for (int n : required_range(opt.n, "n").values()) {
                CheckParams p;
                p.n = n;
                push(p);
            }
            break;
        case TheoremId::UNION_ADDITIVITY:
        case TheoremId::RINGSUM_PARITY:
            for (int m : required_range(opt.m, "m").values())
                for (int n : required_range(opt.n, "n").values())
                    for (int t : required_range(opt.t, "t").values()) {
                        CheckParams p;
                        p.m = m;
                        p.n = n;
                        p.t = t;
                        push(p);
                    }
            break;
        case TheoremId::JOIN_PP_SPARING:
        case TheoremId::JOIN_CC_SPARING:
        case TheoremId::JOIN_PC_SPARING:
        case TheoremId::JOIN_ONE_UNIFORM_LAW:
            for (int m : required_range(opt.m, "m").values())
                for (int n : required_range(opt.n, "n").values()) {
                    CheckParams p;
                    p.m = m;
                    p.n = n;
                    p.fam1 = opt.fam1;
                    p.fam2 = opt.fam2;
                    push(p);
                }
            break;
        case TheoremId::SELF_COMPL_REGULAR:
        case TheoremId::SELF_COMPL_COUNT: {
            std::vector<std::string> instances;
            if (opt.instance == "both")
                instances = {"p4", "c5"};
            else
                instances = {opt.instance};
            for (const auto& inst : instances) {
                CheckParams p;
                p.instance = inst;
                push(p);
            }
            break;
        }
    }
    return points;
}

int cmd_check(const CheckOptions& opt, const std::string& output) {
    TheoremId id = theorem_from_string(opt.theorem);
    ConventionFlag flag;
    if (opt.convention == "vertices")
        flag = ConventionFlag::Vertices;
    else if (opt.convention == "length")
        flag = ConventionFlag::Length;
    else if (opt.convention == "both")
        flag = ConventionFlag::Both;
    else
        fail(ErrorKind::InvalidParameter,
             "--convention must be vertices, length or both");

    auto rows = sweep(id, build_points(id, opt), flag);
    if (opt.format == "csv")
        emit(to_csv(rows), output);
    else if (opt.format == "md")
        emit(to_markdown(rows), output);
    else
        fail(ErrorKind::InvalidParameter, "--format must be csv or md");

    return summarize(rows).refuted > 0 ? kFailed : kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& labeling_path,
               const std::string& output) {
    Graph g = load_graph_file(graph_path);
    Labeling f = load_labeling_file(labeling_path);

    VerificationReport iasi_report = is_iasi(g, f);
    VerificationReport weak_report = is_weak_iasi(g, f);
    std::vector<Edge> mono = mono_indexed_edges(g, f);

    std::string out;
    out += std::string("iasi: ") + (iasi_report.verdict ? "true" : "false") + "\n";
    out += std::string("weak: ") + (weak_report.verdict ? "true" : "false") + "\n";
    out += "mono_edges:";
    for (const auto& [u, v] : mono) out += " " + std::to_string(u) + "-" + std::to_string(v);
    out += "\n";
    out += "mono_count: " + std::to_string(mono.size()) + "\n";
    for (const auto& v : weak_report.violations)
        out += "violation: " + to_string(v.kind) + ": " + v.detail + "\n";
    emit(out, output);
    return weak_report.verdict ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak integer additive set-indexer toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output;
    app.add_option("--output", output, "write the result to a file instead of stdout");

    std::string expr;
    auto* gen = app.add_subcommand("gen", "evaluate a graph expression, print graph file");
    gen->add_option("expr", expr, "graph expression, e.g. 'join(cycle(5),complete(1))'")
        ->required();

    auto* solve = app.add_subcommand("solve", "exact sparing number with certificate");
    solve->add_option("expr", expr, "graph expression or '@file'")->required();

    auto* spectrum = app.add_subcommand("spectrum", "achievable mono-indexed edge counts");
    spectrum->add_option("expr", expr, "graph expression or '@file'")->required();

    std::string graph_path, labeling_path;
    auto* verify = app.add_subcommand("verify", "verify a labeling against a graph");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("labeling", labeling_path, "labeling file")->required();

    CheckOptions copt;
    auto* check = app.add_subcommand("check", "adjudicate a cataloged sparing-number claim");
    check->add_option("theorem", copt.theorem, "theorem id, e.g. WHEEL_SPARING")->required();
    check->add_option("-n", copt.n, "range for n, e.g. 3..10");
    check->add_option("-m", copt.m, "range for m");
    check->add_option("-t", copt.t, "range for t (shared path edges)");
    check->add_option("-a", copt.a, "range for a (kbip)");
    check->add_option("-b", copt.b, "range for b (kbip)");
    check->add_option("--family", copt.family, "instance family: path|cycle|complete|kbip");
    check->add_option("--fam1", copt.fam1, "left join side family: path|cycle|complete");
    check->add_option("--fam2", copt.fam2, "right join side family: path|cycle|complete");
    check->add_option("--mode", copt.mode, "complement bound mode: regular|maxdeg");
    check->add_option("--instance", copt.instance, "self-complementary instance: p4|c5|both");
    check->add_option("--convention", copt.convention, "vertices|length|both");
    check->add_option("--format", copt.format, "csv|md");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            emit(write_graph(evaluate(expr)), output);
            return kOk;
        }
        if (solve->parsed()) {
            SparingCertificate cert = sparing_exact(evaluate(expr));
            emit(write_certificate(cert) + "\n", output);
            return kOk;
        }
        if (spectrum->parsed()) {
            auto counts = mono_count_spectrum(evaluate(expr));
            std::string out;
            for (int c : counts) {
                if (!out.empty()) out += " ";
                out += std::to_string(c);
            }
            emit(out + "\n", output);
            return kOk;
        }
        if (verify->parsed()) return cmd_verify(graph_path, labeling_path, output);
        if (check->parsed()) return cmd_check(copt, output);
    } catch (const iasi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
