#include "iasi/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "iasi/error.hpp"

namespace iasi {

namespace {

using ordered_json = nlohmann::ordered_json;

int dense_index(const std::vector<int>& ids, int id) {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    return static_cast<int>(it - ids.begin());
}

ordered_json labeling_json(const Labeling& f) {
    ordered_json obj = ordered_json::object();
    for (const auto& [v, label] : f) // std::map iterates ids ascending
        obj[std::to_string(v)] = label.elements();
    return obj;
}

} // namespace

std::string write_graph(const Graph& g) {
    const auto& ids = g.vertices();
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += "e " + std::to_string(dense_index(ids, u)) + " " +
               std::to_string(dense_index(ids, v)) + "\n";
    return out;
}

Graph read_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    int seen_edges = 0;
    Graph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0)
                fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": duplicate p line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                fail(ErrorKind::ParseError,
                     "line " + std::to_string(lineno) + ": expected 'p edge <n> <m>'");
            for (int v = 0; v < n; ++v) g.add_vertex(v);
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                fail(ErrorKind::ParseError,
                     "line " + std::to_string(lineno) + ": edge before 'p edge' header");
            int u = -1, v = -1;
            if (!(ls >> u >> v))
                fail(ErrorKind::ParseError,
                     "line " + std::to_string(lineno) + ": expected 'e <u> <v>'");
            if (u < 0 || v < 0 || u >= n || v >= n)
                fail(ErrorKind::ParseError,
                     "line " + std::to_string(lineno) + ": vertex id out of range");
            if (u >= v)
                fail(ErrorKind::ParseError,
                     "line " + std::to_string(lineno) + ": edges must satisfy u < v");
            if (g.has_edge(u, v))
                fail(ErrorKind::ParseError,
                     "line " + std::to_string(lineno) + ": duplicate edge");
            g.add_edge(u, v);
            ++seen_edges;
            continue;
        }
        fail(ErrorKind::ParseError,
             "line " + std::to_string(lineno) + ": unknown line tag '" + tag + "'");
    }
    if (n < 0) fail(ErrorKind::ParseError, "missing 'p edge <n> <m>' header");
    if (seen_edges != m)
        fail(ErrorKind::ParseError, "header declares " + std::to_string(m) + " edges, found " +
                                        std::to_string(seen_edges));
    return g;
}

std::string write_labeling(const Labeling& f) {
    return labeling_json(f).dump();
}

Labeling read_labeling(const std::string& text) {
    ordered_json obj;
    try {
        obj = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("labeling is not valid JSON: ") + e.what());
    }
    if (!obj.is_object())
        fail(ErrorKind::ParseError, "labeling must be a JSON object");
    Labeling f;
    for (const auto& [key, value] : obj.items()) {
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorKind::ParseError, "labeling key '" + key + "' is not a vertex id");
        if (!value.is_array() || value.empty())
            fail(ErrorKind::ParseError,
                 "label for vertex " + key + " must be a nonempty array");
        std::vector<std::int64_t> elems;
        for (const auto& x : value) {
            if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
                fail(ErrorKind::ParseError,
                     "label for vertex " + key + " must contain non-negative integers");
            elems.push_back(x.get<std::int64_t>());
        }
        int vertex = 0;
        try {
            vertex = std::stoi(key);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "labeling key '" + key + "' is out of range");
        }
        f.emplace(vertex, LabelSet(std::move(elems)));
    }
    return f;
}

std::string write_certificate(const SparingCertificate& cert) {
    ordered_json obj = ordered_json::object();
    obj["value"] = cert.value;
    obj["expanded"] = cert.pattern.expanded;
    obj["labeling"] = labeling_json(cert.labeling);
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : cert.mono_edges) edges.push_back({u, v});
    obj["mono_edges"] = edges;
    return obj.dump();
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void save_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::IoError, "cannot write " + path);
    out << content;
    if (!out) fail(ErrorKind::IoError, "write failed for " + path);
}

Graph load_graph_file(const std::string& path) {
    return read_graph(load_text_file(path));
}

Labeling load_labeling_file(const std::string& path) {
    return read_labeling(load_text_file(path));
}

} // namespace iasi
