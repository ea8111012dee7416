#ifndef IASI_IO_HPP
#define IASI_IO_HPP

#include <string>

#include "iasi/graph.hpp"
#include "iasi/label.hpp"
#include "iasi/sparing.hpp"

namespace iasi {

/// Graph text format:
///   p edge <n> <m>
///   e <u> <v>          (m lines, 0-based ids, u < v, sorted by (u, v))
/// Vertices are implicitly 0..n-1; the writer renumbers sparse ids to dense
/// ascending order. 'c' comment lines are ignored on read, never emitted.
std::string write_graph(const Graph& g);
Graph read_graph(const std::string& text);

/// Labeling text format: one JSON object mapping decimal vertex ids to
/// ascending arrays of non-negative integers, keys in ascending numeric
/// order, e.g. {"0":[3],"1":[9,10],"2":[27]}.
std::string write_labeling(const Labeling& f);
Labeling read_labeling(const std::string& text);

/// Certificate: {"value":..,"expanded":[..],"labeling":{..},"mono_edges":[[u,v],..]}.
std::string write_certificate(const SparingCertificate& cert);

Graph load_graph_file(const std::string& path);
Labeling load_labeling_file(const std::string& path);
std::string load_text_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& content);

} // namespace iasi

#endif
