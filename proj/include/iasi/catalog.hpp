#ifndef IASI_CATALOG_HPP
#define IASI_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/sparing.hpp"

namespace iasi {

/// Every closed-form sparing formula / admissibility claim in the catalog.
enum class TheoremId {
    BIPARTITE_ZERO,
    ODD_CYCLE_ONE,
    CYCLE_PARITY,
    COMPLETE_GRAPH,
    UNION_ADDITIVITY,
    FAN_SPARING,
    WHEEL_SPARING,
    JOIN_PP_SPARING,
    JOIN_CC_SPARING,
    JOIN_PC_SPARING,
    JOIN_ONE_UNIFORM_LAW,
    RINGSUM_PARITY,
    COMPLEMENT_CYCLE,
    COMPLEMENT_RREG_BOUND,
    SELF_COMPL_REGULAR,
    SELF_COMPL_COUNT,
};

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& name);
const std::vector<TheoremId>& all_theorems();

/// Size interpretation for formulas quoting P_n / C_n: "n vertices" or
/// "length n" (n edges, n+1 vertices for paths; identical for cycles).
enum class Convention { Vertices, Length, NotApplicable };
std::string to_string(Convention c);

enum class ConventionFlag { Vertices, Length, Both };

/// Flat parameter bag; each theorem reads the fields of its schema and
/// rejects missing ones.
struct CheckParams {
    std::optional<int> n, m, t, a, b;
    std::string family;     // bipartite_zero / complement_rreg instance family
    std::string fam1, fam2; // join one-uniform law sides (sizes m and n)
    std::string mode;       // complement_rreg: "regular" | "maxdeg"
    std::string instance;   // self-complementary: "p4" | "c5"
};

std::string render_params(TheoremId id, const CheckParams& p);

struct PaperPrediction {
    enum class Kind { Value, LowerBound, Predicate };
    Kind kind = Kind::Value;
    long long value = 0;  // Value / LowerBound
    std::string text;     // rendered form, e.g. "6", ">=3", "all odd"
    std::string remarks;
};

/// The claimed value/predicate exactly as printed, even where suspect;
/// adjudication is check()'s job.
PaperPrediction paper_formula(TheoremId id, const CheckParams& p, Convention conv);

struct TheoremReport {
    enum class Verdict { CONFIRMED, REFUTED, NOT_APPLICABLE };

    TheoremId id;
    std::string params;
    Convention convention = Convention::NotApplicable;
    std::string paper_value;
    std::string oracle_value;
    Verdict verdict = Verdict::NOT_APPLICABLE;
    std::string witness;
    std::string remarks; // markdown output only; the CSV schema is pinned
};

std::string to_string(TheoremReport::Verdict v);

/// Builds the instance, runs the exact solver side, compares, and attaches a
/// verified witness. Throws on schema violations and on instances above the
/// 24-vertex solver limit.
TheoremReport check(TheoremId id, const CheckParams& p,
                    Convention conv = Convention::Vertices);

/// Two cycles C_m and C_n overlapping in a common path of t edges; the ring
/// sum is a cycle of length m+n-2t. Compares the parity case analysis against
/// the solver on the constructed ring sum.
TheoremReport ringsum_cycle_case(int m, int n, int t);

/// One report per parameter point, in the given order; under
/// ConventionFlag::Both the convention-sensitive theorems get one row per
/// interpretation (vertices first). Per-row errors are recorded in the row
/// (verdict NOT_APPLICABLE, witness "error: ..."), and the sweep continues.
std::vector<TheoremReport> sweep(TheoremId id, const std::vector<CheckParams>& points,
                                 ConventionFlag conventions = ConventionFlag::Vertices);

struct SweepSummary {
    int confirmed = 0;
    int refuted = 0;
    int not_applicable = 0;
};

SweepSummary summarize(const std::vector<TheoremReport>& rows);

std::string to_csv(const std::vector<TheoremReport>& rows);
std::string to_markdown(const std::vector<TheoremReport>& rows);

/// C_m and C_n sharing a path of t edges (t = 0 gives vertex-disjoint cycles).
/// Shared path is 0..t; extra vertices get fresh ids. Returns the two cycles.
std::pair<Graph, Graph> two_cycles_sharing_path(int m, int n, int t);

} // namespace iasi

#endif
