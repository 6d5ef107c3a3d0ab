#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tough/certificate.hpp"
#include "tough/graph.hpp"
#include "tough/operators.hpp"
#include "tough/ratio.hpp"

namespace tough {

enum class Method { exact, reduced_solid, heuristic_upper_bound };
std::string to_string(Method m);

struct ToughnessResult {
    Ratio value;
    std::optional<CutCertificate> witness;  // absent iff value is infinite
    Method method = Method::exact;
};

class LimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

struct ExactConfig {
    std::size_t exhaustive_limit = 26;
    int threads = 0;  // <= 0: all available
    bool prune_connectivity = true;
    bool prune_independence = true;
    bool prune_twins = true;
    unsigned shard_bits = 10;  // 2^k prefix shards per size level
};

/// t(G) by exhaustive cut enumeration with admissible prunes.
///
/// Complete graphs give inf with no witness; disconnected graphs give 0
/// with S = {}. Among minimisers the witness has the fewest vertices, then
/// the smallest bit-vector. Throws LimitExceeded above cfg.exhaustive_limit
/// (and always above 64 vertices).
ToughnessResult toughness_exact(const Graph& g, const ExactConfig& cfg = {});

/// Serial prune-free enumeration of all 2^n subsets; same conventions and
/// tie-break as toughness_exact.
ToughnessResult toughness_reference(const Graph& g, std::size_t limit = 26);

/// A certificate with ratio strictly below `bound`, or nullopt when none
/// exists. Deterministic: the best cut among the smallest size levels that
/// contain any such cut.
std::optional<CutCertificate> find_cut_below(const Graph& g, const Ratio& bound, const ExactConfig& cfg = {});

/// Minimises |S|/omega over unions of whole copy classes of the blow-up.
/// Exact for blow-ups: a minimiser never splits a class of non-adjacent twins.
ToughnessResult solid_reduced_toughness(const SolidSpec& spec, const ExactConfig& cfg = {});

struct UpperSearchConfig {
    double budget_secs = 60.0;        // wall-clock cap; iteration counts below normally bind first
    std::uint64_t seed = 0;
    std::size_t restarts = 20;
    double cooling = 0.95;            // geometric, applied once per temperature level
    double initial_temperature = 0.6;
    std::size_t temperature_levels = 120;
    std::size_t steps_per_level = 60;
    /// Units the search moves in and out of the cut as a whole. Empty means
    /// single vertices; for blow-ups pass the copy classes.
    std::vector<VertexSet> units;
};

class NoCutFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Seeded annealing over cuts. Returns the best valid certificate seen;
/// an upper bound on t(G), never claimed optimal.
CutCertificate toughness_upper_search(const Graph& g, const UpperSearchConfig& cfg = {});

enum class Verdict { minimal, not_minimal, inconclusive };
std::string to_string(Verdict v);

enum class WitnessSource { hint, heuristic, exhaustive };
std::string to_string(WitnessSource s);

struct EdgeWitness {
    Edge edge;
    std::optional<CutCertificate> cert;  // certificate for G - edge with ratio < t(G)
    std::optional<WitnessSource> source;
    bool via_orbit = false;              // mapped from the orbit representative
};

struct MinimalityReport {
    Ratio toughness;
    bool toughness_is_upper_bound = false;  // order beyond the exhaustive limit
    std::optional<CutCertificate> toughness_witness;
    std::vector<EdgeWitness> edges;  // ascending edge order
    Verdict verdict = Verdict::not_minimal;
    std::optional<Edge> failing_edge;  // not_minimal: exhaustive search found no cut below t
    std::string note;
};

struct MinimalityConfig {
    ExactConfig exact;
    UpperSearchConfig heuristic{.budget_secs = 10.0, .restarts = 4, .temperature_levels = 60, .steps_per_level = 40, .units = {}};
    bool use_heuristic = true;
    /// Below this order exhaustive search is cheaper than annealing.
    std::size_t heuristic_min_order = 13;
    bool use_edge_orbits = false;
    std::size_t orbit_limit = 48;
    /// Largest order for which G - e is searched exhaustively.
    std::size_t edge_exhaustive_limit = 26;
    bool stop_at_first_failure = true;
};

using EdgeHints = std::map<Edge, CutCertificate>;

/// Decides whether deleting any edge strictly lowers t(G). Every positive
/// per-edge answer carries a verified certificate for G - e; a negative
/// answer is backed by exhaustive search on the failing edge.
MinimalityReport is_minimally_tough(const Graph& g, const MinimalityConfig& cfg = {}, const EdgeHints& hints = {});

enum class GkcStatus { counterexample, not_counterexample, inconclusive };

struct GkcConfig {
    MinimalityConfig minimality;
    std::size_t min_delta = 0;  // optional degree pre-screen, 0 = off
};

struct GkcResult {
    GkcStatus status = GkcStatus::not_counterexample;
    std::optional<Ratio> toughness;
    std::size_t min_degree = 0;
    std::int64_t ceil_2t = 0;
    std::optional<Ratio> degree_ratio;  // delta / t
    bool regular = false;
    std::string reason;
};

/// Counterexample to the generalized Kriesell conjecture: connected,
/// non-complete, minimally t(G)-tough and delta(G) > ceil(2 t(G)).
GkcResult gkc_filter(const Graph& g, const GkcConfig& cfg = {});

}  // namespace tough
