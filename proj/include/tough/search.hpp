#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tough/graph.hpp"
#include "tough/ratio.hpp"
#include "tough/toughness.hpp"

namespace tough {

class EnumerationLimit : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Upper-triangle bits in graph6 column order, first pair in the most
/// significant position. Requires n <= 11.
std::uint64_t triangle_code(const Graph& g);

/// Minimum triangle code over all relabelings; equal exactly for isomorphic graphs.
std::uint64_t canonical_code(const Graph& g);

/// Relabeling realizing canonical_code: vertex v moves to position perm[v].
std::vector<Vertex> canonical_labeling(const Graph& g);

/// One canonical representative per isomorphism class of connected graphs
/// on n vertices (1 <= n <= 8), sorted by canonical code.
std::vector<Graph> enumerate_connected(std::size_t n);

struct SearchOptions {
    GkcConfig gkc;
    bool non_regular_only = false;
    std::size_t min_n = 0;
    std::size_t max_n = 0;  // 0 = unbounded
    int threads = 0;        // 0 = all cores
};

struct Counterexample {
    std::string g6;
    Ratio toughness;
    std::size_t min_degree = 0;
    std::int64_t ceil_2t = 0;
    Ratio degree_ratio;
    bool regular = false;
};

struct Undecided {
    std::size_t line = 0;
    std::string g6;
    std::string reason;
};

struct ParseFailure {
    std::size_t line = 0;
    std::string message;
};

struct SearchReport {
    std::size_t scanned = 0;
    std::size_t rejected = 0;
    std::vector<Counterexample> flagged;
    std::vector<Undecided> inconclusive;
    std::vector<ParseFailure> parse_errors;
    double wall_seconds = 0;

    /// Hit lines followed by the summary line.
    std::string to_text() const;
    std::string summary() const;
};

/// Runs gkc_filter over newline-separated graph6; results follow input order.
SearchReport filter_counterexamples(std::istream& in, const SearchOptions& options = {});

/// Same filter over graphs already in memory.
SearchReport filter_counterexamples(const std::vector<Graph>& graphs, const SearchOptions& options = {});

}  // namespace tough
