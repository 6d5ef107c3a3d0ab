#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

struct IndependentSet {
    std::size_t alpha = 0;
    VertexSet members;
};

/// Exact independence number by branch-and-bound: branch on the vertex of
/// highest remaining degree (lowest index on ties), bound by a greedy
/// sequential clique cover of the candidates.
IndependentSet independence_number(const Graph& g);

/// Every independent set of size alpha(g), ascending by bit-vector.
std::vector<VertexSet> maximum_independent_sets(const Graph& g);

/// Exact vertex connectivity; kappa(K_n) = n - 1, kappa of a disconnected graph is 0.
std::size_t vertex_connectivity(const Graph& g);

/// Minimum number of internally disjoint u-w paths (u, w non-adjacent),
/// by unit-capacity augmenting paths on the split-vertex digraph.
std::size_t local_connectivity(const Graph& g, Vertex u, Vertex w);

struct ClawCheck {
    bool claw_free = true;
    std::optional<std::array<Vertex, 4>> witness;  // center, then three pairwise non-adjacent leaves
};
ClawCheck is_claw_free(const Graph& g);

/// Cyclic neighbour order around each vertex.
struct RotationSystem {
    std::vector<std::vector<Vertex>> order;

    /// One line per vertex: "v: w1 w2 ...".
    std::string to_text() const;
    static RotationSystem parse(const std::string& text);
};

class RotationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EmbeddingCheck {
    bool ok = false;
    std::size_t faces = 0;
};

/// Traces faces (the dart u->v is followed by v->succ_v(u)) and checks
/// V - E + F = 2 on a connected graph. Throws RotationError when a vertex's
/// list is not a permutation of its neighbours.
EmbeddingCheck verify_embedding(const Graph& g, const RotationSystem& rot);

/// Partition of E(g) into orbits of Aut(g).
struct EdgeOrbits {
    std::vector<Edge> edges;                         // ascending, as g.edges()
    std::vector<std::size_t> orbit_of;               // per edge index
    std::vector<std::size_t> representative;         // per orbit: edge index
    /// Per edge index: an automorphism (vertex permutation) carrying the
    /// orbit representative onto that edge.
    std::vector<std::vector<Vertex>> from_representative;

    std::size_t orbit_count() const { return representative.size(); }
};

class OrbitLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

EdgeOrbits edge_orbits(const Graph& g, std::size_t limit = 48);

/// An automorphism sending u0 -> u1 and v0 -> v1, if one exists.
std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Vertex u0, Vertex v0, Vertex u1, Vertex v1);

bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace tough
