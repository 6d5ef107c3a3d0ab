#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tough/vertex_set.hpp"

namespace tough {

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    /// Duplicate edges collapse; out-of-range endpoints and loops throw GraphError.
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
        : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()))
    {
    }
    /// Adopts prebuilt adjacency; validates symmetry and loops.
    static Graph from_adjacency(std::vector<VertexSet> adj);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }
    const VertexSet& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
    std::size_t degree(Vertex v) const { return neighbors(v).count(); }
    /// Edges in ascending (u, v) order.
    std::vector<Edge> edges() const;
    VertexSet all() const { return VertexSet::full(order()); }
    VertexSet empty_set() const { return VertexSet(order()); }

    /// Low adjacency words; requires order() <= 64.
    std::vector<std::uint64_t> masks() const;

    /// Relabels vertex v as perm[v].
    Graph permuted(std::span<const Vertex> perm) const;
    /// Subgraph induced on `keep`, vertices renumbered in ascending order.
    Graph induced(const VertexSet& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
/// G - e. Throws GraphError if e is absent.
Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

struct Components {
    std::size_t count = 0;
    /// Component id per vertex; -1 for removed vertices.
    std::vector<int> label;
};

/// omega(G - S) with a per-vertex labelling.
Components components_excluding(const Graph& g, const VertexSet& removed);
/// Count only; allocation-free word-parallel sweep.
std::size_t count_components(const Graph& g, const VertexSet& removed);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// Word-parallel component count on a graph with at most 64 vertices.
/// `alive` is the set of surviving vertices.
inline int count_components_64(const std::uint64_t* adj, std::uint64_t alive) noexcept
{
    int count = 0;
    while (alive != 0) {
        std::uint64_t frontier = alive & (~alive + 1);
        std::uint64_t comp = frontier;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f != 0; f &= f - 1)
                next |= adj[std::countr_zero(f)];
            next &= alive & ~comp;
            comp |= next;
            frontier = next;
        }
        alive &= ~comp;
        ++count;
    }
    return count;
}

struct DegreeProfile {
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    bool regular = true;
    std::vector<std::size_t> degrees;
};

DegreeProfile degree_profile(const Graph& g);

}  // namespace tough
