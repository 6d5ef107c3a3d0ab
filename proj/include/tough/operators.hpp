#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

// Vertex-order conventions:
//   line_graph         vertex k is the k-th edge of g in ascending (u, v) order
//   subdivision        originals keep 0..n-1; the vertex on edge k is n + k
//   cartesian_product  (v, w) -> v * |V(h)| + w
//   solid_expand       base order, then copy number

Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);

struct LineGraph {
    Graph graph;
    std::vector<Edge> edge_of;  // line-graph vertex -> edge of the source graph
};
LineGraph line_graph(const Graph& g);

Graph subdivision(const Graph& g);
Graph square(const Graph& g);

struct ProductGraph {
    Graph graph;
    std::vector<std::pair<Vertex, Vertex>> pair_of;  // product vertex -> (v, w)
};
ProductGraph cartesian_product(const Graph& g, const Graph& h);

/// Residues are reduced mod n and closed under negation. A residue of 0 throws.
Graph circulant(std::size_t n, const std::vector<long>& residues);

/// Blow-up: vertex v becomes multiplicity[v] pairwise non-adjacent copies.
struct SolidSpec {
    Graph base;
    std::vector<std::size_t> multiplicity;

    static SolidSpec uniform(Graph base, std::size_t s);
    std::size_t expanded_order() const;
};

struct SolidGraph {
    Graph graph;
    std::vector<std::pair<Vertex, std::size_t>> copy_of;  // expanded vertex -> (base vertex, copy)
    std::vector<VertexSet> classes;                       // base vertex -> its copies
};
SolidGraph solid_expand(const SolidSpec& spec);

}  // namespace tough
