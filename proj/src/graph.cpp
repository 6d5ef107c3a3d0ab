#include "tough/graph.hpp"

#include <algorithm>
#include <string>

namespace tough {

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    if (n > VertexSet::max_vertices) throw GraphError("graph order exceeds 512");
    adj_.assign(n, VertexSet(n));
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
            throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for order " +
                             std::to_string(n));
        if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
        if (!adj_[static_cast<std::size_t>(a)].contains(b)) {
            adj_[static_cast<std::size_t>(a)].insert(b);
            adj_[static_cast<std::size_t>(b)].insert(a);
            ++edge_count_;
        }
    }
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj)
{
    Graph g;
    std::size_t n = adj.size();
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() != n) throw GraphError("adjacency width mismatch");
        if (adj[v].contains(static_cast<Vertex>(v))) throw GraphError("loop at vertex " + std::to_string(v));
        for (Vertex w : adj[v])
            if (!adj[static_cast<std::size_t>(w)].contains(static_cast<Vertex>(v)))
                throw GraphError("asymmetric adjacency");
        degree_sum += adj[v].count();
    }
    g.adj_ = std::move(adj);
    g.edge_count_ = degree_sum / 2;
    return g;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

std::vector<std::uint64_t> Graph::masks() const
{
    if (order() > 64) throw GraphError("masks() requires order <= 64");
    std::vector<std::uint64_t> out(order());
    for (std::size_t v = 0; v < order(); ++v) out[v] = adj_[v].mask();
    return out;
}

Graph Graph::permuted(std::span<const Vertex> perm) const
{
    if (perm.size() != order()) throw GraphError("permutation size mismatch");
    std::vector<VertexSet> adj(order(), VertexSet(order()));
    for (std::size_t u = 0; u < order(); ++u)
        for (Vertex v : adj_[u]) adj[static_cast<std::size_t>(perm[u])].insert(perm[static_cast<std::size_t>(v)]);
    return from_adjacency(std::move(adj));
}

Graph Graph::induced(const VertexSet& keep) const
{
    std::vector<int> index(order(), -1);
    int next = 0;
    for (Vertex v : keep) index[static_cast<std::size_t>(v)] = next++;
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Edge e : edges())
        if (keep.contains(e.u) && keep.contains(e.v))
            es.emplace_back(index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]);
    return Graph(static_cast<std::size_t>(next), es);
}

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) { return Graph(n, edges); }

Graph delete_edge(const Graph& g, Edge e)
{
    if (e.u < 0 || static_cast<std::size_t>(e.v) >= g.order() || !g.adjacent(e.u, e.v))
        throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not present");
    std::vector<VertexSet> adj;
    adj.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(static_cast<Vertex>(v)));
    adj[static_cast<std::size_t>(e.u)].erase(e.v);
    adj[static_cast<std::size_t>(e.v)].erase(e.u);
    return Graph::from_adjacency(std::move(adj));
}

Graph add_edge(const Graph& g, Edge e)
{
    auto es = g.edges();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(es.size() + 1);
    for (Edge f : es) pairs.emplace_back(f.u, f.v);
    pairs.emplace_back(e.u, e.v);
    return Graph(g.order(), pairs);
}

Components components_excluding(const Graph& g, const VertexSet& removed)
{
    Components out;
    out.label.assign(g.order(), -1);
    VertexSet alive = removed.complement();
    while (!alive.empty()) {
        VertexSet comp(g.order());
        comp.insert(alive.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(g.order());
            for (Vertex v : frontier) next |= g.neighbors(v);
            next &= alive;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        for (Vertex v : comp) out.label[static_cast<std::size_t>(v)] = static_cast<int>(out.count);
        alive -= comp;
        ++out.count;
    }
    return out;
}

std::size_t count_components(const Graph& g, const VertexSet& removed)
{
    std::size_t count = 0;
    VertexSet alive = removed.complement();
    while (!alive.empty()) {
        VertexSet comp(g.order());
        comp.insert(alive.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(g.order());
            for (Vertex v : frontier) next |= g.neighbors(v);
            next &= alive;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        alive -= comp;
        ++count;
    }
    return count;
}

bool is_connected(const Graph& g) { return count_components(g, g.empty_set()) == 1; }

bool is_complete(const Graph& g)
{
    std::size_t n = g.order();
    return n >= 1 && g.size() == n * (n - 1) / 2;
}

DegreeProfile degree_profile(const Graph& g)
{
    DegreeProfile p;
    p.degrees.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(static_cast<Vertex>(v)));
    if (!p.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *lo;
        p.max_degree = *hi;
    }
    p.regular = p.min_degree == p.max_degree;
    return p;
}

}  // namespace tough
