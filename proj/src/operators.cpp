#include "tough/operators.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tough {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

Graph complete(std::size_t n)
{
    if (n < 1) throw GraphError("complete: n must be >= 1");
    EdgeList es;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) es.emplace_back(vx(u), vx(v));
    return Graph(n, es);
}

Graph path(std::size_t n)
{
    if (n < 1) throw GraphError("path: n must be >= 1");
    EdgeList es;
    for (std::size_t v = 0; v + 1 < n; ++v) es.emplace_back(vx(v), vx(v + 1));
    return Graph(n, es);
}

Graph cycle(std::size_t n)
{
    if (n < 3) throw GraphError("cycle: n must be >= 3");
    EdgeList es;
    for (std::size_t v = 0; v < n; ++v) es.emplace_back(vx(v), vx((v + 1) % n));
    return Graph(n, es);
}

LineGraph line_graph(const Graph& g)
{
    LineGraph out;
    out.edge_of = g.edges();
    if (out.edge_of.empty()) throw GraphError("line_graph: graph has no edges");
    const auto& es = out.edge_of;
    EdgeList lines;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            if (es[a].u == es[b].u || es[a].u == es[b].v || es[a].v == es[b].u || es[a].v == es[b].v)
                lines.emplace_back(vx(a), vx(b));
    out.graph = Graph(es.size(), lines);
    return out;
}

Graph subdivision(const Graph& g)
{
    auto es = g.edges();
    EdgeList out;
    std::size_t n = g.order();
    for (std::size_t k = 0; k < es.size(); ++k) {
        out.emplace_back(es[k].u, vx(n + k));
        out.emplace_back(es[k].v, vx(n + k));
    }
    return Graph(n + es.size(), out);
}

Graph square(const Graph& g)
{
    std::vector<VertexSet> adj;
    adj.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        VertexSet reach = g.neighbors(vx(v));
        for (Vertex w : g.neighbors(vx(v))) reach |= g.neighbors(w);
        reach.erase(vx(v));
        adj.push_back(reach);
    }
    return Graph::from_adjacency(std::move(adj));
}

ProductGraph cartesian_product(const Graph& g, const Graph& h)
{
    ProductGraph out;
    std::size_t ng = g.order();
    std::size_t nh = h.order();
    auto idx = [nh](std::size_t v, std::size_t w) { return vx(v * nh + w); };
    for (std::size_t v = 0; v < ng; ++v)
        for (std::size_t w = 0; w < nh; ++w) out.pair_of.emplace_back(vx(v), vx(w));
    EdgeList es;
    for (std::size_t v = 0; v < ng; ++v)
        for (Edge f : h.edges()) es.emplace_back(idx(v, static_cast<std::size_t>(f.u)), idx(v, static_cast<std::size_t>(f.v)));
    for (Edge e : g.edges())
        for (std::size_t w = 0; w < nh; ++w) es.emplace_back(idx(static_cast<std::size_t>(e.u), w), idx(static_cast<std::size_t>(e.v), w));
    out.graph = Graph(ng * nh, es);
    return out;
}

Graph circulant(std::size_t n, const std::vector<long>& residues)
{
    if (n < 2) throw GraphError("circulant: n must be >= 2");
    auto m = static_cast<long>(n);
    std::set<long> steps;
    for (long r : residues) {
        long red = ((r % m) + m) % m;
        if (red == 0) throw GraphError("circulant: residue " + std::to_string(r) + " is 0 mod " + std::to_string(n));
        steps.insert(red);
        steps.insert(m - red);
    }
    EdgeList es;
    for (long i = 0; i < m; ++i)
        for (long d : steps) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + d) % m));
    return Graph(n, es);
}

SolidSpec SolidSpec::uniform(Graph base, std::size_t s)
{
    SolidSpec spec;
    spec.multiplicity.assign(base.order(), s);
    spec.base = std::move(base);
    return spec;
}

std::size_t SolidSpec::expanded_order() const
{
    std::size_t total = 0;
    for (std::size_t s : multiplicity) total += s;
    return total;
}

SolidGraph solid_expand(const SolidSpec& spec)
{
    const Graph& base = spec.base;
    if (spec.multiplicity.size() != base.order()) throw GraphError("solid_expand: multiplicity size mismatch");
    if (std::any_of(spec.multiplicity.begin(), spec.multiplicity.end(), [](std::size_t s) { return s == 0; }))
        throw GraphError("solid_expand: multiplicities must be >= 1");
    std::size_t total = spec.expanded_order();
    if (total > VertexSet::max_vertices) throw GraphError("solid_expand: expanded order exceeds 512");

    SolidGraph out;
    std::vector<std::size_t> offset(base.order());
    for (std::size_t v = 0, next = 0; v < base.order(); ++v) {
        offset[v] = next;
        VertexSet cls(total);
        for (std::size_t c = 0; c < spec.multiplicity[v]; ++c) {
            out.copy_of.emplace_back(vx(v), c);
            cls.insert(vx(next + c));
        }
        out.classes.push_back(cls);
        next += spec.multiplicity[v];
    }
    EdgeList es;
    for (Edge e : base.edges()) {
        auto bu = static_cast<std::size_t>(e.u);
        auto bv = static_cast<std::size_t>(e.v);
        for (std::size_t a = 0; a < spec.multiplicity[bu]; ++a)
            for (std::size_t b = 0; b < spec.multiplicity[bv]; ++b) es.emplace_back(vx(offset[bu] + a), vx(offset[bv] + b));
    }
    out.graph = Graph(total, es);
    return out;
}

}  // namespace tough
