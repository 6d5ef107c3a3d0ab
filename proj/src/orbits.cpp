#include <algorithm>
#include <map>
#include <numeric>

#include "tough/invariants.hpp"

namespace tough {

namespace {

// Stable colour refinement started from degrees; colours are isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g)
{
    std::size_t n = g.order();
    std::vector<int> color(n);
    for (std::size_t v = 0; v < n; ++v) color[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<int>, int> ids;
        std::vector<std::vector<int>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (Vertex w : g.neighbors(static_cast<Vertex>(v))) nb.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
            ids.emplace(sig[v], 0);
        }
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        for (std::size_t v = 0; v < n; ++v) color[v] = ids[sig[v]];
        if (ids.size() == classes) return color;
        classes = ids.size();
    }
}

class AutomorphismSearch {
public:
    AutomorphismSearch(const Graph& g, std::vector<int> color) : g_(g), color_(std::move(color)) {}

    std::optional<std::vector<Vertex>> find(Vertex u0, Vertex v0, Vertex u1, Vertex v1)
    {
        std::size_t n = g_.order();
        if (color_[static_cast<std::size_t>(u0)] != color_[static_cast<std::size_t>(u1)] ||
            color_[static_cast<std::size_t>(v0)] != color_[static_cast<std::size_t>(v1)])
            return std::nullopt;
        if (g_.adjacent(u0, v0) != g_.adjacent(u1, v1)) return std::nullopt;
        if ((u0 == v0) != (u1 == v1)) return std::nullopt;

        // Source order: breadth-first from u0 so each new vertex has mapped neighbours.
        order_.clear();
        std::vector<char> seen(n, 0);
        auto visit_from = [&](Vertex s) {
            std::size_t head = order_.size();
            order_.push_back(s);
            seen[static_cast<std::size_t>(s)] = 1;
            while (head < order_.size()) {
                Vertex x = order_[head++];
                for (Vertex y : g_.neighbors(x))
                    if (!seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = 1;
                        order_.push_back(y);
                    }
            }
        };
        visit_from(u0);
        if (!seen[static_cast<std::size_t>(v0)]) visit_from(v0);
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v]) visit_from(static_cast<Vertex>(v));

        perm_.assign(n, -1);
        used_ = VertexSet(n);
        perm_[static_cast<std::size_t>(u0)] = u1;
        used_.insert(u1);
        if (u0 != v0) {
            perm_[static_cast<std::size_t>(v0)] = v1;
            used_.insert(v1);
        }
        if (!consistent(v0, v1)) return std::nullopt;
        if (extend(0)) return perm_;
        return std::nullopt;
    }

private:
    // Adjacency of x to already-mapped vertices matches that of its image t.
    bool consistent(Vertex x, Vertex t) const
    {
        for (std::size_t y = 0; y < perm_.size(); ++y) {
            Vertex img = perm_[y];
            if (img < 0 || static_cast<Vertex>(y) == x) continue;
            if (g_.adjacent(x, static_cast<Vertex>(y)) != g_.adjacent(t, img)) return false;
        }
        return true;
    }

    bool extend(std::size_t k)
    {
        while (k < order_.size() && perm_[static_cast<std::size_t>(order_[k])] >= 0) ++k;
        if (k == order_.size()) return true;
        Vertex x = order_[k];
        auto ux = static_cast<std::size_t>(x);
        for (std::size_t t = 0; t < perm_.size(); ++t) {
            auto vt = static_cast<Vertex>(t);
            if (used_.contains(vt) || color_[t] != color_[ux]) continue;
            if (!consistent(x, vt)) continue;
            perm_[ux] = vt;
            used_.insert(vt);
            if (extend(k + 1)) return true;
            used_.erase(vt);
            perm_[ux] = -1;
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> color_;
    std::vector<Vertex> order_;
    std::vector<Vertex> perm_;
    VertexSet used_;
};

std::vector<Vertex> compose(const std::vector<Vertex>& outer, const std::vector<Vertex>& inner)
{
    std::vector<Vertex> out(inner.size());
    for (std::size_t v = 0; v < inner.size(); ++v) out[v] = outer[static_cast<std::size_t>(inner[v])];
    return out;
}

}  // namespace

bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm)
{
    if (perm.size() != g.order()) return false;
    VertexSet image(g.order());
    for (Vertex p : perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= g.order() || image.contains(p)) return false;
        image.insert(p);
    }
    for (Edge e : g.edges())
        if (!g.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) return false;
    return true;
}

std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Vertex u0, Vertex v0, Vertex u1, Vertex v1)
{
    AutomorphismSearch search(g, refine_colors(g));
    return search.find(u0, v0, u1, v1);
}

EdgeOrbits edge_orbits(const Graph& g, std::size_t limit)
{
    if (g.order() > limit)
        throw OrbitLimitExceeded("edge_orbits: order " + std::to_string(g.order()) + " exceeds limit " +
                                 std::to_string(limit));
    EdgeOrbits out;
    out.edges = g.edges();
    std::size_t m = out.edges.size();
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    out.orbit_of.assign(m, unassigned);
    out.from_representative.assign(m, {});
    std::map<Edge, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index[out.edges[i]] = i;

    std::vector<Vertex> identity(g.order());
    std::iota(identity.begin(), identity.end(), 0);
    AutomorphismSearch search(g, refine_colors(g));

    for (std::size_t r = 0; r < m; ++r) {
        if (out.orbit_of[r] != unassigned) continue;
        std::size_t orbit = out.representative.size();
        out.representative.push_back(r);
        out.orbit_of[r] = orbit;
        out.from_representative[r] = identity;
        std::vector<std::size_t> members{r};

        // Close the orbit under every automorphism found; each new map is
        // applied to all known members so few searches are needed.
        auto absorb = [&](const std::vector<Vertex>& phi) {
            for (std::size_t k = 0; k < members.size(); ++k) {
                std::size_t f = members[k];
                Edge img(phi[static_cast<std::size_t>(out.edges[f].u)], phi[static_cast<std::size_t>(out.edges[f].v)]);
                std::size_t j = index.at(img);
                if (out.orbit_of[j] != unassigned) continue;
                out.orbit_of[j] = orbit;
                out.from_representative[j] = compose(phi, out.from_representative[f]);
                members.push_back(j);
            }
        };
        const Edge rep = out.edges[r];
        for (std::size_t f = r + 1; f < m; ++f) {
            if (out.orbit_of[f] != unassigned) continue;
            const Edge target = out.edges[f];
            auto phi = search.find(rep.u, rep.v, target.u, target.v);
            if (!phi) phi = search.find(rep.u, rep.v, target.v, target.u);
            if (!phi) continue;
            absorb(*phi);
        }
    }
    return out;
}

}  // namespace tough
