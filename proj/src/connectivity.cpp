#include <algorithm>
#include <deque>
#include <limits>

#include "tough/invariants.hpp"

namespace tough {

namespace {

// Residual network for unit vertex capacities: vertex v splits into
// in(v) = 2v and out(v) = 2v + 1.
class SplitNetwork {
public:
    explicit SplitNetwork(const Graph& g) : head_(2 * g.order(), -1)
    {
        constexpr int inf = std::numeric_limits<int>::max() / 2;
        for (std::size_t v = 0; v < g.order(); ++v) add_arc(static_cast<int>(2 * v), static_cast<int>(2 * v + 1), 1);
        for (Edge e : g.edges()) {
            add_arc(2 * e.u + 1, 2 * e.v, inf);
            add_arc(2 * e.v + 1, 2 * e.u, inf);
        }
    }

    int max_flow(int source, int sink)
    {
        int flow = 0;
        std::vector<int> via(head_.size());
        while (true) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{source};
            via[static_cast<std::size_t>(source)] = -2;
            while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
                int x = queue.front();
                queue.pop_front();
                for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
                    const Arc& arc = arcs_[static_cast<std::size_t>(a)];
                    if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
                        via[static_cast<std::size_t>(arc.to)] = a;
                        queue.push_back(arc.to);
                    }
                }
            }
            if (via[static_cast<std::size_t>(sink)] == -1) return flow;
            for (int x = sink; x != source;) {
                int a = via[static_cast<std::size_t>(x)];
                arcs_[static_cast<std::size_t>(a)].cap -= 1;
                arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
                x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
            }
            ++flow;
        }
    }

private:
    struct Arc {
        int to;
        int cap;
        int next;
    };
    void add_arc(int from, int to, int cap)
    {
        arcs_.push_back({to, cap, head_[static_cast<std::size_t>(from)]});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size() - 1);
        arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size() - 1);
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

}  // namespace

std::size_t local_connectivity(const Graph& g, Vertex u, Vertex w)
{
    if (u == w || g.adjacent(u, w)) throw GraphError("local_connectivity: endpoints must be distinct and non-adjacent");
    SplitNetwork net(g);
    return static_cast<std::size_t>(net.max_flow(2 * u + 1, 2 * w));
}

std::size_t vertex_connectivity(const Graph& g)
{
    std::size_t n = g.order();
    if (n == 0) return 0;
    if (is_complete(g)) return n - 1;
    if (!is_connected(g)) return 0;
    std::size_t best = degree_profile(g).min_degree;
    // A minimum separator misses one of the first best+1 vertices; every
    // vertex cut off from that one has a larger index.
    for (std::size_t i = 0; i <= best && i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto vi = static_cast<Vertex>(i);
            auto vj = static_cast<Vertex>(j);
            if (g.adjacent(vi, vj)) continue;
            best = std::min(best, local_connectivity(g, vi, vj));
        }
    }
    return best;
}

ClawCheck is_claw_free(const Graph& g)
{
    for (std::size_t c = 0; c < g.order(); ++c) {
        auto center = static_cast<Vertex>(c);
        const VertexSet& nb = g.neighbors(center);
        for (Vertex a : nb) {
            for (Vertex b : nb) {
                if (b <= a || g.adjacent(a, b)) continue;
                VertexSet rest = nb - g.neighbors(a) - g.neighbors(b);
                for (Vertex leaf : rest) {
                    if (leaf > b) return {false, std::array<Vertex, 4>{center, a, b, leaf}};
                }
            }
        }
    }
    return {};
}

}  // namespace tough
