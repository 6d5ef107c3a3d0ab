#include <algorithm>
#include <map>
#include <set>

#include "tough/search.hpp"

namespace tough {

namespace {

constexpr std::size_t code_limit = 11;

/// Colour refinement from degrees; colour ids are ranks of signatures so
/// isomorphic graphs get identical colourings.
std::vector<int> invariant_colors(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<int> color(n);
    for (std::size_t v = 0; v < n; ++v) color[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (Vertex w : g.neighbors(static_cast<Vertex>(v))) sig[v].second.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<std::pair<int, std::vector<int>>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (distinct.size() == classes) break;
        classes = distinct.size();
    }
    return color;
}

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), color_(invariant_colors(g))
    {
        total_bits_ = static_cast<int>(n_ * (n_ - 1) / 2);
        std::vector<int> sorted = color_;
        std::sort(sorted.begin(), sorted.end());
        cell_at_ = sorted;
        at_.assign(n_, -1);
        used_.assign(n_, 0);
    }

    void run() { dfs(0, 0, 0); }
    std::uint64_t code() const { return best_; }
    std::vector<Vertex> labeling() const
    {
        std::vector<Vertex> perm(n_);
        for (std::size_t p = 0; p < n_; ++p) perm[static_cast<std::size_t>(best_at_[p])] = static_cast<Vertex>(p);
        return perm;
    }

private:
    void dfs(std::size_t k, std::uint64_t prefix, int bits)
    {
        if (k == n_) {
            if (!have_ || prefix < best_) {
                best_ = prefix;
                best_at_ = at_;
                have_ = true;
            }
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if (used_[v] || color_[v] != cell_at_[k]) continue;
            std::uint64_t p = prefix;
            for (std::size_t j = 0; j < k; ++j)
                p = (p << 1) | (g_.adjacent(at_[j], static_cast<Vertex>(v)) ? 1u : 0u);
            int b = bits + static_cast<int>(k);
            if (have_ && p > (best_ >> (total_bits_ - b))) continue;
            used_[v] = 1;
            at_[k] = static_cast<Vertex>(v);
            dfs(k + 1, p, b);
            used_[v] = 0;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<int> color_;
    std::vector<int> cell_at_;
    std::vector<Vertex> at_;
    std::vector<char> used_;
    int total_bits_ = 0;
    bool have_ = false;
    std::uint64_t best_ = 0;
    std::vector<Vertex> best_at_;
};

void require_small(const Graph& g)
{
    if (g.order() > code_limit)
        throw EnumerationLimit("canonical code: order " + std::to_string(g.order()) + " exceeds " +
                               std::to_string(code_limit));
}

Graph from_code(std::size_t n, std::uint64_t code)
{
    std::vector<std::pair<Vertex, Vertex>> es;
    int bit = static_cast<int>(n * (n - 1) / 2) - 1;
    for (std::size_t w = 1; w < n; ++w)
        for (std::size_t u = 0; u < w; ++u, --bit)
            if ((code >> bit) & 1u) es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
    return Graph(n, es);
}

}  // namespace

std::uint64_t triangle_code(const Graph& g)
{
    require_small(g);
    std::uint64_t code = 0;
    for (std::size_t w = 1; w < g.order(); ++w)
        for (std::size_t u = 0; u < w; ++u)
            code = (code << 1) | (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(w)) ? 1u : 0u);
    return code;
}

std::uint64_t canonical_code(const Graph& g)
{
    require_small(g);
    Canonizer c(g);
    c.run();
    return c.code();
}

std::vector<Vertex> canonical_labeling(const Graph& g)
{
    require_small(g);
    Canonizer c(g);
    c.run();
    return c.labeling();
}

std::vector<Graph> enumerate_connected(std::size_t n)
{
    if (n == 0 || n > 8)
        throw EnumerationLimit("enumerate_connected: n must be in 1..8 (got " + std::to_string(n) +
                               "); supply larger orders as graph6 files");
    std::set<std::uint64_t> level = {0};
    for (std::size_t k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            Graph base = from_code(k - 1, code);
            auto old_edges = base.edges();
            for (std::uint64_t nb = 1; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
                std::vector<std::pair<Vertex, Vertex>> es;
                for (Edge e : old_edges) es.emplace_back(e.u, e.v);
                for (std::size_t u = 0; u + 1 < k; ++u)
                    if ((nb >> u) & 1u) es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(k - 1));
                next.insert(canonical_code(Graph(k, es)));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (std::uint64_t code : level) out.push_back(from_code(n, code));
    return out;
}

}  // namespace tough
