#include <omp.h>

#include <algorithm>
#include <bit>

#include "tough/invariants.hpp"
#include "tough/toughness.hpp"

namespace tough {

std::string to_string(Method m)
{
    switch (m) {
    case Method::exact: return "exact";
    case Method::reduced_solid: return "reduced-solid";
    case Method::heuristic_upper_bound: return "heuristic-upper-bound";
    }
    return "?";
}

namespace {

int resolve_threads(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

/// Running minimum under the key (|S|/omega, |S|, bit-vector).
struct Incumbent {
    bool valid = false;
    std::int64_t size = 0;
    std::int64_t omega = 1;
    std::uint64_t mask = 0;

    bool beaten_by(std::int64_t s, std::int64_t w, std::uint64_t m) const noexcept
    {
        if (!valid) return true;
        auto lhs = static_cast<__int128>(s) * omega;
        auto rhs = static_cast<__int128>(size) * w;
        if (lhs != rhs) return lhs < rhs;
        if (s != size) return s < size;
        return m < mask;
    }
    void offer(const Incumbent& o) noexcept
    {
        if (o.valid && beaten_by(o.size, o.omega, o.mask)) *this = o;
    }
    Ratio ratio() const { return Ratio::finite(size, omega); }
};

ToughnessResult trivial_result(const Graph& g, bool& handled)
{
    handled = true;
    if (g.order() == 0 || is_complete(g)) return {Ratio::infinite(), std::nullopt, Method::exact};
    if (!is_connected(g)) {
        CutCertificate c = CutCertificate::measure(g, g.empty_set());
        return {Ratio{}, c, Method::exact};
    }
    handled = false;
    return {};
}

ToughnessResult finish(const Graph& g, const Incumbent& best, Method method)
{
    CutCertificate c;
    c.cut = VertexSet::from_mask(g.order(), best.mask);
    c.omega = static_cast<std::size_t>(best.omega);
    c.ratio = best.ratio();
    return {c.ratio, c, method};
}

/// Non-adjacent twin classes (size >= 2) as masks.
std::vector<std::uint64_t> twin_classes(const std::vector<std::uint64_t>& adj)
{
    std::vector<std::uint64_t> classes;
    std::vector<char> seen(adj.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (seen[v]) continue;
        std::uint64_t cls = std::uint64_t{1} << v;
        for (std::size_t w = v + 1; w < adj.size(); ++w)
            if (!seen[w] && adj[w] == adj[v]) {
                cls |= std::uint64_t{1} << w;
                seen[w] = 1;
            }
        if (std::popcount(cls) >= 2) classes.push_back(cls);
    }
    return classes;
}

class ExactEngine {
public:
    ExactEngine(const Graph& g, const ExactConfig& cfg) : g_(g), cfg_(cfg), n_(g.order()), adj_(g.masks())
    {
        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        if (cfg.prune_independence) alpha_ = static_cast<std::int64_t>(independence_number(g).alpha);
        if (cfg.prune_connectivity) kappa_ = static_cast<std::int64_t>(vertex_connectivity(g));
        if (cfg.prune_twins) twins_ = twin_classes(adj_);
        prefix_bits_ = std::min<unsigned>(cfg.shard_bits, static_cast<unsigned>(n_));
        if (prefix_bits_ == 0) prefix_bits_ = 1;
    }

    /// Walks size levels upward; with a target, stops after the first level
    /// whose incumbent is below it.
    Incumbent run(const std::optional<Ratio>& target)
    {
        Incumbent best;
        auto n = static_cast<std::int64_t>(n_);
        std::int64_t lo = cfg_.prune_connectivity ? std::max<std::int64_t>(kappa_, 1) : 1;
        for (std::int64_t s = lo; s <= n - 2; ++s) {
            if (cfg_.prune_independence) {
                // omega(G - S) <= min(alpha, n - |S|); the bound is nondecreasing in |S|.
                Ratio bound = Ratio::finite(s, std::min(alpha_, n - s));
                std::optional<Ratio> cutoff = target;
                if (best.valid && (!cutoff || best.ratio() < *cutoff)) cutoff = best.ratio();
                if (cutoff && bound >= *cutoff) break;
            }
            best.offer(level(s));
            if (target && best.valid && best.ratio() < *target) break;
        }
        return best;
    }

private:
    bool twin_closed(std::uint64_t cut) const noexcept
    {
        for (std::uint64_t cls : twins_) {
            std::uint64_t part = cut & cls;
            if (part != 0 && part != cls) return false;
        }
        return true;
    }

    Incumbent level(std::int64_t s) const
    {
        const unsigned k = prefix_bits_;
        const unsigned rest = static_cast<unsigned>(n_) - k;
        const std::uint64_t shards = std::uint64_t{1} << k;
        const std::uint64_t rest_limit = std::uint64_t{1} << rest;
        std::vector<Incumbent> found(shards);

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(cfg_.threads))
        for (std::int64_t p = 0; p < static_cast<std::int64_t>(shards); ++p) {
            auto prefix = static_cast<std::uint64_t>(p);
            std::int64_t r = s - std::popcount(prefix);
            if (r < 0 || r > static_cast<std::int64_t>(rest)) continue;
            Incumbent local;
            std::uint64_t c = r == 0 ? 0 : (std::uint64_t{1} << r) - 1;
            while (c < rest_limit) {
                std::uint64_t cut = prefix | (c << k);
                if (twins_.empty() || twin_closed(cut)) {
                    int w = count_components_64(adj_.data(), full_ & ~cut);
                    if (w >= 2 && local.beaten_by(s, w, cut)) local = {true, s, w, cut};
                }
                if (c == 0) break;
                std::uint64_t low = c & (~c + 1);
                std::uint64_t ripple = c + low;
                c = ripple | (((ripple ^ c) >> 2) / low);
            }
            found[static_cast<std::size_t>(p)] = local;
        }
        Incumbent best;
        for (const auto& f : found) best.offer(f);
        return best;
    }

    const Graph& g_;
    ExactConfig cfg_;
    std::size_t n_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t full_ = 0;
    std::int64_t alpha_ = 0;
    std::int64_t kappa_ = 0;
    std::vector<std::uint64_t> twins_;
    unsigned prefix_bits_ = 1;
};

void check_limit(const Graph& g, std::size_t limit)
{
    if (g.order() > limit || g.order() > 64)
        throw LimitExceeded("exhaustive toughness: order " + std::to_string(g.order()) + " exceeds limit " +
                            std::to_string(std::min<std::size_t>(limit, 64)));
}

}  // namespace

ToughnessResult toughness_exact(const Graph& g, const ExactConfig& cfg)
{
    check_limit(g, cfg.exhaustive_limit);
    bool handled = false;
    ToughnessResult trivial = trivial_result(g, handled);
    if (handled) return trivial;
    ExactEngine engine(g, cfg);
    return finish(g, engine.run(std::nullopt), Method::exact);
}

std::optional<CutCertificate> find_cut_below(const Graph& g, const Ratio& bound, const ExactConfig& cfg)
{
    check_limit(g, cfg.exhaustive_limit);
    bool handled = false;
    ToughnessResult trivial = trivial_result(g, handled);
    if (handled) {
        if (trivial.witness && trivial.value < bound) return trivial.witness;
        return std::nullopt;
    }
    ExactEngine engine(g, cfg);
    Incumbent best = engine.run(bound);
    if (!best.valid || !(best.ratio() < bound)) return std::nullopt;
    return finish(g, best, Method::exact).witness;
}

ToughnessResult toughness_reference(const Graph& g, std::size_t limit)
{
    check_limit(g, limit);
    bool handled = false;
    ToughnessResult trivial = trivial_result(g, handled);
    if (handled) return trivial;
    auto adj = g.masks();
    std::uint64_t full = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    Incumbent best;
    for (std::uint64_t cut = 0;; ++cut) {
        int w = count_components_64(adj.data(), full & ~cut);
        if (w >= 2 && best.beaten_by(std::popcount(cut), w, cut)) best = {true, std::popcount(cut), w, cut};
        if (cut == full) break;
    }
    return finish(g, best, Method::exact);
}

ToughnessResult solid_reduced_toughness(const SolidSpec& spec, const ExactConfig& cfg)
{
    std::size_t b = spec.base.order();
    if (b > cfg.exhaustive_limit || b > 62)
        throw LimitExceeded("reduced solid toughness: base order " + std::to_string(b) + " exceeds limit " +
                            std::to_string(cfg.exhaustive_limit));
    SolidGraph solid = solid_expand(spec);
    const Graph& g = solid.graph;
    bool handled = false;
    ToughnessResult trivial = trivial_result(g, handled);
    if (handled) {
        trivial.method = Method::reduced_solid;
        return trivial;
    }

    struct Best {
        bool valid = false;
        std::int64_t size = 0;
        std::int64_t omega = 1;
        VertexSet cut;
        bool beaten_by(std::int64_t s, std::int64_t w, const VertexSet& c) const
        {
            if (!valid) return true;
            auto lhs = static_cast<__int128>(s) * omega;
            auto rhs = static_cast<__int128>(size) * w;
            if (lhs != rhs) return lhs < rhs;
            if (s != size) return s < size;
            return c < cut;
        }
    };

    const std::uint64_t subsets = std::uint64_t{1} << b;
    const std::uint64_t chunk = 1024;
    const std::uint64_t chunks = (subsets + chunk - 1) / chunk;
    std::vector<Best> found(chunks);
    const bool small = g.order() <= 64;
    const auto adj = small ? g.masks() : std::vector<std::uint64_t>{};
    const VertexSet everything = g.all();

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(cfg.threads))
    for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(chunks); ++ci) {
        Best local;
        auto begin = static_cast<std::uint64_t>(ci) * chunk;
        auto end = std::min(subsets, begin + chunk);
        for (std::uint64_t t = begin; t < end; ++t) {
            VertexSet cut(g.order());
            for (std::uint64_t bits = t; bits != 0; bits &= bits - 1)
                cut |= solid.classes[static_cast<std::size_t>(std::countr_zero(bits))];
            if (cut == everything) continue;
            std::int64_t w = small ? count_components_64(adj.data(), everything.mask() & ~cut.mask())
                                   : static_cast<std::int64_t>(count_components(g, cut));
            auto s = static_cast<std::int64_t>(cut.count());
            if (w >= 2 && local.beaten_by(s, w, cut)) local = {true, s, w, cut};
        }
        found[static_cast<std::size_t>(ci)] = std::move(local);
    }
    Best best;
    for (const auto& f : found)
        if (f.valid && best.beaten_by(f.size, f.omega, f.cut)) best = f;

    CutCertificate c;
    c.cut = best.cut;
    c.omega = static_cast<std::size_t>(best.omega);
    c.ratio = Ratio::finite(best.size, best.omega);
    return {c.ratio, c, Method::reduced_solid};
}

}  // namespace tough
