#include <chrono>
#include <cmath>
#include <random>

#include "tough/toughness.hpp"

namespace tough {

namespace {

struct Scored {
    VertexSet cut;
    std::int64_t size = 0;
    std::int64_t omega = 0;

    bool is_cut() const noexcept { return omega >= 2; }
    double energy(std::size_t n) const noexcept
    {
        return is_cut() ? static_cast<double>(size) / static_cast<double>(omega) : static_cast<double>(n + size);
    }
    bool better_than(const Scored& o) const noexcept
    {
        if (!o.is_cut()) return is_cut();
        if (!is_cut()) return false;
        auto lhs = static_cast<__int128>(size) * o.omega;
        auto rhs = static_cast<__int128>(o.size) * omega;
        if (lhs != rhs) return lhs < rhs;
        if (size != o.size) return size < o.size;
        return cut < o.cut;
    }
};

class Annealer {
public:
    Annealer(const Graph& g, const UpperSearchConfig& cfg) : g_(g), cfg_(cfg), rng_(cfg.seed)
    {
        if (cfg.units.empty()) {
            for (std::size_t v = 0; v < g.order(); ++v) units_.push_back(VertexSet(g.order(), {static_cast<Vertex>(v)}));
        } else {
            units_ = cfg.units;
        }
        std::size_t u = units_.size();
        unit_adj_.assign(u, VertexSet(u));
        for (std::size_t i = 0; i < u; ++i) {
            VertexSet reach(g.order());
            for (Vertex v : units_[i]) reach |= g.neighbors(v);
            for (std::size_t j = 0; j < u; ++j)
                if (j != i && reach.intersects(units_[j])) unit_adj_[i].insert(static_cast<Vertex>(j));
        }
        if (g.order() <= 64) masks_ = g.masks();
    }

    CutCertificate run()
    {
        best_ = fallback();
        auto start = std::chrono::steady_clock::now();
        auto out_of_time = [&] {
            std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
            return spent.count() > cfg_.budget_secs;
        };
        for (std::size_t r = 0; r < cfg_.restarts && !out_of_time(); ++r) {
            VertexSet state = seed_state(r == 0);
            Scored cur = score(state);
            consider(cur);
            double temperature = cfg_.initial_temperature;
            for (std::size_t level = 0; level < cfg_.temperature_levels; ++level) {
                for (std::size_t step = 0; step < cfg_.steps_per_level; ++step) {
                    VertexSet next = mutate(state);
                    Scored cand = score(next);
                    double delta = cand.energy(g_.order()) - cur.energy(g_.order());
                    if (delta <= 0 || uniform_(rng_) < std::exp(-delta / temperature)) {
                        state = next;
                        cur = cand;
                        consider(cur);
                    }
                }
                temperature *= cfg_.cooling;
                if (out_of_time()) break;
            }
        }
        CutCertificate c;
        c.cut = best_.cut;
        c.omega = static_cast<std::size_t>(best_.omega);
        c.ratio = Ratio::finite(best_.size, best_.omega);
        return c;
    }

private:
    VertexSet expand(const VertexSet& state) const
    {
        VertexSet cut(g_.order());
        for (Vertex u : state) cut |= units_[static_cast<std::size_t>(u)];
        return cut;
    }

    Scored score(const VertexSet& state) const
    {
        Scored s;
        s.cut = expand(state);
        s.size = static_cast<std::int64_t>(s.cut.count());
        if (s.size == static_cast<std::int64_t>(g_.order())) return s;
        s.omega = masks_.empty() ? static_cast<std::int64_t>(count_components(g_, s.cut))
                                 : count_components_64(masks_.data(), g_.all().mask() & ~s.cut.mask());
        return s;
    }

    void consider(const Scored& s)
    {
        if (s.better_than(best_)) best_ = s;
    }

    // Neighbourhood of a unit (or vertex) independent set; the closed
    // neighbourhood of a non-universal vertex always yields a cut.
    Scored fallback()
    {
        Scored best;
        std::size_t u = units_.size();
        for (std::size_t i = 0; i < u; ++i) {
            VertexSet state = unit_adj_[i];
            Scored s = score(state);
            if (s.better_than(best)) best = s;
        }
        for (std::size_t v = 0; v < g_.order(); ++v) {
            VertexSet cut = g_.neighbors(static_cast<Vertex>(v));
            if (cut.count() + 1 >= g_.order()) continue;
            Scored s;
            s.cut = cut;
            s.size = static_cast<std::int64_t>(cut.count());
            s.omega = static_cast<std::int64_t>(count_components(g_, cut));
            if (s.better_than(best)) best = s;
        }
        if (!best.is_cut()) throw NoCutFound("upper search: graph has no cut-set");
        return best;
    }

    VertexSet seed_state(bool keep_all)
    {
        std::size_t u = units_.size();
        std::vector<Vertex> order(u);
        for (std::size_t i = 0; i < u; ++i) order[i] = static_cast<Vertex>(i);
        std::shuffle(order.begin(), order.end(), rng_);
        VertexSet independent(u);
        VertexSet blocked(u);
        for (Vertex i : order) {
            if (blocked.contains(i)) continue;
            independent.insert(i);
            blocked.insert(i);
            blocked |= unit_adj_[static_cast<std::size_t>(i)];
        }
        if (!keep_all) {
            double keep = 0.5 + 0.5 * uniform_(rng_);
            VertexSet kept(u);
            for (Vertex i : independent)
                if (uniform_(rng_) < keep) kept.insert(i);
            if (kept.count() >= 2) independent = kept;
        }
        VertexSet state(u);
        for (Vertex i : independent) state |= unit_adj_[static_cast<std::size_t>(i)];
        return state - independent;
    }

    VertexSet mutate(const VertexSet& state)
    {
        std::size_t u = units_.size();
        std::size_t inside = state.count();
        std::size_t outside = u - inside;
        auto pick = [&](bool member) {
            std::size_t pool = member ? inside : outside;
            std::uniform_int_distribution<std::size_t> d(0, pool - 1);
            std::size_t k = d(rng_);
            for (std::size_t i = 0; i < u; ++i) {
                if (state.contains(static_cast<Vertex>(i)) != member) continue;
                if (k-- == 0) return static_cast<Vertex>(i);
            }
            return Vertex{-1};
        };
        VertexSet next = state;
        int move = std::uniform_int_distribution<int>(0, 2)(rng_);
        if (inside == 0) move = 0;
        if (outside <= 1) move = 1;
        if (move == 0) {
            next.insert(pick(false));
        } else if (move == 1) {
            next.erase(pick(true));
        } else {
            next.erase(pick(true));
            next.insert(pick(false));
        }
        return next;
    }

    const Graph& g_;
    const UpperSearchConfig& cfg_;
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::vector<VertexSet> units_;
    std::vector<VertexSet> unit_adj_;
    std::vector<std::uint64_t> masks_;
    Scored best_;
};

}  // namespace

CutCertificate toughness_upper_search(const Graph& g, const UpperSearchConfig& cfg)
{
    if (g.order() == 0 || is_complete(g)) throw NoCutFound("upper search: complete graph has no cut-set");
    if (!is_connected(g)) return CutCertificate::measure(g, g.empty_set());
    Annealer annealer(g, cfg);
    return annealer.run();
}

}  // namespace tough
