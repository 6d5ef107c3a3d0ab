#include <algorithm>

#include "tough/invariants.hpp"

namespace tough {

namespace {

class IndependenceSearch {
public:
    IndependenceSearch(const Graph& g, bool collect) : g_(g), collect_(collect), best_set_(g.order()) {}

    void run()
    {
        VertexSet none(g_.order());
        expand(g_.all(), none, 0);
        std::sort(all_.begin(), all_.end());
    }

    std::size_t best() const { return best_; }
    const VertexSet& best_set() const { return best_set_; }
    std::vector<VertexSet> take_all() { return std::move(all_); }

private:
    // Greedy sequential clique cover of `cand` in ascending index order.
    std::size_t clique_cover(const VertexSet& cand) const
    {
        std::vector<VertexSet> cliques;
        for (Vertex v : cand) {
            bool placed = false;
            for (auto& c : cliques) {
                if (c.is_subset_of(g_.neighbors(v))) {
                    c.insert(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cliques.emplace_back(g_.order());
                cliques.back().insert(v);
            }
        }
        return cliques.size();
    }

    void record(const VertexSet& cur, std::size_t size)
    {
        if (size > best_ || (best_ == 0 && all_.empty())) {
            best_ = size;
            best_set_ = cur;
            all_.clear();
            all_.push_back(cur);
        } else if (collect_ && size == best_) {
            all_.push_back(cur);
        }
    }

    void expand(VertexSet cand, VertexSet cur, std::size_t size)
    {
        // Vertices isolated within the candidates belong to every maximum extension.
        for (Vertex v : cand) {
            if (!(g_.neighbors(v).intersects(cand))) {
                cur.insert(v);
                ++size;
            }
        }
        for (Vertex v : cur) cand.erase(v);
        if (cand.empty()) {
            record(cur, size);
            return;
        }
        std::size_t bound = size + clique_cover(cand);
        if (collect_ ? bound < best_ : bound <= best_) return;

        Vertex pivot = -1;
        std::size_t pivot_degree = 0;
        for (Vertex v : cand) {
            std::size_t d = (g_.neighbors(v) & cand).count();
            if (pivot < 0 || d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        VertexSet with = cand - g_.neighbors(pivot);
        with.erase(pivot);
        VertexSet cur_with = cur;
        cur_with.insert(pivot);
        expand(with, cur_with, size + 1);

        VertexSet without = cand;
        without.erase(pivot);
        expand(without, cur, size);
    }

    const Graph& g_;
    bool collect_;
    std::size_t best_ = 0;
    VertexSet best_set_;
    std::vector<VertexSet> all_;
};

}  // namespace

IndependentSet independence_number(const Graph& g)
{
    IndependenceSearch search(g, false);
    search.run();
    return {search.best(), search.best_set()};
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g)
{
    IndependenceSearch search(g, true);
    search.run();
    return search.take_all();
}

}  // namespace tough
