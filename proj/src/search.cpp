#include <omp.h>

#include <chrono>
#include <optional>

#include "tough/graph6.hpp"
#include "tough/search.hpp"

namespace tough {

namespace {

struct Item {
    std::size_t line = 0;
    std::string g6;
    Graph graph;
};

struct Outcome {
    enum class Kind { rejected, flagged, inconclusive } kind = Kind::rejected;
    Counterexample hit;
    std::string reason;
};

Outcome examine(const Item& item, const SearchOptions& opt)
{
    Outcome out;
    const Graph& g = item.graph;
    if (g.order() < opt.min_n || (opt.max_n != 0 && g.order() > opt.max_n)) return out;
    if (opt.non_regular_only && degree_profile(g).regular) return out;
    GkcResult r;
    try {
        r = gkc_filter(g, opt.gkc);
    } catch (const LimitExceeded& e) {
        out.kind = Outcome::Kind::inconclusive;
        out.reason = e.what();
        return out;
    }
    if (r.status == GkcStatus::inconclusive) {
        out.kind = Outcome::Kind::inconclusive;
        out.reason = r.reason;
    } else if (r.status == GkcStatus::counterexample) {
        out.kind = Outcome::Kind::flagged;
        out.hit = {item.g6, *r.toughness, r.min_degree, r.ceil_2t, *r.degree_ratio, r.regular};
    }
    return out;
}

SearchReport run(const std::vector<Item>& items, const SearchOptions& opt, std::vector<ParseFailure> errors)
{
    auto start = std::chrono::steady_clock::now();
    std::vector<Outcome> results(items.size());
    // Graphs are scanned in parallel; each engine call runs serially inside.
    SearchOptions inner = opt;
    inner.gkc.minimality.exact.threads = 1;
    int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(items.size()); ++i)
        results[static_cast<std::size_t>(i)] = examine(items[static_cast<std::size_t>(i)], inner);

    SearchReport report;
    report.parse_errors = std::move(errors);
    report.scanned = items.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
        Outcome& o = results[i];
        switch (o.kind) {
        case Outcome::Kind::rejected: ++report.rejected; break;
        case Outcome::Kind::flagged: report.flagged.push_back(std::move(o.hit)); break;
        case Outcome::Kind::inconclusive:
            report.inconclusive.push_back({items[i].line, items[i].g6, std::move(o.reason)});
            break;
        }
    }
    std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
    report.wall_seconds = spent.count();
    return report;
}

}  // namespace

std::string SearchReport::summary() const
{
    return std::to_string(flagged.size()) + " counterexamples / " + std::to_string(scanned) + " scanned, " +
           std::to_string(inconclusive.size()) + " inconclusive, " + std::to_string(parse_errors.size()) +
           " parse errors";
}

std::string SearchReport::to_text() const
{
    std::string out;
    for (const Counterexample& c : flagged) {
        out += c.g6 + "\tt=" + c.toughness.to_string() + "\tdelta=" + std::to_string(c.min_degree) +
               "\tceil2t=" + std::to_string(c.ceil_2t) + "\tratio=" + c.degree_ratio.to_string() +
               "\tregular=" + (c.regular ? "1" : "0") + "\n";
    }
    out += summary() + "\n";
    return out;
}

SearchReport filter_counterexamples(std::istream& in, const SearchOptions& options)
{
    static constexpr std::string_view header = ">>graph6<<";
    std::vector<Item> items;
    std::vector<ParseFailure> errors;
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        std::string_view text = line;
        if (text.starts_with(header)) text.remove_prefix(header.size());
        if (text.empty()) continue;
        try {
            items.push_back({no, std::string(text), parse_graph6(text)});
        } catch (const std::exception& e) {
            errors.push_back({no, e.what()});
        }
    }
    return run(items, options, std::move(errors));
}

SearchReport filter_counterexamples(const std::vector<Graph>& graphs, const SearchOptions& options)
{
    std::vector<Item> items;
    items.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) items.push_back({i + 1, write_graph6(graphs[i]), graphs[i]});
    return run(items, options, {});
}

}  // namespace tough
