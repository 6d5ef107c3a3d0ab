#include "tough/invariants.hpp"
#include "tough/toughness.hpp"

namespace tough {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::minimal: return "true";
    case Verdict::not_minimal: return "false";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(WitnessSource s)
{
    switch (s) {
    case WitnessSource::hint: return "template";
    case WitnessSource::heuristic: return "heuristic";
    case WitnessSource::exhaustive: return "exhaustive";
    }
    return "?";
}

namespace {

std::optional<CutCertificate> accept(const Graph& h, const CutCertificate& c, const Ratio& t)
{
    if (c.cut.size() != h.order()) return std::nullopt;
    if (!verify_certificate(h, c) || !(c.ratio < t)) return std::nullopt;
    return c;
}

CutCertificate map_cut(const Graph& h, const CutCertificate& c, const std::vector<Vertex>& phi)
{
    VertexSet cut(h.order());
    for (Vertex v : c.cut) cut.insert(phi[static_cast<std::size_t>(v)]);
    return CutCertificate::measure(h, cut);
}

}  // namespace

MinimalityReport is_minimally_tough(const Graph& g, const MinimalityConfig& cfg, const EdgeHints& hints)
{
    MinimalityReport report;
    ToughnessResult t;
    const bool beyond = g.order() > cfg.exact.exhaustive_limit || g.order() > 64;
    if (beyond) {
        // Only an upper bound on t(G) is available; edges are still checked
        // against it, but the verdict cannot be positive.
        if (g.order() == 0 || is_complete(g) || !is_connected(g)) {
            t = {is_connected(g) ? Ratio::infinite() : Ratio{}, std::nullopt, Method::exact};
        } else {
            CutCertificate c = toughness_upper_search(g, cfg.heuristic);
            t = {c.ratio, c, Method::heuristic_upper_bound};
            report.toughness_is_upper_bound = true;
        }
    } else {
        t = toughness_exact(g, cfg.exact);
    }
    report.toughness = t.value;
    report.toughness_witness = t.witness;
    if (t.value.is_infinite()) {
        report.note = "complete graphs are never minimally tough";
        return report;
    }
    if (t.value.is_zero()) {
        report.note = "disconnected graphs are never minimally tough";
        return report;
    }

    std::optional<EdgeOrbits> orbits;
    if (cfg.use_edge_orbits) orbits = edge_orbits(g, cfg.orbit_limit);

    const auto edges = g.edges();
    report.edges.reserve(edges.size());
    bool undecided = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge e = edges[i];
        EdgeWitness entry;
        entry.edge = e;
        const Graph h = delete_edge(g, e);

        if (auto it = hints.find(e); it != hints.end()) {
            if (auto c = accept(h, it->second, t.value)) {
                entry.cert = c;
                entry.source = WitnessSource::hint;
            }
        }
        if (!entry.cert && orbits) {
            std::size_t rep = orbits->representative[orbits->orbit_of[i]];
            if (rep < i && report.edges[rep].cert) {
                if (auto c = accept(h, map_cut(h, *report.edges[rep].cert, orbits->from_representative[i]), t.value)) {
                    entry.cert = c;
                    entry.source = report.edges[rep].source;
                    entry.via_orbit = true;
                }
            }
        }
        if (!entry.cert && cfg.use_heuristic && g.order() >= cfg.heuristic_min_order) {
            UpperSearchConfig hc = cfg.heuristic;
            hc.seed = cfg.heuristic.seed + i;
            if (auto c = accept(h, toughness_upper_search(h, hc), t.value)) {
                entry.cert = c;
                entry.source = WitnessSource::heuristic;
            }
        }
        if (!entry.cert) {
            if (!beyond && h.order() <= cfg.edge_exhaustive_limit) {
                if (auto c = find_cut_below(h, t.value, cfg.exact)) {
                    entry.cert = c;
                    entry.source = WitnessSource::exhaustive;
                } else {
                    report.edges.push_back(entry);
                    report.verdict = Verdict::not_minimal;
                    report.failing_edge = e;
                    report.note = "no cut of G - e beats t(G)";
                    if (cfg.stop_at_first_failure) return report;
                    continue;
                }
            } else {
                undecided = true;
            }
        }
        report.edges.push_back(std::move(entry));
    }
    if (report.failing_edge) return report;
    if (beyond) {
        report.verdict = Verdict::inconclusive;
        report.note = undecided ? "t(G) only bounded above; some edge resolved by neither hint nor heuristic"
                                : "t(G) only bounded above; every edge beats the bound";
        return report;
    }
    report.verdict = undecided ? Verdict::inconclusive : Verdict::minimal;
    if (undecided) report.note = "some edge resolved by neither hint nor heuristic";
    return report;
}

GkcResult gkc_filter(const Graph& g, const GkcConfig& cfg)
{
    GkcResult out;
    if (!is_connected(g)) {
        out.reason = "disconnected";
        return out;
    }
    if (is_complete(g)) {
        out.reason = "complete";
        return out;
    }
    DegreeProfile profile = degree_profile(g);
    out.min_degree = profile.min_degree;
    out.regular = profile.regular;
    if (cfg.min_delta > 0 && profile.min_degree < cfg.min_delta) {
        out.reason = "minimum degree below screen";
        return out;
    }
    if (g.order() > cfg.minimality.exact.exhaustive_limit) {
        out.status = GkcStatus::inconclusive;
        out.reason = "order exceeds exhaustive limit";
        return out;
    }
    ToughnessResult t = toughness_exact(g, cfg.minimality.exact);
    out.toughness = t.value;
    out.ceil_2t = t.value.ceil_of_double();
    out.degree_ratio = t.value.divided_into(static_cast<std::int64_t>(profile.min_degree));
    if (static_cast<std::int64_t>(profile.min_degree) <= out.ceil_2t) {
        out.reason = "delta <= ceil(2t)";
        return out;
    }
    MinimalityReport m = is_minimally_tough(g, cfg.minimality);
    if (m.verdict == Verdict::inconclusive) {
        out.status = GkcStatus::inconclusive;
        out.reason = m.note;
        return out;
    }
    if (m.verdict == Verdict::not_minimal) {
        out.reason = "not minimally tough";
        return out;
    }
    out.status = GkcStatus::counterexample;
    return out;
}

}  // namespace tough
