#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tough/certificate.hpp"
#include "tough/families.hpp"
#include "tough/invariants.hpp"
#include "tough/operators.hpp"
#include "tough/toughness.hpp"

using namespace tough;

namespace {

Ratio oracle_value(const Graph& g)
{
    oracle::Tough t = oracle::toughness(oracle::matrix_of(g));
    return t.infinite ? Ratio::infinite() : Ratio::finite(t.p, t.q);
}

std::vector<Graph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n)
{
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = 2 + rng() % (max_n - 1);
        out.push_back(oracle::random_connected(rng, n, 0.1 + 0.08 * static_cast<double>(i % 9)));
    }
    return out;
}

Graph diamond()
{
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("certificate verification examples")
{
    auto chain = gen_planar_chain(4);
    CutCertificate base = chain.base;
    CHECK(base.cut.count() == 12);
    CHECK(base.omega == 8);
    CHECK(base.ratio == Ratio::finite(3, 2));
    CHECK(verify_certificate(chain.graph, base).ok);

    CutCertificate lie = base;
    lie.omega = 9;
    Verification v = verify_certificate(chain.graph, lie);
    CHECK_FALSE(v.ok);
    CHECK(v.reason.starts_with("component mismatch"));

    CutCertificate ratio_lie = base;
    ratio_lie.ratio = Ratio::finite(4, 3);
    CHECK(verify_certificate(chain.graph, ratio_lie).reason.starts_with("ratio mismatch"));

    auto k7 = gen_knp2_minus_matching(7, 5);
    VertexSet s(14);
    for (int p = 1; p <= 5; ++p) s.insert(k7.index_of("v_{1," + std::to_string(p) + "}"));
    CutCertificate c{s, 2, Ratio::finite(5, 2)};
    CHECK(verify_certificate(k7.graph, c).ok);

    CutCertificate none = CutCertificate::measure(cycle(5), VertexSet(5, {0}));
    CHECK(none.omega == 1);
    CHECK(verify_certificate(cycle(5), none).reason.find("below 2") != std::string::npos);
}

TEST_CASE("certificate text round trip and strict parsing")
{
    auto chain = gen_planar_chain(4);
    std::string text = write_certificate(chain.graph, chain.base);
    CHECK(text.starts_with("cert v1\ngraph: "));
    CHECK(text.find("\nomega: 8\nratio: 3/2\n") != std::string::npos);
    CertificateFile f = parse_certificate(text);
    CHECK(f.graph == chain.graph);
    CHECK(f.cert == chain.base);
    CHECK(write_certificate(f.graph, f.cert) == text);

    std::string crlf = text;
    crlf.insert(crlf.find('\n'), "\r");
    CHECK_THROWS_AS(parse_certificate(crlf), CertificateFormatError);
    std::string doubled = text;
    doubled.insert(doubled.find("cut: ") + 4, " ");
    CHECK_THROWS_AS(parse_certificate(doubled), CertificateFormatError);
    CHECK_THROWS_AS(parse_certificate("cert v2\n"), CertificateFormatError);

    Graph g = Graph(3, {{0, 1}});
    CutCertificate empty = CutCertificate::measure(g, g.empty_set());
    std::string e = write_certificate(g, empty);
    CHECK(e.find("\ncut:\n") != std::string::npos);
    CHECK(parse_certificate(e).cert == empty);
}

TEST_CASE("exact toughness examples")
{
    ToughnessResult k5 = toughness_exact(complete(5));
    CHECK(k5.value.is_infinite());
    CHECK_FALSE(k5.witness);

    ToughnessResult c5 = toughness_exact(cycle(5));
    CHECK(c5.value == Ratio::finite(1, 1));
    REQUIRE(c5.witness);
    CHECK(c5.witness->cut == VertexSet(5, {0, 2}));

    CHECK(toughness_exact(gen_square_lsk4().graph).value == Ratio::finite(3, 1));
    CHECK(toughness_exact(cartesian_product(complete(5), path(3)).graph).value == Ratio::finite(2, 1));

    Graph split(4, {{0, 1}, {2, 3}});
    ToughnessResult d = toughness_exact(split);
    CHECK(d.value.is_zero());
    REQUIRE(d.witness);
    CHECK(d.witness->cut.empty());
    CHECK(d.witness->omega == 2);

    CHECK_THROWS_AS(toughness_exact(cycle(27)), LimitExceeded);
    ExactConfig wide;
    wide.exhaustive_limit = 30;
    CHECK(toughness_exact(cycle(27), wide).value == Ratio::finite(1, 1));
}

TEST_CASE("pruned engine equals a prune-free oracle on 220 random connected graphs")
{
    ExactConfig bare;
    bare.prune_connectivity = false;
    bare.prune_independence = false;
    bare.prune_twins = false;
    for (const Graph& g : random_corpus(41, 220, 11)) {
        oracle::Tough o = oracle::toughness(oracle::matrix_of(g));
        ToughnessResult pruned = toughness_exact(g);
        ToughnessResult plain = toughness_exact(g, bare);
        ToughnessResult ref = toughness_reference(g);
        Ratio expect = o.infinite ? Ratio::infinite() : Ratio::finite(o.p, o.q);
        CHECK(pruned.value == expect);
        CHECK(plain.value == expect);
        CHECK(ref.value == expect);
        if (!o.infinite) {
            REQUIRE(pruned.witness);
            REQUIRE(ref.witness);
            CHECK(ref.witness->cut.mask() == o.cut);
            CHECK(plain.witness->cut.mask() == o.cut);
            CHECK(verify_certificate(g, *pruned.witness).ok);
            CHECK(pruned.witness->ratio == pruned.value);
            CHECK(pruned.witness->cut.mask() == o.cut);
        }
    }
}

TEST_CASE("pruned engine equals the reference on every family member up to 16 vertices")
{
    std::vector<LabeledFamily> fams = {gen_square_lsk4(), gen_knp3(3, false), gen_knp3(4, false), gen_knp3(5, false),
                                       gen_knp3(4, true), gen_knp3(5, true), gen_knp2_minus_matching(7, 5),
                                       gen_knp2_minus_matching(8, 6)};
    for (const auto& f : fams) {
        REQUIRE(f.graph.order() <= 16);
        ToughnessResult a = toughness_exact(f.graph);
        CHECK(a.value == toughness_reference(f.graph).value);
        CHECK(a.value == f.expected.toughness);
    }
}

TEST_CASE("edge deletion never raises toughness and Chvatal's bound holds")
{
    std::mt19937_64 rng(43);
    auto corpus = random_corpus(47, 500, 11);
    int samples = 0;
    for (const Graph& g : corpus) {
        if (g.size() == 0) continue;
        Ratio t = toughness_exact(g).value;
        Edge e = g.edges()[rng() % g.size()];
        Ratio te = toughness_exact(delete_edge(g, e)).value;
        CHECK(te <= t);
        ++samples;
        if (!is_complete(g)) CHECK(t.times(2) <= Ratio::finite(static_cast<std::int64_t>(vertex_connectivity(g)), 1));
    }
    CHECK(samples == 500);
}

TEST_CASE("no valid certificate beats the exact value")
{
    std::mt19937_64 rng(53);
    for (const Graph& g : random_corpus(59, 60, 10)) {
        Ratio t = toughness_exact(g).value;
        for (int k = 0; k < 30; ++k) {
            VertexSet s = VertexSet::from_mask(g.order(), rng() & g.all().mask());
            CutCertificate c = CutCertificate::measure(g, s);
            if (c.omega >= 2) CHECK(t <= c.ratio);
        }
    }
}

TEST_CASE("results do not depend on the worker count")
{
    std::vector<Graph> corpus = random_corpus(61, 30, 14);
    corpus.push_back(gen_knp3(5, false).graph);
    corpus.push_back(gen_square_lsk4().graph);
    for (const Graph& g : corpus) {
        std::optional<ToughnessResult> first;
        for (int threads : {1, 2, 8}) {
            ExactConfig cfg;
            cfg.threads = threads;
            ToughnessResult r = toughness_exact(g, cfg);
            if (!first) {
                first = r;
                continue;
            }
            CHECK(r.value == first->value);
            CHECK(r.witness == first->witness);
        }
        ExactConfig a, b;
        a.threads = 1;
        b.threads = 8;
        auto x = find_cut_below(g, Ratio::finite(1, 1), a);
        auto y = find_cut_below(g, Ratio::finite(1, 1), b);
        CHECK(x == y);
    }
}

TEST_CASE("find_cut_below returns a verified cut exactly when one exists")
{
    for (const Graph& g : random_corpus(67, 80, 10)) {
        Ratio t = toughness_exact(g).value;
        if (t.is_infinite()) continue;
        CHECK_FALSE(find_cut_below(g, t));
        auto above = find_cut_below(g, Ratio::finite(t.num() * 2 + 1, t.den() * 2));
        REQUIRE(above);
        CHECK(verify_certificate(g, *above).ok);
        CHECK(above->ratio < Ratio::finite(t.num() * 2 + 1, t.den() * 2));
    }
}

TEST_CASE("upper search")
{
    CutCertificate c5 = toughness_upper_search(cycle(5));
    CHECK(c5.ratio == Ratio::finite(1, 1));
    CHECK(verify_certificate(cycle(5), c5).ok);
    CHECK_THROWS_AS(toughness_upper_search(complete(4)), NoCutFound);

    Graph chain = gen_planar_chain(10).graph;
    UpperSearchConfig cfg;
    CutCertificate pc = toughness_upper_search(chain, cfg);
    CHECK(verify_certificate(chain, pc).ok);
    CHECK(pc.ratio <= Ratio::finite(3, 2));
    CHECK(toughness_upper_search(chain, cfg) == pc);

    for (const Graph& g : random_corpus(71, 40, 12)) {
        if (is_complete(g)) continue;
        UpperSearchConfig small;
        small.restarts = 3;
        small.temperature_levels = 20;
        CutCertificate u = toughness_upper_search(g, small);
        CHECK(verify_certificate(g, u).ok);
        CHECK(toughness_exact(g).value <= u.ratio);
    }
}

TEST_CASE("solid reduction")
{
    SolidSpec c5 = SolidSpec::uniform(cycle(5), 2);
    ToughnessResult r = solid_reduced_toughness(c5);
    CHECK(r.value == Ratio::finite(4, 3));
    CHECK(r.method == Method::reduced_solid);
    CHECK(r.value == toughness_exact(solid_expand(c5).graph).value);
    REQUIRE(r.witness);
    CHECK(verify_certificate(solid_expand(c5).graph, *r.witness).ok);
    CHECK(solid_reduced_toughness(SolidSpec::uniform(complete(2), 2)).value == Ratio::finite(1, 1));

    std::mt19937_64 rng(73);
    for (const Graph& g : random_corpus(79, 40, 8)) {
        CHECK(solid_reduced_toughness(SolidSpec::uniform(g, 1)).value == toughness_exact(g).value);
        SolidSpec spec{g, {}};
        for (std::size_t v = 0; v < g.order(); ++v) spec.multiplicity.push_back(1 + rng() % 2);
        CHECK(solid_reduced_toughness(spec).value == toughness_exact(solid_expand(spec).graph).value);
    }
}

TEST_CASE("minimality examples")
{
    MinimalityReport c4 = is_minimally_tough(cycle(4));
    CHECK(c4.verdict == Verdict::minimal);
    CHECK(c4.toughness == Ratio::finite(1, 1));
    CHECK(c4.edges.size() == 4);
    for (const auto& e : c4.edges) {
        REQUIRE(e.cert);
        CHECK(e.cert->ratio == Ratio::finite(1, 2));
    }

    MinimalityReport k5p3 = is_minimally_tough(cartesian_product(complete(5), path(3)).graph);
    CHECK(k5p3.verdict == Verdict::minimal);
    CHECK(k5p3.toughness == Ratio::finite(2, 1));

    MinimalityReport dia = is_minimally_tough(diamond());
    CHECK(dia.verdict == Verdict::not_minimal);
    REQUIRE(dia.failing_edge);
    Ratio t = toughness_exact(diamond()).value;
    CHECK(toughness_exact(delete_edge(diamond(), *dia.failing_edge)).value >= t);

    CHECK(is_minimally_tough(complete(4)).verdict == Verdict::not_minimal);
    CHECK(is_minimally_tough(Graph(4, {{0, 1}, {2, 3}})).verdict == Verdict::not_minimal);
}

TEST_CASE("minimality agrees with brute force on small graphs")
{
    std::mt19937_64 rng(83);
    for (const Graph& g : random_corpus(89, 120, 8)) {
        if (is_complete(g)) continue;
        Ratio t = oracle_value(g);
        bool expect = true;
        for (Edge e : g.edges())
            if (!(oracle_value(delete_edge(g, e)) < t)) expect = false;
        MinimalityReport r = is_minimally_tough(g);
        CHECK((r.verdict == Verdict::minimal) == expect);
        CHECK(r.verdict != Verdict::inconclusive);
        MinimalityConfig orbits;
        orbits.use_edge_orbits = true;
        CHECK(is_minimally_tough(g, orbits).verdict == r.verdict);
    }
}

TEST_CASE("minimality is inconclusive rather than false when edges are out of reach")
{
    MinimalityConfig cfg;
    cfg.use_heuristic = false;
    cfg.edge_exhaustive_limit = 10;
    MinimalityReport r = is_minimally_tough(gen_knp3(4, false).graph, cfg);
    CHECK(r.verdict == Verdict::inconclusive);
    CHECK_FALSE(r.failing_edge);

    auto fam = gen_knp3(4, false);
    MinimalityReport hinted = is_minimally_tough(fam.graph, cfg, fam.edge_certs);
    CHECK(hinted.verdict == Verdict::minimal);
    for (const auto& e : hinted.edges) CHECK(e.source == WitnessSource::hint);
}

TEST_CASE("orbit mapping reuses witnesses")
{
    MinimalityConfig cfg;
    cfg.use_edge_orbits = true;
    MinimalityReport r = is_minimally_tough(gen_square_lsk4().graph, cfg);
    CHECK(r.verdict == Verdict::minimal);
    std::size_t mapped = 0;
    for (const auto& e : r.edges) mapped += e.via_orbit ? 1 : 0;
    CHECK(mapped > 0);
}

TEST_CASE("gkc filter examples")
{
    GkcResult s = gkc_filter(solid_expand(SolidSpec::uniform(cycle(5), 2)).graph);
    CHECK(s.status == GkcStatus::counterexample);
    CHECK(*s.toughness == Ratio::finite(4, 3));
    CHECK(s.min_degree == 4);
    CHECK(s.ceil_2t == 3);
    CHECK(*s.degree_ratio == Ratio::finite(3, 1));
    CHECK(s.regular);

    GkcResult c5 = gkc_filter(cycle(5));
    CHECK(c5.status == GkcStatus::not_counterexample);
    CHECK(c5.min_degree == 2);
    CHECK(c5.ceil_2t == 2);

    GkcResult k4 = gkc_filter(complete(4));
    CHECK(k4.status == GkcStatus::not_counterexample);
    CHECK(k4.reason == "complete");

    GkcConfig screen;
    screen.min_delta = 5;
    CHECK(gkc_filter(solid_expand(SolidSpec::uniform(cycle(5), 2)).graph, screen).status ==
          GkcStatus::not_counterexample);
}
