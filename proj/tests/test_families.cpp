#include <doctest.h>

#include <set>

#include "tough/families.hpp"
#include "tough/invariants.hpp"
#include "tough/operators.hpp"

using namespace tough;

namespace {

void check_structure(const LabeledFamily& f)
{
    INFO(to_string(f.tag), " order ", f.graph.order());
    SelfCheck sc = self_check(f);
    CHECK(sc.ok);
    for (const auto& msg : sc.failures) MESSAGE(msg);
    CHECK(f.fallback_edges.empty());
    CHECK(f.edge_certs.size() == f.graph.size());
    CHECK(f.base.ratio == f.expected.toughness);
    CHECK(f.labels.size() == f.graph.order());
    CHECK(std::set<std::string>(f.labels.begin(), f.labels.end()).size() == f.labels.size());
    auto prof = degree_profile(f.graph);
    CHECK(prof.min_degree == f.expected.min_degree);
    CHECK(prof.max_degree == f.expected.max_degree);
    CHECK(prof.regular == f.expected.regular);
    if (f.expected.claw_free) CHECK(is_claw_free(f.graph).claw_free == *f.expected.claw_free);
    if (f.expected.planar) {
        REQUIRE(f.rotation);
        CHECK(verify_embedding(f.graph, *f.rotation).ok == *f.expected.planar);
    }
    CHECK(is_connected(f.graph));
}

std::set<Ratio> edge_ratios(const LabeledFamily& f)
{
    std::set<Ratio> out;
    for (const auto& [e, c] : f.edge_certs) out.insert(c.ratio);
    return out;
}

Ratio r(std::int64_t p, std::int64_t q)
{
    return Ratio::finite(p, q);
}

}  // namespace

TEST_CASE("planar chain")
{
    for (int m : {4, 6, 8, 10}) {
        LabeledFamily f = gen_planar_chain(m);
        check_structure(f);
        CHECK(f.graph.order() == static_cast<std::size_t>(6 * m));
        CHECK(f.graph.size() == static_cast<std::size_t>(12 * m));
        CHECK(f.base.cut.count() == static_cast<std::size_t>(3 * m));
        CHECK(f.base.omega == static_cast<std::size_t>(2 * m));
        std::set<Ratio> allowed = {r(3 * m + 1, 2 * m + 1), r(3 * m - 1, 2 * m), r(3 * m - 2, 2 * m - 1)};
        for (const Ratio& x : edge_ratios(f)) {
            CHECK(allowed.count(x) == 1);
            CHECK(x < r(3, 2));
        }
        CHECK(f.params.at("m") == m);
    }
    CHECK(gen_planar_chain(4).index_of("v_{2,5}") == 10);
    CHECK(gen_planar_chain(4).label_map_text().starts_with("v_{1,1} 0\nv_{1,2} 1\n"));
    CHECK_THROWS_AS(gen_planar_chain(5), FamilyError);
    CHECK_THROWS_AS(gen_planar_chain(2), FamilyError);
    CHECK_THROWS_AS(gen_planar_chain(4).index_of("v_{9,9}"), FamilyError);
}

TEST_CASE("planar chain links follow the block parity rule")
{
    LabeledFamily f = gen_planar_chain(4);
    auto adj = [&](const char* a, const char* b) { return f.graph.adjacent(f.index_of(a), f.index_of(b)); };
    CHECK(adj("v_{2,1}", "v_{3,1}"));
    CHECK(adj("v_{2,2}", "v_{3,5}"));
    CHECK(adj("v_{2,5}", "v_{3,2}"));
    CHECK(adj("v_{1,4}", "v_{2,4}"));
    CHECK(adj("v_{1,3}", "v_{2,5}"));
    CHECK(adj("v_{1,5}", "v_{2,3}"));
    CHECK(adj("v_{4,1}", "v_{1,1}"));
    CHECK(adj("v_{3,6}", "v_{3,4}"));
    CHECK_FALSE(adj("v_{3,6}", "v_{3,5}"));
}

TEST_CASE("K_n box P_2 minus a matching")
{
    for (int n = 7; n <= 10; ++n)
        for (int m = 1; m < n; ++m) {
            if (3 * m <= 2 * n) {
                CHECK_THROWS_AS(gen_knp2_minus_matching(n, m), FamilyError);
                continue;
            }
            LabeledFamily f = gen_knp2_minus_matching(n, m);
            check_structure(f);
            CHECK(f.graph.order() == static_cast<std::size_t>(2 * n));
            CHECK(f.expected.toughness == r(m, 2));
            CHECK(*f.expected.claw_free);
            for (const auto& [e, c] : f.edge_certs) {
                bool cross = e.v - e.u == n;
                CHECK(c.ratio == (cross ? r(m - 1, 2) : r(n, 3)));
            }
        }
    LabeledFamily f = gen_knp2_minus_matching(7, 5);
    CHECK(f.graph.order() == 14);
    CHECK(f.expected.min_degree == 6);
    CHECK(f.base.ratio == r(5, 2));
    CHECK(edge_ratios(gen_knp2_minus_matching(9, 7)).count(r(3, 1)) == 1);
    CHECK_THROWS_AS(gen_knp2_minus_matching(7, 4), FamilyError);
    CHECK_THROWS_AS(gen_knp2_minus_matching(6, 5), FamilyError);
    CHECK_THROWS_AS(gen_knp2_minus_matching(7, 7), FamilyError);
}

TEST_CASE("K_n box P_3 and its regular variant")
{
    for (int n = 3; n <= 10; ++n) {
        LabeledFamily f = gen_knp3(n, false);
        check_structure(f);
        CHECK(f.graph.order() == static_cast<std::size_t>(3 * n));
        CHECK(f.base.cut.count() == static_cast<std::size_t>(n + 1));
        CHECK(f.base.omega == 3);
        std::set<Ratio> allowed = {r(n, 3), r(n + 2, 4)};
        for (const Ratio& x : edge_ratios(f)) CHECK(allowed.count(x) == 1);

        // Same graph as the operator product, with (v, w) at layer w + 1, position v + 1.
        ProductGraph p = cartesian_product(complete(static_cast<std::size_t>(n)), path(3));
        std::vector<Vertex> perm(p.graph.order());
        for (std::size_t x = 0; x < perm.size(); ++x)
            perm[x] = p.pair_of[x].second * n + p.pair_of[x].first;
        CHECK(p.graph.permuted(perm) == f.graph);
    }
    for (int n = 4; n <= 10; ++n) {
        LabeledFamily f = gen_knp3(n, true);
        check_structure(f);
        CHECK(f.graph.order() == static_cast<std::size_t>(3 * n - 1));
        CHECK(f.expected.regular);
        CHECK(f.expected.toughness == r(n + 1, 3));
        std::set<Ratio> allowed = {r(n, 3), r(n + 2, 4)};
        for (const Ratio& x : edge_ratios(f)) CHECK(allowed.count(x) == 1);
        CHECK_THROWS_AS(f.index_of("v_{2," + std::to_string(n) + "}"), FamilyError);
        CHECK(f.graph.adjacent(f.index_of("v_{1," + std::to_string(n) + "}"), f.index_of("v_{3," + std::to_string(n) + "}")));
    }
    CHECK(gen_knp3(5, false).graph.order() == 15);
    CHECK(gen_knp3(5, true).graph.order() == 14);
    CHECK(gen_knp3(3, false).expected.toughness == r(4, 3));
    CHECK_THROWS_AS(gen_knp3(2, false), FamilyError);
    CHECK_THROWS_AS(gen_knp3(3, true), FamilyError);
}

TEST_CASE("square of L(S(K_4))")
{
    LabeledFamily f = gen_square_lsk4();
    check_structure(f);
    CHECK(f.graph.order() == 12);
    CHECK(f.graph.size() == 42);
    CHECK(f.base.cut.count() == 9);
    CHECK(f.base.omega == 3);
    CHECK(edge_ratios(f) == std::set<Ratio>{r(8, 3)});
    Graph h = line_graph(subdivision(complete(4))).graph;
    CHECK(h.order() == 12);
    CHECK(degree_profile(h).regular);
    CHECK(degree_profile(h).min_degree == 3);
}

TEST_CASE("small members are exactly right and minimally tough")
{
    std::vector<LabeledFamily> fams = {gen_square_lsk4(), gen_knp3(3, false), gen_knp3(4, false), gen_knp3(5, false),
                                       gen_knp3(4, true), gen_knp3(5, true), gen_knp2_minus_matching(7, 5),
                                       gen_planar_chain(4)};
    for (const auto& f : fams) {
        INFO(to_string(f.tag), " order ", f.graph.order());
        CHECK(toughness_exact(f.graph).value == f.expected.toughness);
        MinimalityReport rep = is_minimally_tough(f.graph, {}, f.edge_certs);
        CHECK(rep.verdict == Verdict::minimal);
        for (const auto& e : rep.edges) CHECK(e.source == WitnessSource::hint);
        if (f.graph.order() <= 16) CHECK(is_minimally_tough(f.graph).verdict == Verdict::minimal);
    }
}
