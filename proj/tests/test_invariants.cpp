#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracle.hpp"
#include "tough/families.hpp"
#include "tough/invariants.hpp"
#include "tough/operators.hpp"

using namespace tough;

namespace {

bool independent(const Graph& g, const VertexSet& s)
{
    for (Vertex u : s)
        if (g.neighbors(u).intersects(s)) return false;
    return true;
}

RotationSystem from_drawing(const Graph& g, const std::vector<std::pair<double, double>>& pos)
{
    RotationSystem rot;
    rot.order.resize(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        std::vector<std::pair<double, Vertex>> around;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
            auto [x, y] = pos[static_cast<std::size_t>(w)];
            around.emplace_back(std::atan2(y - pos[v].second, x - pos[v].first), w);
        }
        std::sort(around.begin(), around.end());
        for (auto [a, w] : around) rot.order[v].push_back(w);
    }
    return rot;
}

Graph claw()
{
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}});
}

}  // namespace

TEST_CASE("independence number examples")
{
    for (std::size_t n = 1; n <= 8; ++n) CHECK(independence_number(complete(n)).alpha == 1);
    IndependentSet c5 = independence_number(cycle(5));
    CHECK(c5.alpha == 2);
    CHECK(independent(cycle(5), c5.members));
    Graph sq = square(line_graph(subdivision(complete(4))).graph);
    CHECK(independence_number(sq).alpha == 3);
    auto all = maximum_independent_sets(sq);
    CHECK(all.size() == 4);
    for (const VertexSet& s : all) {
        CHECK(s.count() == 3);
        CHECK(independent(sq, s));
    }
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("branch and bound alpha equals 2^n enumeration on 250 random graphs")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 250; ++trial) {
        std::size_t n = 1 + rng() % 12;
        Graph g = oracle::random_graph(rng, n, 0.1 + 0.1 * static_cast<double>(trial % 8));
        IndependentSet r = independence_number(g);
        CHECK(r.alpha == oracle::alpha(oracle::matrix_of(g)));
        CHECK(r.members.count() == r.alpha);
        CHECK(independent(g, r.members));
        if (trial % 5 == 0) {
            for (const VertexSet& s : maximum_independent_sets(g)) {
                CHECK(s.count() == r.alpha);
                CHECK(independent(g, s));
            }
        }
    }
}

TEST_CASE("vertex connectivity examples and oracle agreement")
{
    for (std::size_t n = 1; n <= 7; ++n) CHECK(vertex_connectivity(complete(n)) == n - 1);
    for (std::size_t n = 3; n <= 9; ++n) CHECK(vertex_connectivity(cycle(n)) == 2);
    CHECK(vertex_connectivity(square(line_graph(subdivision(complete(4))).graph)) == 7);
    CHECK(vertex_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
    CHECK(local_connectivity(cycle(6), 0, 3) == 2);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng() % 10;
        Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * static_cast<double>(trial % 7));
        std::size_t k = vertex_connectivity(g);
        CHECK(k == oracle::kappa(oracle::matrix_of(g)));
        CHECK(k <= degree_profile(g).min_degree);
    }
}

TEST_CASE("claw detection")
{
    ClawCheck star = is_claw_free(claw());
    CHECK_FALSE(star.claw_free);
    REQUIRE(star.witness);
    CHECK(*star.witness == std::array<Vertex, 4>{0, 1, 2, 3});
    for (std::size_t n = 1; n <= 7; ++n) CHECK(is_claw_free(complete(n)).claw_free);

    Graph g = cartesian_product(complete(7), path(2)).graph;
    for (Vertex v = 0; v < 5; ++v) g = delete_edge(g, Edge(2 * v, 2 * v + 1));
    CHECK(is_claw_free(g).claw_free);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        Graph h = oracle::random_graph(rng, 1 + rng() % 10, 0.4);
        ClawCheck c = is_claw_free(h);
        CHECK(c.claw_free == oracle::claw_free(oracle::matrix_of(h)));
        if (c.witness) {
            auto [center, x, y, z] = *c.witness;
            CHECK(h.adjacent(center, x));
            CHECK(h.adjacent(center, y));
            CHECK(h.adjacent(center, z));
            CHECK_FALSE(h.adjacent(x, y));
            CHECK_FALSE(h.adjacent(x, z));
            CHECK_FALSE(h.adjacent(y, z));
        }
    }
}

TEST_CASE("embedding verification")
{
    Graph c3 = complete(3);
    RotationSystem r3{{{1, 2}, {2, 0}, {0, 1}}};
    EmbeddingCheck e3 = verify_embedding(c3, r3);
    CHECK(e3.ok);
    CHECK(e3.faces == 2);

    Graph k4 = complete(4);
    EmbeddingCheck e4 = verify_embedding(k4, from_drawing(k4, {{0, 0}, {2, 0}, {1, 2}, {1, 0.7}}));
    CHECK(e4.ok);
    CHECK(e4.faces == 4);

    Graph k5 = complete(5);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        RotationSystem r;
        r.order.resize(5);
        for (std::size_t v = 0; v < 5; ++v) {
            for (Vertex w : k5.neighbors(static_cast<Vertex>(v))) r.order[v].push_back(w);
            std::shuffle(r.order[v].begin(), r.order[v].end(), rng);
        }
        EmbeddingCheck e = verify_embedding(k5, r);
        CHECK_FALSE(e.ok);
        CHECK(e.faces != 7);
    }

    RotationSystem broken{{{1, 1}, {2, 0}, {0, 1}}};
    CHECK_THROWS_AS(verify_embedding(c3, broken), RotationError);
    RotationSystem missing{{{1}, {2, 0}, {0, 1}}};
    CHECK_THROWS_AS(verify_embedding(c3, missing), RotationError);

    auto chain = gen_planar_chain(4);
    REQUIRE(chain.rotation);
    EmbeddingCheck ec = verify_embedding(chain.graph, *chain.rotation);
    CHECK(ec.ok);
    CHECK(ec.faces == 26);
    for (int m : {6, 8, 10}) CHECK(verify_embedding(gen_planar_chain(m).graph, *gen_planar_chain(m).rotation).ok);
}

TEST_CASE("rotation text round trip")
{
    auto chain = gen_planar_chain(4);
    std::string text = chain.rotation->to_text();
    CHECK(text.starts_with("0: "));
    RotationSystem back = RotationSystem::parse(text);
    CHECK(back.order == chain.rotation->order);
    CHECK_THROWS_AS(RotationSystem::parse("0 1 2\n"), RotationError);
}

TEST_CASE("edge orbits")
{
    CHECK(edge_orbits(cycle(5)).orbit_count() == 1);
    CHECK(edge_orbits(path(4)).orbit_count() == 2);
    Graph k5p3 = cartesian_product(complete(5), path(3)).graph;
    EdgeOrbits orb = edge_orbits(k5p3);
    CHECK(orb.orbit_count() == 3);
    CHECK_THROWS_AS(edge_orbits(cycle(60)), OrbitLimitExceeded);

    std::vector<Graph> corpus = {k5p3, gen_square_lsk4().graph, gen_planar_chain(4).graph, gen_knp3(4, true).graph};
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) corpus.push_back(oracle::random_connected(rng, 4 + rng() % 7, 0.3));
    for (const Graph& g : corpus) {
        EdgeOrbits o = edge_orbits(g);
        CHECK(o.edges == g.edges());
        for (std::size_t i = 0; i < o.edges.size(); ++i) {
            const auto& phi = o.from_representative[i];
            CHECK(is_automorphism(g, phi));
            Edge rep = o.edges[o.representative[o.orbit_of[i]]];
            Edge image(phi[static_cast<std::size_t>(rep.u)], phi[static_cast<std::size_t>(rep.v)]);
            CHECK(image == o.edges[i]);
        }
        // Edges in different orbits are never related by an automorphism.
        for (std::size_t a = 0; a < o.orbit_count(); ++a)
            for (std::size_t b = a + 1; b < o.orbit_count(); ++b) {
                Edge x = o.edges[o.representative[a]], y = o.edges[o.representative[b]];
                CHECK_FALSE(find_automorphism(g, x.u, x.v, y.u, y.v));
                CHECK_FALSE(find_automorphism(g, x.u, x.v, y.v, y.u));
            }
    }
}
