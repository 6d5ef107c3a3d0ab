#include "tough/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tough/operators.hpp"

namespace tough {

std::string to_string(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::planar_chain: return "planar-chain";
    case FamilyTag::knp2_minus_matching: return "knp2-minus-matching";
    case FamilyTag::knp3: return "knp3";
    case FamilyTag::knp3_regularized: return "knp3-regularized";
    case FamilyTag::square_lsk4: return "square-lsk4";
    }
    return "?";
}

Vertex LabeledFamily::index_of(const std::string& label) const
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw FamilyError("unknown label " + label);
    return static_cast<Vertex>(it - labels.begin());
}

std::string LabeledFamily::label_map_text() const
{
    std::string out;
    for (std::size_t v = 0; v < labels.size(); ++v) out += labels[v] + " " + std::to_string(v) + "\n";
    return out;
}

SelfCheck self_check(const LabeledFamily& family)
{
    SelfCheck check;
    auto fail = [&](std::string msg) {
        check.ok = false;
        check.failures.push_back(std::move(msg));
    };
    if (auto v = verify_certificate(family.graph, family.base); !v) fail("base: " + v.reason);
    if (family.base.ratio != family.expected.toughness)
        fail("base ratio " + family.base.ratio.to_string() + " != expected " + family.expected.toughness.to_string());
    for (Edge e : family.graph.edges()) {
        auto it = family.edge_certs.find(e);
        std::string name = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
        if (it == family.edge_certs.end()) {
            fail(name + ": no certificate");
            continue;
        }
        Graph h = delete_edge(family.graph, e);
        if (auto v = verify_certificate(h, it->second); !v) fail(name + ": " + v.reason);
        if (!(it->second.ratio < family.expected.toughness)) fail(name + ": ratio " + it->second.ratio.to_string() + " not below t");
    }
    return check;
}

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

struct Template {
    Edge edge;
    VertexSet cut;
};

// Verifies each template against G - e; failing or missing edges are
// resolved by engine search and flagged. Throws if an edge stays open.
void attach_certificates(LabeledFamily& fam, const std::vector<Template>& templates)
{
    const Graph& g = fam.graph;
    const Ratio t = fam.expected.toughness;
    fam.base = CutCertificate::measure(g, fam.base.cut);
    if (!verify_certificate(g, fam.base) || fam.base.ratio != t)
        throw FamilyError(to_string(fam.tag) + ": base certificate does not give " + t.to_string());

    for (const Template& tpl : templates) {
        if (fam.edge_certs.count(tpl.edge)) continue;
        if (!g.adjacent(tpl.edge.u, tpl.edge.v)) throw FamilyError(to_string(fam.tag) + ": template edge not in graph");
        Graph h = delete_edge(g, tpl.edge);
        CutCertificate c = CutCertificate::measure(h, tpl.cut);
        if (verify_certificate(h, c) && c.ratio < t) fam.edge_certs.emplace(tpl.edge, c);
    }
    for (Edge e : g.edges()) {
        if (fam.edge_certs.count(e)) continue;
        Graph h = delete_edge(g, e);
        std::optional<CutCertificate> found;
        if (h.order() <= ExactConfig{}.exhaustive_limit) {
            found = find_cut_below(h, t);
        } else {
            CutCertificate c = toughness_upper_search(h);
            if (c.ratio < t) found = c;
        }
        if (!found)
            throw FamilyError(to_string(fam.tag) + ": no certificate for edge " + std::to_string(e.u) + "-" +
                              std::to_string(e.v));
        fam.edge_certs.emplace(e, *found);
        fam.fallback_edges.push_back(e);
    }
}

VertexSet set_of(std::size_t n, const std::vector<Vertex>& members)
{
    VertexSet s(n);
    for (Vertex v : members) s.insert(v);
    return s;
}

}  // namespace

// ---------------------------------------------------------------- planar chain

namespace {

struct Point {
    double x;
    double y;
};

// Layout of one block; odd blocks open their 5-cycle towards the inside of
// the ring at v5, even blocks towards the outside. Index 0 unused.
constexpr Point odd_layout[7] = {{0, 0}, {-1, 0}, {-1, 1}, {1, 1}, {1, 0}, {0, -1}, {0, 0.4}};
constexpr Point even_layout[7] = {{0, 0}, {1, 0}, {1, -1}, {-1, -1}, {-1, 0}, {0, 1}, {0, -0.4}};

}  // namespace

LabeledFamily gen_planar_chain(int m)
{
    if (m < 4 || m % 2 != 0)
        throw FamilyError("planar-chain: m must be even with m >= 4 (got m=" + std::to_string(m) + ")");
    const auto n = static_cast<std::size_t>(6 * m);
    auto block = [m](int i) { return ((i - 1) % m + m) % m + 1; };
    auto v = [&](int i, int j) { return static_cast<Vertex>(6 * (block(i) - 1) + (j - 1)); };

    EdgeList es;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= 5; ++j) es.emplace_back(v(i, j), v(i, j % 5 + 1));
        for (int j = 1; j <= 4; ++j) es.emplace_back(v(i, 6), v(i, j));
        if (i % 2 == 0) {
            es.emplace_back(v(i, 1), v(i + 1, 1));
            es.emplace_back(v(i, 2), v(i + 1, 5));
            es.emplace_back(v(i, 5), v(i + 1, 2));
        } else {
            es.emplace_back(v(i, 4), v(i + 1, 4));
            es.emplace_back(v(i, 3), v(i + 1, 5));
            es.emplace_back(v(i, 5), v(i + 1, 3));
        }
    }

    LabeledFamily fam;
    fam.tag = FamilyTag::planar_chain;
    fam.params["m"] = m;
    fam.graph = Graph(n, es);
    fam.labels.resize(n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= 6; ++j)
            fam.labels[static_cast<std::size_t>(v(i, j))] = "v_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    fam.expected = {Ratio::finite(3, 2), 4, 4, true, std::nullopt, true};

    VertexSet base(n);
    for (int i = 1; i <= m; ++i) {
        if (i % 2 == 1) {
            base.insert(v(i, 1));
            base.insert(v(i, 4));
        } else {
            for (int j : {2, 3, 5, 6}) base.insert(v(i, j));
        }
    }
    fam.base.cut = base;

    // Proof cases, stated for one block of the required parity.
    auto with = [&](std::vector<Vertex> add, std::vector<Vertex> remove) {
        VertexSet s = base;
        for (Vertex x : remove) s.erase(x);
        for (Vertex x : add) s.insert(x);
        return s;
    };
    std::vector<Template> cases = {
        // Case 1, i odd: both ends in {v_{i,2}, v_{i,3}, v_{i,6}}; add the third.
        {Edge(v(1, 2), v(1, 3)), with({v(1, 6)}, {})},
        {Edge(v(1, 2), v(1, 6)), with({v(1, 3)}, {})},
        {Edge(v(1, 3), v(1, 6)), with({v(1, 2)}, {})},
        // Case 2, i even.
        {Edge(v(2, 1), v(2, 6)), with({}, {v(2, 6)})},
        {Edge(v(2, 2), v(2, 1)), with({}, {v(2, 2)})},
        {Edge(v(2, 2), v(3, 5)), with({}, {v(2, 2)})},
        // Case 3, i odd.
        {Edge(v(1, 4), v(2, 4)), with({v(1, 5)}, {v(0, 2), v(1, 4), v(2, 3)})},
        // Case 4, i even.
        {Edge(v(2, 1), v(2, 5)),
         with({v(1, 3), v(1, 6), v(1, 5), v(2, 4), v(3, 2)}, {v(0, 2), v(1, 4), v(2, 3), v(2, 5)})},
    };

    // Block shift v_{i,j} -> v_{i+1,pi(j)} and reflection v_{i,j} -> v_{-i,pi(j)},
    // pi = (1 4)(2 3); together they carry the cases onto every edge.
    constexpr int pi[7] = {0, 4, 3, 2, 1, 5, 6};
    std::vector<Vertex> shift(n), reflect(n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= 6; ++j) {
            shift[static_cast<std::size_t>(v(i, j))] = v(i + 1, pi[j]);
            reflect[static_cast<std::size_t>(v(i, j))] = v(-i, pi[j]);
        }
    if (!is_automorphism(fam.graph, shift) || !is_automorphism(fam.graph, reflect))
        throw FamilyError("planar-chain: block symmetries are not automorphisms");

    std::vector<Template> templates;
    std::vector<Vertex> power(n);
    for (std::size_t x = 0; x < n; ++x) power[x] = static_cast<Vertex>(x);
    for (int k = 0; k < m; ++k) {
        for (bool mirrored : {false, true}) {
            std::vector<Vertex> phi(n);
            for (std::size_t x = 0; x < n; ++x)
                phi[x] = mirrored ? power[static_cast<std::size_t>(reflect[x])] : power[x];
            for (const Template& c : cases) {
                VertexSet cut(n);
                for (Vertex x : c.cut) cut.insert(phi[static_cast<std::size_t>(x)]);
                templates.push_back({Edge(phi[static_cast<std::size_t>(c.edge.u)], phi[static_cast<std::size_t>(c.edge.v)]), cut});
            }
        }
        for (std::size_t x = 0; x < n; ++x) power[x] = shift[static_cast<std::size_t>(power[x])];
    }
    attach_certificates(fam, templates);

    // Rotation from the ring drawing: blocks side by side, each link drawn
    // as a straight segment to the neighbouring block, sorted by angle.
    RotationSystem rot;
    rot.order.resize(n);
    auto position = [&](int i, int j, int shift_blocks) {
        const Point& p = (block(i) % 2 == 1 ? odd_layout : even_layout)[j];
        return Point{4.0 * (block(i) - 1 + shift_blocks) + p.x, p.y};
    };
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= 6; ++j) {
            Vertex x = v(i, j);
            Point here = position(i, j, 0);
            std::vector<std::pair<double, Vertex>> around;
            for (Vertex w : fam.graph.neighbors(x)) {
                int wi = w / 6 + 1;
                int wj = w % 6 + 1;
                int offset = 0;
                if (wi == block(i + 1) && wi != block(i)) offset = 1;
                if (wi == block(i - 1) && wi != block(i)) offset = -1;
                Point there = position(i, wj, offset);
                around.emplace_back(std::atan2(there.y - here.y, there.x - here.x), w);
            }
            std::sort(around.begin(), around.end());
            for (auto& [angle, w] : around) rot.order[static_cast<std::size_t>(x)].push_back(w);
        }
    }
    fam.rotation = rot;
    return fam;
}

// ------------------------------------------------------- K_n box P_2 minus matching

LabeledFamily gen_knp2_minus_matching(int n, int m)
{
    if (n < 7 || !(3 * m > 2 * n) || !(m < n))
        throw FamilyError("knp2-minus-matching: requires n >= 7 and 2n/3 < m < n (got n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) + ")");
    const auto order = static_cast<std::size_t>(2 * n);
    auto v = [n](int i, int j) { return static_cast<Vertex>((i - 1) * n + (j - 1)); };
    EdgeList es;
    for (int i = 1; i <= 2; ++i)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) es.emplace_back(v(i, a), v(i, b));
    for (int j = 1; j <= m; ++j) es.emplace_back(v(1, j), v(2, j));

    LabeledFamily fam;
    fam.tag = FamilyTag::knp2_minus_matching;
    fam.params["n"] = n;
    fam.params["m"] = m;
    fam.graph = Graph(order, es);
    fam.labels.resize(order);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= n; ++j)
            fam.labels[static_cast<std::size_t>(v(i, j))] = "v_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    fam.expected = {Ratio::finite(m, 2), static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n), false, true,
                    std::nullopt};

    VertexSet first_m(order);
    for (int p = 1; p <= m; ++p) first_m.insert(v(1, p));
    fam.base.cut = first_m;

    std::vector<Template> templates;
    for (int j = 1; j <= m; ++j) {
        VertexSet s = first_m;
        s.erase(v(1, j));
        templates.push_back({Edge(v(1, j), v(2, j)), s});
    }
    for (int i = 1; i <= 2; ++i)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                VertexSet s(order);
                for (int p = 1; p <= n; ++p)
                    if (p != a && p != b) s.insert(v(i, p));
                s.insert(v(3 - i, a));
                s.insert(v(3 - i, b));
                templates.push_back({Edge(v(i, a), v(i, b)), s});
            }
    attach_certificates(fam, templates);
    return fam;
}

// ------------------------------------------------------------------ K_n box P_3

LabeledFamily gen_knp3(int n, bool regularized)
{
    if (n < 3) throw FamilyError("knp3: requires n >= 3 (got n=" + std::to_string(n) + ")");
    if (regularized && n < 4) throw FamilyError("knp3 --regularized: requires n >= 4 (got n=" + std::to_string(n) + ")");

    // Labels v_{i,p}: layer i in 1..3, position p in 1..n. The
    // regularized graph drops v_{2,n}.
    std::vector<std::vector<Vertex>> idx(4, std::vector<Vertex>(static_cast<std::size_t>(n + 1), -1));
    std::vector<std::string> labels;
    for (int i = 1; i <= 3; ++i)
        for (int p = 1; p <= n; ++p) {
            if (regularized && i == 2 && p == n) continue;
            idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] = static_cast<Vertex>(labels.size());
            labels.push_back("v_{" + std::to_string(i) + "," + std::to_string(p) + "}");
        }
    auto v = [&](int i, int p) {
        Vertex x = idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
        if (x < 0) throw FamilyError("knp3: label v_{2,n} does not exist in the regularized graph");
        return x;
    };
    auto exists = [&](int i, int p) { return idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] >= 0; };
    const std::size_t order = labels.size();

    EdgeList es;
    for (int i = 1; i <= 3; ++i)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (exists(i, a) && exists(i, b)) es.emplace_back(v(i, a), v(i, b));
    for (int p = 1; p <= n; ++p)
        if (exists(2, p)) {
            es.emplace_back(v(1, p), v(2, p));
            es.emplace_back(v(2, p), v(3, p));
        }
    if (regularized) es.emplace_back(v(1, n), v(3, n));

    LabeledFamily fam;
    fam.tag = regularized ? FamilyTag::knp3_regularized : FamilyTag::knp3;
    fam.params["n"] = n;
    fam.graph = Graph(order, es);
    fam.labels = labels;
    auto un = static_cast<std::size_t>(n);
    fam.expected = {Ratio::finite(n + 1, 3), un, regularized ? un : un + 1, regularized, std::nullopt, std::nullopt};

    auto layer_except = [&](VertexSet& s, int i, int last, std::initializer_list<int> skip) {
        for (int p = 1; p <= last; ++p)
            if (std::find(skip.begin(), skip.end(), p) == skip.end()) s.insert(v(i, p));
    };

    std::vector<Template> templates;
    if (!regularized) {
        VertexSet base(order);
        layer_except(base, 2, n - 1, {});
        base.insert(v(1, n));
        base.insert(v(3, n));
        fam.base.cut = base;
        for (int j = 1; j <= n; ++j)
            for (int i : {1, 3}) {
                VertexSet s(order);
                layer_except(s, 2, n, {j});
                s.insert(v(4 - i, j));
                templates.push_back({Edge(v(2, j), v(i, j)), s});
            }
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                for (int i : {1, 3}) {
                    VertexSet s(order);
                    layer_except(s, i, n, {a, b});
                    s.insert(v(2, a));
                    s.insert(v(2, b));
                    templates.push_back({Edge(v(i, a), v(i, b)), s});
                }
                VertexSet s(order);
                layer_except(s, 2, n, {a, b});
                for (int i : {1, 3}) {
                    s.insert(v(i, a));
                    s.insert(v(i, b));
                }
                templates.push_back({Edge(v(2, a), v(2, b)), s});
            }
    } else {
        VertexSet base(order);
        layer_except(base, 2, n - 2, {});
        base.insert(v(1, n - 1));
        base.insert(v(3, n - 1));
        base.insert(v(3, n));
        fam.base.cut = base;
        {
            VertexSet s(order);
            layer_except(s, 2, n - 2, {});
            s.insert(v(1, n - 1));
            s.insert(v(3, n - 1));
            templates.push_back({Edge(v(1, n), v(3, n)), s});
        }
        for (int j = 1; j <= n - 1; ++j)
            for (int i : {1, 3}) {
                VertexSet s(order);
                layer_except(s, 2, n - 1, {j});
                s.insert(v(4 - i, j));
                s.insert(v(1, n));
                templates.push_back({Edge(v(2, j), v(i, j)), s});
            }
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                for (int i : {1, 3}) {
                    VertexSet s(order);
                    layer_except(s, i, n, {a, b});
                    s.insert(v(2, a));
                    s.insert(b == n ? v(4 - i, n) : v(2, b));
                    templates.push_back({Edge(v(i, a), v(i, b)), s});
                }
                if (b <= n - 1) {
                    VertexSet s(order);
                    layer_except(s, 2, n - 1, {a, b});
                    for (int i : {1, 3}) {
                        s.insert(v(i, a));
                        s.insert(v(i, b));
                    }
                    s.insert(v(1, n));
                    templates.push_back({Edge(v(2, a), v(2, b)), s});
                }
            }
    }
    attach_certificates(fam, templates);
    return fam;
}

// ------------------------------------------------------------ square of L(S(K_4))

LabeledFamily gen_square_lsk4()
{
    Graph sk4 = subdivision(complete(4));
    LineGraph h = line_graph(sk4);
    const Graph& H = h.graph;
    Graph G = square(H);
    const std::size_t n = G.order();

    LabeledFamily fam;
    fam.tag = FamilyTag::square_lsk4;
    fam.graph = G;
    for (Edge e : h.edge_of) fam.labels.push_back("e_{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    fam.expected = {Ratio::finite(3, 1), 7, 7, true, std::nullopt, std::nullopt};

    const std::vector<VertexSet> maximum = maximum_independent_sets(G);
    fam.base.cut = G.all() - maximum.front();

    auto closed = [&](Vertex x) {
        VertexSet s = G.neighbors(x);
        s.insert(x);
        return s;
    };
    std::vector<Template> templates;
    for (Edge e : G.edges()) {
        if (H.adjacent(e.u, e.v)) {
            // The H-edge at G-distance greater than one from both ends of e.
            VertexSet near = closed(e.u) | closed(e.v);
            for (Edge f : H.edges()) {
                if (near.contains(f.u) || near.contains(f.v)) continue;
                templates.push_back({e, G.all() - set_of(n, {e.u, e.v, f.u, f.v})});
                break;
            }
        } else {
            // Orient e = uv so that v lies on an H-triangle with a common
            // H-neighbour w of u and v; then drop I(v) + u.
            for (auto [u, x] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                VertexSet common = H.neighbors(u) & H.neighbors(x);
                bool oriented = false;
                for (Vertex w : common)
                    if ((H.neighbors(w) & H.neighbors(x)).count() > 0) oriented = true;
                if (!oriented) continue;
                for (const VertexSet& I : maximum) {
                    if (!I.contains(x)) continue;
                    VertexSet keep = I;
                    keep.insert(u);
                    templates.push_back({e, G.all() - keep});
                }
            }
        }
    }
    attach_certificates(fam, templates);
    return fam;
}

}  // namespace tough
