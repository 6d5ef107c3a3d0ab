#include <sstream>

#include "tough/invariants.hpp"

namespace tough {

std::string RotationSystem::to_text() const
{
    std::ostringstream out;
    for (std::size_t v = 0; v < order.size(); ++v) {
        out << v << ':';
        for (Vertex w : order[v]) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

RotationSystem RotationSystem::parse(const std::string& text)
{
    RotationSystem rot;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw RotationError("rotation line " + std::to_string(line_no) + ": missing ':'");
        long v = 0;
        try {
            v = std::stol(line.substr(0, colon));
        } catch (const std::exception&) {
            throw RotationError("rotation line " + std::to_string(line_no) + ": bad vertex index");
        }
        if (v < 0 || v >= static_cast<long>(VertexSet::max_vertices))
            throw RotationError("rotation line " + std::to_string(line_no) + ": vertex out of range");
        auto idx = static_cast<std::size_t>(v);
        if (rot.order.size() <= idx) rot.order.resize(idx + 1);
        std::istringstream rest(line.substr(colon + 1));
        long w = 0;
        while (rest >> w) rot.order[idx].push_back(static_cast<Vertex>(w));
        if (!rest.eof()) throw RotationError("rotation line " + std::to_string(line_no) + ": bad neighbour list");
    }
    return rot;
}

EmbeddingCheck verify_embedding(const Graph& g, const RotationSystem& rot)
{
    std::size_t n = g.order();
    if (rot.order.size() > n) throw RotationError("rotation mentions vertices outside the graph");
    // position[v][w] = index of w in the rotation at v
    std::vector<std::vector<int>> position(n, std::vector<int>(n, -1));
    std::vector<std::size_t> dart_base(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        static const std::vector<Vertex> none;
        const auto& cyc = v < rot.order.size() ? rot.order[v] : none;
        if (cyc.size() != g.degree(static_cast<Vertex>(v)))
            throw RotationError("rotation at vertex " + std::to_string(v) + " does not list its incident edges");
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            Vertex w = cyc[k];
            if (w < 0 || static_cast<std::size_t>(w) >= n || !g.adjacent(static_cast<Vertex>(v), w) ||
                position[v][static_cast<std::size_t>(w)] >= 0)
                throw RotationError("rotation at vertex " + std::to_string(v) + " is not a permutation of its edges");
            position[v][static_cast<std::size_t>(w)] = static_cast<int>(k);
        }
        dart_base[v + 1] = dart_base[v] + cyc.size();
    }

    EmbeddingCheck check;
    if (!is_connected(g)) return check;
    if (g.size() == 0) {
        check.faces = 1;
        check.ok = n == 1;
        return check;
    }
    // Dart (v, k) is v -> rot[v][k]; its successor is w -> succ_w(v).
    std::vector<char> used(dart_base[n], 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < rot.order[v].size(); ++k) {
            if (used[dart_base[v] + k]) continue;
            ++check.faces;
            std::size_t x = v;
            std::size_t kx = k;
            while (!used[dart_base[x] + kx]) {
                used[dart_base[x] + kx] = 1;
                auto w = static_cast<std::size_t>(rot.order[x][kx]);
                std::size_t back = static_cast<std::size_t>(position[w][x]);
                kx = (back + 1) % rot.order[w].size();
                x = w;
            }
        }
    }
    auto euler = static_cast<long>(n) - static_cast<long>(g.size()) + static_cast<long>(check.faces);
    check.ok = euler == 2;
    return check;
}

}  // namespace tough
