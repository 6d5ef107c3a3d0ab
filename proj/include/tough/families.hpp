#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tough/certificate.hpp"
#include "tough/graph.hpp"
#include "tough/invariants.hpp"
#include "tough/ratio.hpp"
#include "tough/toughness.hpp"

namespace tough {

enum class FamilyTag { planar_chain, knp2_minus_matching, knp3, knp3_regularized, square_lsk4 };
std::string to_string(FamilyTag tag);

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FamilyExpectation {
    Ratio toughness;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    bool regular = false;
    std::optional<bool> claw_free;  // only where the construction asserts it
    std::optional<bool> planar;
};

/// A generated construction with its labels and proof certificates.
struct LabeledFamily {
    FamilyTag tag = FamilyTag::planar_chain;
    std::map<std::string, long> params;
    Graph graph;
    std::vector<std::string> labels;  // vertex index -> label such as "v_{2,5}"
    FamilyExpectation expected;
    CutCertificate base;              // certificate for graph, ratio == expected.toughness
    EdgeHints edge_certs;             // certificate for graph - e, ratio < expected.toughness
    std::vector<Edge> fallback_edges; // edges whose template failed and were found by search
    std::optional<RotationSystem> rotation;

    Vertex index_of(const std::string& label) const;
    /// "v_{i,j} <index>" per line in index order.
    std::string label_map_text() const;
};

/// Planar 4-regular chain of m blocks (m even, m >= 4); 6m vertices, t = 3/2.
LabeledFamily gen_planar_chain(int m);

/// Two copies of K_n joined by the matching v_{1,j} v_{2,j}, j <= m
/// (n >= 7, 2n/3 < m < n); t = m/2.
LabeledFamily gen_knp2_minus_matching(int n, int m);

/// K_n box P_3 (n >= 3), or with v_{2,n} replaced by the edge
/// v_{1,n} v_{3,n} (n >= 4); t = (n+1)/3.
LabeledFamily gen_knp3(int n, bool regularized);

/// Square of L(S(K_4)): 12 vertices, 7-regular, t = 3.
LabeledFamily gen_square_lsk4();

struct SelfCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Re-verifies every stored certificate against graph or graph - e.
SelfCheck self_check(const LabeledFamily& family);

}  // namespace tough
