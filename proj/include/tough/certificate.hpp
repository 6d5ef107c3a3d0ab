#pragma once

#include <cstddef>
#include <string>

#include "tough/graph.hpp"
#include "tough/ratio.hpp"

namespace tough {

/// A cut S with its claimed component count; establishes t(G) <= |S|/omega.
struct CutCertificate {
    VertexSet cut;
    std::size_t omega = 0;
    Ratio ratio;

    /// Measures omega(G - cut) and fills in the ratio.
    static CutCertificate measure(const Graph& g, const VertexSet& cut);

    friend bool operator==(const CutCertificate&, const CutCertificate&) = default;
};

struct Verification {
    bool ok = false;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

/// Recomputes omega(G - cut) and checks it against the claim.
Verification verify_certificate(const Graph& g, const CutCertificate& c);

/// Text form:
///   cert v1
///   graph: <graph6>
///   cut: <ascending indices>
///   omega: <integer>
///   ratio: <p>/<q>
std::string write_certificate(const Graph& g, const CutCertificate& c);

struct CertificateFile {
    Graph graph;
    CutCertificate cert;
};

class CertificateFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Strict parser for the text form above (LF line endings, single spaces).
CertificateFile parse_certificate(const std::string& text);

}  // namespace tough
