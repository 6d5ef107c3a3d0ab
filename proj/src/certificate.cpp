#include "tough/certificate.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "tough/graph6.hpp"

namespace tough {

CutCertificate CutCertificate::measure(const Graph& g, const VertexSet& cut)
{
    CutCertificate c;
    c.cut = cut;
    c.omega = count_components(g, cut);
    if (c.omega > 0) c.ratio = Ratio::finite(static_cast<std::int64_t>(cut.count()), static_cast<std::int64_t>(c.omega));
    return c;
}

Verification verify_certificate(const Graph& g, const CutCertificate& c)
{
    if (c.cut.size() != g.order()) return {false, "cut width " + std::to_string(c.cut.size()) + " does not match order " + std::to_string(g.order())};
    if (c.omega < 2) return {false, "claimed omega " + std::to_string(c.omega) + " is below 2"};
    std::size_t actual = count_components(g, c.cut);
    if (actual != c.omega)
        return {false, "component mismatch: claimed " + std::to_string(c.omega) + ", found " + std::to_string(actual)};
    Ratio expect = Ratio::finite(static_cast<std::int64_t>(c.cut.count()), static_cast<std::int64_t>(c.omega));
    if (c.ratio.is_infinite() || c.ratio != expect)
        return {false, "ratio mismatch: claimed " + c.ratio.to_string() + ", |S|/omega is " + expect.to_string()};
    return {true, {}};
}

std::string write_certificate(const Graph& g, const CutCertificate& c)
{
    std::string out = "cert v1\ngraph: " + write_graph6(g) + "\ncut:";
    for (Vertex v : c.cut) out += " " + std::to_string(v);
    out += "\nomega: " + std::to_string(c.omega) + "\nratio: " + c.ratio.to_string() + "\n";
    return out;
}

namespace {

std::string_view expect_field(std::string_view line, std::string_view key, std::size_t line_no)
{
    if (line.substr(0, key.size()) != key)
        throw CertificateFormatError("certificate line " + std::to_string(line_no) + ": expected '" + std::string(key) + "'");
    return line.substr(key.size());
}

std::size_t parse_count(std::string_view s, std::size_t line_no)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw CertificateFormatError("certificate line " + std::to_string(line_no) + ": bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

CertificateFile parse_certificate(const std::string& text)
{
    std::vector<std::string_view> lines;
    std::string_view rest(text);
    while (!rest.empty()) {
        auto nl = rest.find('\n');
        if (nl == std::string_view::npos) {
            lines.push_back(rest);
            break;
        }
        lines.push_back(rest.substr(0, nl));
        rest.remove_prefix(nl + 1);
    }
    if (lines.size() != 5) throw CertificateFormatError("certificate: expected 5 lines, got " + std::to_string(lines.size()));
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].find('\r') != std::string_view::npos)
            throw CertificateFormatError("certificate line " + std::to_string(i + 1) + ": CR not allowed");
    if (lines[0] != "cert v1") throw CertificateFormatError("certificate line 1: expected 'cert v1'");

    CertificateFile file;
    try {
        file.graph = parse_graph6(expect_field(lines[1], "graph: ", 2));
    } catch (const Graph6Error& e) {
        throw CertificateFormatError(std::string("certificate line 2: ") + e.what());
    }
    file.cert.cut = VertexSet(file.graph.order());

    std::string_view cut = expect_field(lines[2], "cut:", 3);
    long previous = -1;
    while (!cut.empty()) {
        if (cut[0] != ' ') throw CertificateFormatError("certificate line 3: indices must be separated by single spaces");
        cut.remove_prefix(1);
        auto sp = cut.find(' ');
        std::size_t v = parse_count(cut.substr(0, sp), 3);
        if (v >= file.graph.order()) throw CertificateFormatError("certificate line 3: vertex " + std::to_string(v) + " out of range");
        if (static_cast<long>(v) <= previous) throw CertificateFormatError("certificate line 3: indices must be strictly ascending");
        previous = static_cast<long>(v);
        file.cert.cut.insert(static_cast<Vertex>(v));
        cut = sp == std::string_view::npos ? std::string_view{} : cut.substr(sp);
    }
    file.cert.omega = parse_count(expect_field(lines[3], "omega: ", 4), 4);
    std::string_view ratio = expect_field(lines[4], "ratio: ", 5);
    auto slash = ratio.find('/');
    if (slash == std::string_view::npos) throw CertificateFormatError("certificate line 5: expected p/q");
    auto p = parse_count(ratio.substr(0, slash), 5);
    auto q = parse_count(ratio.substr(slash + 1), 5);
    if (q == 0) throw CertificateFormatError("certificate line 5: zero denominator");
    file.cert.ratio = Ratio::finite(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
    return file;
}

}  // namespace tough
