#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "tough/certificate.hpp"
#include "tough/families.hpp"
#include "tough/graph6.hpp"
#include "tough/invariants.hpp"
#include "tough/search.hpp"
#include "tough/toughness.hpp"

namespace tough::cli {

namespace {

namespace fs = std::filesystem;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_inconclusive = 2;

struct CliConfig {
    int threads = 0;
    std::uint64_t seed = 0;
    double budget_secs = 60.0;
    std::size_t limit = 26;
};

struct GraphInput {
    std::string g6;
    std::string file;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int env_threads()
{
    const char* v = std::getenv("TOUGHNESS_THREADS");
    if (v == nullptr || *v == '\0') return 0;
    try {
        return std::max(0, std::stoi(v));
    } catch (const std::exception&) {
        return 0;
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

std::string strip(std::string s)
{
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
}

Graph load_graph(const GraphInput& in)
{
    if (!in.g6.empty()) return parse_graph6(in.g6);
    if (in.file.empty()) throw InputError("no graph given: use --g6 STRING or --file PATH");
    std::istringstream text(read_file(in.file));
    std::string line;
    while (std::getline(text, line)) {
        line = strip(line);
        if (line.starts_with(">>graph6<<")) line.erase(0, 10);
        if (!line.empty()) return parse_graph6(line);
    }
    throw InputError(in.file + ": no graph6 line");
}

void add_graph_input(CLI::App* cmd, GraphInput& in)
{
    auto* g6 = cmd->add_option("--g6", in.g6, "graph6 literal");
    auto* file = cmd->add_option("--file", in.file, "file whose first line is graph6");
    g6->excludes(file);
}

void add_common(CLI::App* cmd, CliConfig& cfg)
{
    cmd->add_option("--threads", cfg.threads, "worker threads (default: TOUGHNESS_THREADS or all cores)");
    cmd->add_option("--seed", cfg.seed, "heuristic seed");
    cmd->add_option("--budget", cfg.budget_secs, "heuristic wall-clock cap in seconds");
    cmd->add_option("--limit", cfg.limit, "largest order searched exhaustively");
}

ExactConfig exact_config(const CliConfig& cfg)
{
    ExactConfig e;
    e.exhaustive_limit = cfg.limit;
    e.threads = cfg.threads;
    return e;
}

UpperSearchConfig upper_config(const CliConfig& cfg)
{
    UpperSearchConfig u;
    u.seed = cfg.seed;
    u.budget_secs = cfg.budget_secs;
    return u;
}

MinimalityConfig minimality_config(const CliConfig& cfg)
{
    MinimalityConfig m;
    m.exact = exact_config(cfg);
    m.edge_exhaustive_limit = cfg.limit;
    m.heuristic.seed = cfg.seed;
    m.heuristic.budget_secs = std::min(m.heuristic.budget_secs, cfg.budget_secs);
    return m;
}

std::string cut_text(const VertexSet& cut)
{
    std::string out;
    for (Vertex v : cut) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

// ------------------------------------------------------------------ toughness

int cmd_toughness(const GraphInput& input, bool upper, const std::string& cert_path, const CliConfig& cfg,
                  std::ostream& out)
{
    Graph g = load_graph(input);
    std::optional<CutCertificate> witness;
    if (upper) {
        try {
            witness = toughness_upper_search(g, upper_config(cfg));
        } catch (const NoCutFound&) {
            out << "t = inf\n";
            return exit_ok;
        }
        out << "t <= " << witness->ratio.to_string() << "\n";
    } else {
        ToughnessResult r = toughness_exact(g, exact_config(cfg));
        witness = r.witness;
        out << "t = " << r.value.to_string() << "\n";
    }
    if (!cert_path.empty()) {
        if (!witness) throw InputError("complete graph has no cut-set; no certificate written");
        write_file(cert_path, write_certificate(g, *witness));
    }
    return exit_ok;
}

// ------------------------------------------------------------------------ gen

struct GenArgs {
    std::string family;
    int m = 0;
    int n = 0;
    bool regularized = false;
    std::string certs_dir;
    std::string rotation_path;
    std::string labels_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err)
{
    LabeledFamily fam;
    if (a.family == "planar-chain") {
        fam = gen_planar_chain(a.m);
    } else if (a.family == "knp2-minus-matching") {
        fam = gen_knp2_minus_matching(a.n, a.m);
    } else if (a.family == "knp3") {
        fam = gen_knp3(a.n, a.regularized);
    } else if (a.family == "square-lsk4") {
        fam = gen_square_lsk4();
    } else {
        throw InputError("unknown family " + a.family +
                         " (expected planar-chain, knp2-minus-matching, knp3, square-lsk4)");
    }
    for (Edge e : fam.fallback_edges)
        err << "note: edge " << e.u << "-" << e.v << " certified by search, not by template\n";

    if (!a.certs_dir.empty()) {
        fs::path dir(a.certs_dir);
        fs::create_directories(dir);
        write_file(dir / "base.cert", write_certificate(fam.graph, fam.base));
        for (const auto& [e, c] : fam.edge_certs) {
            std::string name = "edge-" + std::to_string(e.u) + "-" + std::to_string(e.v) + ".cert";
            write_file(dir / name, write_certificate(delete_edge(fam.graph, e), c));
        }
    }
    if (!a.rotation_path.empty()) {
        if (!fam.rotation) throw InputError(a.family + " has no rotation system");
        write_file(a.rotation_path, fam.rotation->to_text());
    }
    if (!a.labels_path.empty()) write_file(a.labels_path, fam.label_map_text());
    out << write_graph6(fam.graph) << "\n";
    return exit_ok;
}

// -------------------------------------------------------------------- certify

int cmd_certify(const std::string& path, std::ostream& out)
{
    CertificateFile file;
    try {
        file = parse_certificate(read_file(path));
    } catch (const std::exception& e) {
        out << "FAIL " << e.what() << "\n";
        return exit_failure;
    }
    Verification v = verify_certificate(file.graph, file.cert);
    if (!v) {
        out << "FAIL " << v.reason << "\n";
        return exit_failure;
    }
    out << "OK " << file.cert.cut.count() << "/" << file.cert.omega << " = " << file.cert.ratio.to_string() << "\n";
    return exit_ok;
}

// -------------------------------------------------------------------- minimal

EdgeHints load_hints(const std::string& dir, const Graph& g, std::ostream& err)
{
    EdgeHints hints;
    if (dir.empty()) return hints;
    if (!fs::is_directory(dir)) throw InputError(dir + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& p : files) {
        std::string name = p.filename().string();
        int u = 0, v = 0;
        char tail = 0;
        if (std::sscanf(name.c_str(), "edge-%d-%d.cer%c", &u, &v, &tail) != 3 || tail != 't') continue;
        if (u < 0 || v < 0 || u == v || static_cast<std::size_t>(std::max(u, v)) >= g.order() || !g.adjacent(u, v)) {
            err << "warning: " << name << " does not name an edge of the graph\n";
            continue;
        }
        try {
            CertificateFile file = parse_certificate(read_file(p.string()));
            if (!(file.graph == delete_edge(g, Edge(u, v)))) {
                err << "warning: " << name << " is for a different graph\n";
                continue;
            }
            hints.emplace(Edge(u, v), file.cert);
        } catch (const std::exception& e) {
            err << "warning: " << name << ": " << e.what() << "\n";
        }
    }
    return hints;
}

int cmd_minimal(const GraphInput& input, const std::string& hints_dir, bool orbits, const CliConfig& cfg,
                std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(input);
    MinimalityConfig mc = minimality_config(cfg);
    mc.use_edge_orbits = orbits;
    mc.stop_at_first_failure = true;
    MinimalityReport r = is_minimally_tough(g, mc, load_hints(hints_dir, g, err));
    out << "minimally tough: " << to_string(r.verdict) << ", t " << (r.toughness_is_upper_bound ? "<=" : "=") << " "
        << r.toughness.to_string() << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    if (r.failing_edge) out << "failing edge: " << r.failing_edge->u << "-" << r.failing_edge->v << "\n";
    if (!r.edges.empty()) out << "edge\tsource\tratio\tcut\n";
    for (const EdgeWitness& w : r.edges) {
        out << w.edge.u << "-" << w.edge.v << "\t";
        if (w.cert) {
            out << to_string(*w.source) << (w.via_orbit ? "+orbit" : "") << "\t" << w.cert->ratio.to_string() << "\t"
                << cut_text(w.cert->cut) << "\n";
        } else {
            out << "none\t-\t-\n";
        }
    }
    switch (r.verdict) {
    case Verdict::minimal:
    case Verdict::not_minimal: return exit_ok;
    case Verdict::inconclusive: return exit_inconclusive;
    }
    return exit_ok;
}

// --------------------------------------------------------------------- search

struct SearchArgs {
    std::string input;
    bool non_regular_only = false;
    std::size_t min_n = 0;
    std::size_t max_n = 0;
    std::size_t min_delta = 0;
};

int cmd_search(const SearchArgs& a, const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    SearchOptions opt;
    opt.gkc.minimality = minimality_config(cfg);
    opt.gkc.min_delta = a.min_delta;
    opt.non_regular_only = a.non_regular_only;
    opt.min_n = a.min_n;
    opt.max_n = a.max_n;
    opt.threads = cfg.threads;
    SearchReport report;
    if (a.input == "-") {
        report = filter_counterexamples(std::cin, opt);
    } else {
        std::ifstream in(a.input, std::ios::binary);
        if (!in) throw InputError("cannot open " + a.input);
        report = filter_counterexamples(in, opt);
    }
    for (const ParseFailure& p : report.parse_errors) err << "line " << p.line << ": " << p.message << "\n";
    for (const Undecided& u : report.inconclusive) err << "inconclusive line " << u.line << "\t" << u.g6 << "\t" << u.reason << "\n";
    out << report.to_text();
    return exit_ok;
}

// --------------------------------------------------------------------- orbits

int cmd_orbits(const GraphInput& input, std::size_t limit, std::ostream& out)
{
    Graph g = load_graph(input);
    EdgeOrbits orb = edge_orbits(g, limit);
    out << orb.orbit_count() << " edge orbits\n";
    for (std::size_t k = 0; k < orb.orbit_count(); ++k) {
        out << "orbit " << k << ":";
        for (std::size_t i = 0; i < orb.edges.size(); ++i)
            if (orb.orbit_of[i] == k) out << " " << orb.edges[i].u << "-" << orb.edges[i].v;
        out << "\n";
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact graph toughness with verifiable certificates", "toughness"};
    app.require_subcommand(1);
    CliConfig cfg;
    cfg.threads = env_threads();

    GraphInput t_in;
    bool t_exact = false, t_upper = false;
    std::string t_cert;
    auto* tough_cmd = app.add_subcommand("toughness", "compute t(G) exactly or bound it from above");
    add_graph_input(tough_cmd, t_in);
    auto* exact_flag = tough_cmd->add_flag("--exact", t_exact, "exhaustive search (default)");
    tough_cmd->add_flag("--upper", t_upper, "annealing upper bound")->excludes(exact_flag);
    tough_cmd->add_option("--cert", t_cert, "write the witness certificate here");
    add_common(tough_cmd, cfg);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a family member with its certificates");
    gen_cmd->add_option("family", gen.family, "planar-chain | knp2-minus-matching | knp3 | square-lsk4")->required();
    gen_cmd->add_option("--m", gen.m, "planar-chain blocks, or retained matching edges");
    gen_cmd->add_option("--n", gen.n, "clique order");
    gen_cmd->add_flag("--regularized", gen.regularized, "knp3: regular variant");
    gen_cmd->add_option("--certs", gen.certs_dir, "directory for base.cert and edge-<u>-<v>.cert");
    gen_cmd->add_option("--rotation", gen.rotation_path, "write the rotation system (planar-chain)");
    gen_cmd->add_option("--labels", gen.labels_path, "write the label map");

    GraphInput m_in;
    std::string m_hints;
    bool m_orbits = false;
    auto* min_cmd = app.add_subcommand("minimal", "decide minimal toughness");
    add_graph_input(min_cmd, m_in);
    min_cmd->add_option("--hints", m_hints, "directory of edge-<u>-<v>.cert files");
    min_cmd->add_flag("--orbits", m_orbits, "reuse witnesses across edge orbits");
    add_common(min_cmd, cfg);

    std::string c_path;
    auto* cert_cmd = app.add_subcommand("certify", "re-verify a certificate file");
    cert_cmd->add_option("--cert", c_path, "certificate file")->required();

    SearchArgs s;
    auto* search_cmd = app.add_subcommand("search", "scan a graph6 stream for GKC counterexamples");
    search_cmd->add_option("--input", s.input, "graph6 file, or - for stdin")->required();
    search_cmd->add_flag("--non-regular-only", s.non_regular_only, "skip regular graphs");
    search_cmd->add_option("--min-n", s.min_n, "skip smaller graphs");
    search_cmd->add_option("--max-n", s.max_n, "skip larger graphs");
    search_cmd->add_option("--min-delta", s.min_delta, "skip graphs of smaller minimum degree");
    add_common(search_cmd, cfg);

    GraphInput o_in;
    std::size_t o_limit = 48;
    auto* orb_cmd = app.add_subcommand("orbits", "list edge orbits under the automorphism group");
    add_graph_input(orb_cmd, o_in);
    orb_cmd->add_option("--limit", o_limit, "largest order handled");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_failure;
    }

    try {
        if (*tough_cmd) return cmd_toughness(t_in, t_upper, t_cert, cfg, out);
        if (*gen_cmd) return cmd_gen(gen, out, err);
        if (*min_cmd) return cmd_minimal(m_in, m_hints, m_orbits, cfg, out, err);
        if (*cert_cmd) return cmd_certify(c_path, out);
        if (*search_cmd) return cmd_search(s, cfg, out, err);
        if (*orb_cmd) return cmd_orbits(o_in, o_limit, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}

}  // namespace tough::cli
