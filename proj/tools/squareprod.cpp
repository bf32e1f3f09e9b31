#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "squareprod/certificate.hpp"
#include "squareprod/decompose.hpp"
#include "squareprod/gadgets.hpp"
#include "squareprod/generators.hpp"
#include "squareprod/recognize.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace squareprod;

namespace {

enum Exit { ok = 0, negative = 1, input_error = 2, size_gate = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("cannot write " + path.string());
}

// .spg files carry an embedding; anything else is read as an edge list.
Graph load_abstract(const std::string& path)
{
    const std::string text = read_file(path);
    if (fs::path(path).extension() == ".spg")
        return parse_plane_graph(text).graph();
    return parse_edge_list(text);
}

std::size_t resolve_gate(std::optional<std::size_t> flag, std::size_t fallback)
{
    if (flag)
        return *flag;
    if (const char* env = std::getenv("SQUAREPROD_GATE")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring SQUAREPROD_GATE=" << env << "\n";
        }
    }
    return fallback;
}

double elapsed_ms(std::chrono::steady_clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

const char* yes_no(bool b)
{
    return b ? "yes" : "no";
}

int cmd_check(const std::string& file)
{
    const PlaneGraph g = parse_plane_graph(read_file(file));
    const auto verdict = is_squaregraph(g);
    std::cout << "squaregraph: " << verdict.describe() << "\n";
    return verdict ? ok : negative;
}

void print_summary(const Decomposition& d, const PlaneGraph& g)
{
    const auto& c = d.checks;
    std::cout << "vertices: " << g.num_vertices() << "\n"
              << "components: " << d.roots.size() << "\n"
              << "parts |V(H)|: " << d.h().num_vertices() << "\n"
              << "quotient edges |E(H)|: " << d.h().num_edges() << "\n"
              << "path length: " << d.embedding.path_length << "\n"
              << "width: " << c.width << "\n"
              << "thin: " << yes_no(c.thin) << "\n"
              << "layers independent: " << yes_no(c.layers_independent) << "\n"
              << "vertical paths: " << yes_no(c.vertical_paths) << "\n"
              << "deepest vertices outer: " << yes_no(c.deepest_outer) << "\n"
              << "semistrong embedding: " << yes_no(c.semistrong_embedding) << "\n"
              << "H outerplanar (embedding): " << yes_no(c.h_outerplanar_embedding) << "\n"
              << "H outerplanar (minors): "
              << (c.h_outerplanar_minor ? yes_no(*c.h_outerplanar_minor) : "skipped, H too large") << "\n";
}

int cmd_decompose(const std::string& file, std::optional<VertexId> root, const std::string& out_path,
                  const std::string& format)
{
    const PlaneGraph g = parse_plane_graph(read_file(file));
    if (auto verdict = is_squaregraph(g); !verdict) {
        std::cerr << "not a squaregraph: " << verdict.describe() << "\n";
        return negative;
    }
    const Decomposition d = decompose_squaregraph(g, root);
    const std::string cert = certificate_json(d);
    if (!out_path.empty())
        write_file(out_path, cert);
    if (format == "json")
        std::cout << cert;
    else
        print_summary(d, g);
    return ok;
}

int cmd_verify(const std::string& graph_file, const std::string& cert_file, const std::string& format)
{
    const PlaneGraph g = parse_plane_graph(read_file(graph_file));
    const CertificateReport report = verify_certificate(g, read_file(cert_file));
    if (format == "json") {
        ordered_json j;
        j["ok"] = report.ok();
        j["violations"] = ordered_json::array();
        for (const auto& v : report.violations)
            j["violations"].push_back({{"check", v.check}, {"detail", v.detail}});
        std::cout << j.dump(2) << "\n";
    } else if (report.ok()) {
        std::cout << "certificate: valid\n";
    } else {
        std::cout << "certificate: invalid\n";
        for (const auto& v : report.violations)
            std::cout << "  " << v.check << ": " << v.detail << "\n";
    }
    return report.ok() ? ok : negative;
}

struct GadgetArgs {
    std::string kind = "plain";
    std::size_t k = 1, i = 1, j = 0, ell = 1, nprime = 4;
    std::string out;
    bool spg = false;
};

int cmd_gadget(const GadgetArgs& a)
{
    Gadget gadget;
    if (a.kind == "plain")
        gadget = gadget_plain(a.k, a.ell, a.nprime);
    else if (a.kind == "bipartite")
        gadget = gadget_bipartite(a.i, a.j, a.ell, a.nprime);
    else
        throw Error(ErrorKind::InvalidArgument, "unknown gadget kind " + a.kind);

    const std::string graph_text = serialize_edge_list(gadget.graph);
    const std::string meta = gadget.metadata_json() + "\n";
    if (a.out.empty()) {
        std::cout << graph_text << meta;
    } else {
        const fs::path base(a.out);
        write_file(base.string() + ".graph", graph_text);
        write_file(base.string() + ".json", meta);
        if (a.spg) {
            if (a.kind != "bipartite" || a.i != 1 || a.j != 0)
                throw Error(ErrorKind::InvalidArgument, "--spg is only available for the bipartite (1,0) gadget");
            write_file(base.string() + ".spg", serialize(bipartite_base_embedding(a.nprime)));
        }
        std::cout << "wrote " << base.string() << ".graph (" << gadget.graph.num_vertices() << " vertices, "
                  << gadget.graph.num_edges() << " edges), apex " << gadget.apex << "\n";
    }
    return ok;
}

struct OracleArgs {
    std::string file;
    std::string second;
    std::size_t width = 1;
    std::size_t max_layers = 6;
    std::size_t s = 2;
    std::optional<std::size_t> gate;
    std::string out;
    std::string format = "text";
};

void emit(const OracleArgs& a, const ordered_json& j, const std::string& text)
{
    if (!a.out.empty())
        write_file(a.out, j.dump(2) + "\n");
    if (a.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int cmd_forest_quotient(const OracleArgs& a)
{
    const Graph g = load_abstract(a.file);
    const std::size_t gate = resolve_gate(a.gate, kForestQuotientGate);
    const auto start = std::chrono::steady_clock::now();
    const auto result = forest_quotient_search(g, a.width, a.max_layers, gate);
    const std::string report = forest_quotient_report_json(a.file, gate, result, elapsed_ms(start));
    emit(a, ordered_json::parse(report),
         std::string(result.sat ? "SAT" : "UNSAT") + " (" + std::to_string(result.nodes_explored) + " nodes)");
    return ok;
}

int cmd_pathwidth(const OracleArgs& a)
{
    const Graph g = load_abstract(a.file);
    const auto start = std::chrono::steady_clock::now();
    const auto pd = pathwidth_exact(g, resolve_gate(a.gate, kPathwidthGate));
    ordered_json j;
    j["instance"] = a.file;
    j["pathwidth"] = pd.width;
    j["bags"] = pd.bags;
    j["wall_time_ms"] = elapsed_ms(start);
    emit(a, j, std::to_string(pd.width));
    return ok;
}

int cmd_minor(const OracleArgs& a)
{
    const Graph host = load_abstract(a.file);
    const Graph target = load_abstract(a.second);
    const std::size_t gate = resolve_gate(a.gate, kMinorGate);
    const auto start = std::chrono::steady_clock::now();
    SearchStats stats;
    const auto model = find_minor_model(host, target, a.s, gate, &stats);
    ordered_json j;
    j["instance"] = a.file;
    j["target"] = a.second;
    j["gate"] = gate;
    j["outcome"] = model ? "found" : "none";
    if (model) {
        ordered_json sets = ordered_json::object();
        for (const auto& [t, set] : model->branch_sets)
            sets[std::to_string(t)] = set;
        j["model"] = sets;
    } else {
        j["model"] = nullptr;
    }
    j["nodes_explored"] = stats.nodes;
    j["wall_time_ms"] = elapsed_ms(start);
    emit(a, j, model ? "model found" : "no model");
    return ok;
}

int cmd_inject(const OracleArgs& a)
{
    const Graph pattern = load_abstract(a.file);
    const Graph host = load_abstract(a.second);
    const std::size_t gate = resolve_gate(a.gate, kInjectionGate);
    const auto start = std::chrono::steady_clock::now();
    SearchStats stats;
    const auto mapping = subgraph_injection_exists(pattern, host, gate, &stats);
    ordered_json j;
    j["instance"] = a.file;
    j["host"] = a.second;
    j["gate"] = gate;
    j["outcome"] = mapping ? "found" : "none";
    if (mapping) {
        ordered_json m = ordered_json::object();
        for (const auto& [p, h] : *mapping)
            m[std::to_string(p)] = h;
        j["mapping"] = m;
    } else {
        j["mapping"] = nullptr;
    }
    j["nodes_explored"] = stats.nodes;
    j["wall_time_ms"] = elapsed_ms(start);
    emit(a, j, mapping ? "injection found" : "no injection");
    return ok;
}

struct CorpusResult {
    bool ok = false;
    std::string error;
    std::size_t vertices = 0;
    std::size_t parts = 0;
    std::size_t path_length = 0;
    std::string certificate;
};

int cmd_corpus(std::uint64_t seed, std::size_t jobs, const std::string& out_dir, const std::string& format)
{
    const auto corpus = squaregraph_corpus(seed);
    std::vector<CorpusResult> results(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < corpus.size(); k = next++) {
            CorpusResult& r = results[k];
            r.vertices = corpus[k].graph.num_vertices();
            try {
                const Decomposition d = decompose_squaregraph(corpus[k].graph);
                r.parts = d.h().num_vertices();
                r.path_length = d.embedding.path_length;
                r.certificate = certificate_json(d);
                r.ok = verify_certificate(corpus[k].graph, r.certificate).ok();
                if (!r.ok)
                    r.error = "certificate rejected";
            } catch (const std::exception& err) {
                r.error = err.what();
            }
        }
    };
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        for (std::size_t k = 0; k < corpus.size(); ++k) {
            write_file(fs::path(out_dir) / (corpus[k].name + ".spg"), serialize(corpus[k].graph));
            if (results[k].ok)
                write_file(fs::path(out_dir) / (corpus[k].name + ".cert.json"), results[k].certificate);
        }
    }

    std::size_t passed = 0;
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& r = results[k];
        passed += r.ok;
        if (format == "json") {
            rows.push_back({{"instance", corpus[k].name},
                            {"vertices", r.vertices},
                            {"parts", r.parts},
                            {"path_length", r.path_length},
                            {"ok", r.ok},
                            {"error", r.error}});
        } else {
            std::cout << corpus[k].name << "\t" << r.vertices << "\t" << r.parts << "\t" << r.path_length << "\t"
                      << (r.ok ? "ok" : "FAIL " + r.error) << "\n";
        }
    }
    if (format == "json")
        std::cout << rows.dump(2) << "\n";
    else
        std::cout << passed << "/" << corpus.size() << " instances decomposed and verified\n";
    return passed == corpus.size() ? ok : negative;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Squaregraph recognition, product-structure certificates and gadget oracles"};
    app.require_subcommand(1);
    int code = ok;

    std::string file, second, out, format = "text";
    std::optional<VertexId> root;

    auto* check = app.add_subcommand("check", "Test whether a .spg plane graph is a squaregraph");
    check->add_option("file", file, "Plane graph (.spg)")->required();
    check->callback([&] { code = cmd_check(file); });

    auto* decompose = app.add_subcommand("decompose", "Decompose a squaregraph and write a certificate");
    decompose->add_option("file", file, "Plane graph (.spg)")->required();
    decompose->add_option("--root", root, "Root vertex (an outer vertex)");
    decompose->add_option("--out", out, "Certificate output path");
    decompose->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    decompose->callback([&] { code = cmd_decompose(file, root, out, format); });

    auto* verify = app.add_subcommand("verify", "Re-check a certificate against its graph");
    verify->add_option("graph", file, "Plane graph (.spg)")->required();
    verify->add_option("certificate", second, "Certificate JSON")->required();
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    verify->callback([&] { code = cmd_verify(file, second, format); });

    GadgetArgs gadget_args;
    auto* gadget = app.add_subcommand("gadget", "Build a lower-bound gadget graph");
    gadget->add_option("--kind", gadget_args.kind, "plain or bipartite")->check(CLI::IsMember({"plain", "bipartite"}));
    gadget->add_option("-k", gadget_args.k, "Recursion depth (plain)");
    gadget->add_option("-i", gadget_args.i, "Red recursion depth (bipartite)");
    gadget->add_option("-j", gadget_args.j, "Blue recursion depth (bipartite)");
    gadget->add_option("-l,--ell", gadget_args.ell, "Width parameter");
    gadget->add_option("--nprime", gadget_args.nprime, "Base path length");
    gadget->add_option("--out", gadget_args.out, "Output path stem; writes <stem>.graph and <stem>.json");
    gadget->add_flag("--spg", gadget_args.spg, "Also write the plane embedding of the (1,0) bipartite gadget");
    gadget->callback([&] { code = cmd_gadget(gadget_args); });

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive search oracles");
    oracle->require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--gate", oracle_args.gate, "Size gate override");
        sub->add_option("--out", oracle_args.out, "Write the JSON report here");
        sub->add_option("--format", oracle_args.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto* fq = oracle->add_subcommand("forest-quotient", "Search for a layered partition with a forest quotient");
    fq->add_option("file", oracle_args.file, "Graph (.graph or .spg)")->required();
    fq->add_option("--width", oracle_args.width, "Largest part-layer intersection");
    fq->add_option("--max-layers", oracle_args.max_layers, "Number of layer indices available");
    add_common(fq);
    fq->callback([&] { code = cmd_forest_quotient(oracle_args); });
    auto* pw = oracle->add_subcommand("pathwidth", "Exact pathwidth");
    pw->add_option("file", oracle_args.file, "Graph (.graph or .spg)")->required();
    add_common(pw);
    pw->callback([&] { code = cmd_pathwidth(oracle_args); });
    auto* minor = oracle->add_subcommand("minor", "Search for a model of a target graph");
    minor->add_option("file", oracle_args.file, "Host graph")->required();
    minor->add_option("--target", oracle_args.second, "Target graph")->required();
    minor->add_option("-s", oracle_args.s, "Largest branch set size");
    add_common(minor);
    minor->callback([&] { code = cmd_minor(oracle_args); });
    auto* inject = oracle->add_subcommand("inject", "Search for a copy of a pattern graph inside a host graph");
    inject->add_option("pattern", oracle_args.file, "Pattern graph")->required();
    inject->add_option("host", oracle_args.second, "Host graph")->required();
    add_common(inject);
    inject->callback([&] { code = cmd_inject(oracle_args); });

    std::uint64_t seed = 0;
    std::size_t jobs = 0;
    auto* corpus = app.add_subcommand("corpus", "Decompose and verify the generated squaregraph corpus");
    corpus->add_option("--seed", seed, "Generator seed");
    corpus->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
    corpus->add_option("--out", out, "Directory for graphs and certificates");
    corpus->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    corpus->callback([&] { code = cmd_corpus(seed, jobs, out, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return input_error;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::SizeGate: return size_gate;
        case ErrorKind::NotSquaregraph:
        case ErrorKind::RootNotOuter: return negative;
        default: return input_error;
        }
    }
    return code;
}
