#include "squareprod/certificate.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "squareprod/recognize.hpp"

namespace squareprod {

using nlohmann::ordered_json;

std::string certificate_json(const Decomposition& d)
{
    ordered_json j;
    j["parts"] = d.partition.parts;
    std::vector<std::vector<VertexId>> layers = d.layering.layers;
    for (auto& layer : layers)
        std::sort(layer.begin(), layer.end());
    j["layers"] = layers;
    j["quotient_edges"] = d.h().edges();
    ordered_json map = ordered_json::object();
    for (const auto& [v, c] : d.embedding.map)
        map[std::to_string(v)] = {c.h, c.path};
    j["map"] = map;
    j["mode"] = to_string(d.embedding.mode);
    const auto& c = d.checks;
    ordered_json checks;
    checks["width"] = c.width;
    checks["thin"] = c.thin;
    checks["layers_independent"] = c.layers_independent;
    checks["vertical_paths"] = c.vertical_paths;
    checks["deepest_outer"] = c.deepest_outer;
    checks["semistrong_embedding"] = c.semistrong_embedding;
    checks["h_outerplanar_embedding"] = c.h_outerplanar_embedding;
    if (c.h_outerplanar_minor)
        checks["h_outerplanar_minor"] = *c.h_outerplanar_minor;
    else
        checks["h_outerplanar_minor"] = nullptr;
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

bool CertificateReport::failed(std::string_view check) const
{
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.check == check; });
}

namespace {

bool is_id_array(const ordered_json& j)
{
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const ordered_json& x) { return x.is_number_integer(); });
}

bool is_array_of_id_arrays(const ordered_json& j)
{
    return j.is_array() && std::all_of(j.begin(), j.end(), is_id_array);
}

std::vector<std::vector<VertexId>> to_lists(const ordered_json& j)
{
    return j.get<std::vector<std::vector<VertexId>>>();
}

}  // namespace

CertificateReport verify_certificate(const PlaneGraph& g, std::string_view certificate)
{
    CertificateReport report;
    auto violate = [&](std::string check, std::string detail) {
        report.violations.push_back({std::move(check), std::move(detail)});
    };

    ordered_json j;
    try {
        j = ordered_json::parse(certificate);
    } catch (const nlohmann::json::parse_error& err) {
        violate("json", err.what());
        return report;
    }
    if (!j.is_object()) {
        violate("schema", "certificate is not a JSON object");
        return report;
    }
    const char* fields[] = {"parts", "layers", "quotient_edges", "map", "mode", "checks"};
    for (const char* f : fields)
        if (!j.contains(f))
            violate("schema", std::string("missing field ") + f);
    if (!report.ok())
        return report;
    if (!is_array_of_id_arrays(j["parts"]))
        violate("schema", "parts must be a list of vertex lists");
    if (!is_array_of_id_arrays(j["layers"]))
        violate("schema", "layers must be a list of vertex lists");
    if (!is_array_of_id_arrays(j["quotient_edges"])
        || !std::all_of(j["quotient_edges"].begin(), j["quotient_edges"].end(),
                        [](const ordered_json& e) { return e.size() == 2; }))
        violate("schema", "quotient_edges must be a list of pairs");
    if (!j["map"].is_object()
        || !std::all_of(j["map"].begin(), j["map"].end(),
                        [](const ordered_json& c) { return is_id_array(c) && c.size() == 2; }))
        violate("schema", "map must send vertices to [part, layer] pairs");
    if (!j["checks"].is_object())
        violate("schema", "checks must be an object");
    if (!report.ok())
        return report;

    const Graph& graph = g.graph();
    const auto parts = to_lists(j["parts"]);
    const auto layers = to_lists(j["layers"]);

    if (j["mode"] != "semistrong")
        violate("mode", "mode must be \"semistrong\"");

    // Partition of V(G).
    std::map<VertexId, std::size_t> part_of;
    bool partition_ok = true;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) {
            violate("partition", "part " + std::to_string(p) + " is empty");
            partition_ok = false;
        }
        for (VertexId v : parts[p]) {
            if (!graph.has_vertex(v)) {
                violate("partition", "part " + std::to_string(p) + " has unknown vertex " + std::to_string(v));
                partition_ok = false;
            } else if (!part_of.emplace(v, p).second) {
                violate("partition", "vertex " + std::to_string(v) + " lies in two parts");
                partition_ok = false;
            }
        }
    }
    if (part_of.size() != graph.num_vertices()) {
        violate("partition", "parts do not cover every vertex");
        partition_ok = false;
    }

    // Layering of G.
    std::map<VertexId, std::size_t> layer_of;
    bool layering_ok = true;
    for (std::size_t i = 0; i < layers.size(); ++i)
        for (VertexId v : layers[i]) {
            if (!graph.has_vertex(v) || !layer_of.emplace(v, i).second) {
                violate("layering", "vertex " + std::to_string(v) + " is unknown or lies in two layers");
                layering_ok = false;
            }
        }
    if (layer_of.size() != graph.num_vertices()) {
        violate("layering", "layers do not cover every vertex");
        layering_ok = false;
    }
    if (layering_ok)
        for (const auto& [u, v] : graph.edges()) {
            std::size_t a = layer_of[u], b = layer_of[v];
            if ((a > b ? a - b : b - a) > 1)
                violate("layering", "edge " + std::to_string(u) + "-" + std::to_string(v) + " skips a layer");
        }
    Layering layering = Layering::from_layer_map(layer_of);
    layering.layers = layers;

    if (layering_ok)
        for (std::size_t i = 0; i < layers.size(); ++i)
            if (!is_independent_layer(graph, layers[i]))
                violate("layers_independent", "layer " + std::to_string(i) + " contains an edge");

    // Map agrees with parts and layers.
    ProductEmbedding emb;
    emb.mode = ProductMode::semistrong;
    emb.path_length = layers.empty() ? 0 : layers.size() - 1;
    for (std::size_t p = 0; p < parts.size(); ++p)
        emb.target_h.add_vertex(static_cast<VertexId>(p));
    bool quotient_edges_ok = true;
    for (const auto& e : to_lists(j["quotient_edges"])) {
        const VertexId a = e[0], b = e[1];
        if (a == b || a < 0 || b < 0 || static_cast<std::size_t>(std::max(a, b)) >= parts.size()) {
            violate("quotient", "quotient edge " + std::to_string(a) + "-" + std::to_string(b) + " is invalid");
            quotient_edges_ok = false;
            continue;
        }
        emb.target_h.add_edge(a, b);
    }
    for (const auto& [key, value] : j["map"].items()) {
        VertexId v = 0;
        try {
            std::size_t used = 0;
            v = std::stoll(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        } catch (const std::exception&) {
            violate("map_consistency", "map key \"" + key + "\" is not a vertex id");
            continue;
        }
        if (!graph.has_vertex(v)) {
            violate("map_consistency", "map names unknown vertex " + key);
            continue;
        }
        const VertexId h = value[0].get<VertexId>();
        const VertexId path = value[1].get<VertexId>();
        if (h < 0 || path < 0) {
            violate("map_consistency", "vertex " + key + " has a negative coordinate");
            continue;
        }
        emb.map[v] = ProductCoordinate{h, static_cast<std::size_t>(path), 0};
        auto p = part_of.find(v);
        auto l = layer_of.find(v);
        if (p == part_of.end() || static_cast<std::size_t>(h) != p->second || l == layer_of.end()
            || static_cast<std::size_t>(path) != l->second)
            violate("map_consistency", "map entry of vertex " + key + " disagrees with parts or layers");
    }
    if (emb.map.size() != graph.num_vertices())
        violate("map_consistency", "map does not cover every vertex");

    // Width, vertical paths, deepest vertices.
    std::size_t width = 0;
    bool paths_ok = partition_ok && layering_ok;
    if (partition_ok && layering_ok) {
        const auto lp = verify_layered_partition(graph, parts, layering);
        width = lp.width;
        if (!lp.thin)
            violate("thin", "some part meets a layer in " + std::to_string(lp.width) + " vertices");
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (!is_vertical_path(graph, layering, parts[p])) {
                violate("vertical_paths", "part " + std::to_string(p) + " is not a vertical path root to tip");
                paths_ok = false;
            } else if (!g.outer_vertices().contains(parts[p].back())) {
                violate("deepest_outer", "deepest vertex of part " + std::to_string(p) + " is not outer");
            }
        }
    }

    // Quotient.
    if (partition_ok && quotient_edges_ok) {
        const Graph expected = quotient(graph, parts);
        for (const auto& [a, b] : expected.edges())
            if (!emb.target_h.adjacent(a, b))
                violate("quotient", "missing quotient edge " + std::to_string(a) + "-" + std::to_string(b));
        for (const auto& [a, b] : emb.target_h.edges())
            if (!expected.adjacent(a, b))
                violate("quotient", "quotient edge " + std::to_string(a) + "-" + std::to_string(b)
                                        + " has no edge of G behind it");
    }

    // Embedding into H ⨝ P with the claimed H.
    if (emb.map.size() == graph.num_vertices()) {
        if (auto check = verify_product_embedding(graph, emb); !check)
            violate("semistrong_embedding", check.detail);
    }

    // Outerplanarity of H.
    bool outerplanar_embedding = false;
    std::optional<bool> outerplanar_minor;
    if (partition_ok && paths_ok) {
        outerplanar_embedding = outerplanar_by_contraction(g, parts);
        if (!outerplanar_embedding)
            violate("h_outerplanar_embedding", "contracting the parts leaves a vertex off the outer face");
        try {
            outerplanar_minor = is_outerplanar_abstract(quotient(graph, parts));
            if (!*outerplanar_minor)
                violate("h_outerplanar_minor", "quotient has a K4 or K2,3 minor");
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::SizeGate)
                throw;
        }
    }

    // Claimed verdicts must match what was found.
    const auto& claims = j["checks"];
    auto claim = [&](const char* name, bool actual) {
        if (!claims.contains(name) || !claims[name].is_boolean())
            violate("claimed_checks", std::string("check ") + name + " is missing");
        else if (claims[name].get<bool>() != actual)
            violate("claimed_checks", std::string("claimed ") + name + " does not hold");
    };
    const bool all_parts = partition_ok && layering_ok;
    if (!claims.contains("width") || !claims["width"].is_number_integer()
        || (all_parts && claims["width"].get<std::size_t>() != width))
        violate("claimed_checks", "claimed width does not match");
    claim("thin", all_parts && width <= 1);
    claim("layers_independent", !report.failed("layers_independent") && layering_ok);
    claim("vertical_paths", paths_ok);
    claim("deepest_outer", paths_ok && !report.failed("deepest_outer"));
    claim("semistrong_embedding", !report.failed("semistrong_embedding") && emb.map.size() == graph.num_vertices());
    claim("h_outerplanar_embedding", outerplanar_embedding);
    if (!claims.contains("h_outerplanar_minor"))
        violate("claimed_checks", "check h_outerplanar_minor is missing");
    else if (outerplanar_minor && claims["h_outerplanar_minor"] != *outerplanar_minor)
        violate("claimed_checks", "claimed h_outerplanar_minor does not hold");
    return report;
}

}  // namespace squareprod
