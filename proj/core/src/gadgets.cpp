#include "squareprod/gadgets.hpp"

#include <json.hpp>

namespace squareprod {

namespace {

struct Coloured {
    Graph graph;
    std::map<VertexId, Colour> colour;
    VertexId apex = 0;
};

Colour other(Colour c)
{
    return c == Colour::red ? Colour::blue : Colour::red;
}

// `copies` disjoint copies of g in consecutive id blocks, then an apex of
// colour `apex_colour` adjacent to every copied vertex of the other colour.
Coloured coloured_step(const Coloured& g, std::size_t copies, Colour apex_colour)
{
    Coloured out;
    const auto n = static_cast<VertexId>(g.graph.num_vertices());
    for (std::size_t c = 0; c < copies; ++c) {
        const VertexId offset = static_cast<VertexId>(c) * n;
        for (VertexId v : g.graph.vertices()) {
            out.graph.add_vertex(v + offset);
            out.colour[v + offset] = g.colour.at(v);
        }
        for (const auto& [u, v] : g.graph.edges())
            out.graph.add_edge(u + offset, v + offset);
    }
    out.apex = static_cast<VertexId>(copies) * n;
    out.graph.add_vertex(out.apex);
    out.colour[out.apex] = apex_colour;
    for (const auto& [v, c] : out.colour)
        if (c != apex_colour)
            out.graph.add_edge(out.apex, v);
    return out;
}

Coloured coloured_base(std::size_t nprime)
{
    Coloured out;
    out.graph = path_graph(nprime);
    for (std::size_t v = 0; v < nprime; ++v)
        out.colour[static_cast<VertexId>(v)] = v % 2 == 0 ? Colour::red : Colour::blue;
    out.apex = static_cast<VertexId>(nprime);
    out.graph.add_vertex(out.apex);
    out.colour[out.apex] = Colour::red;
    for (std::size_t v = 1; v < nprime; v += 2)
        out.graph.add_edge(out.apex, static_cast<VertexId>(v));
    return out;
}

}  // namespace

Gadget gadget_plain(std::size_t k, std::size_t ell, std::size_t nprime)
{
    if (k < 1 || ell < 1 || nprime < 1)
        throw Error(ErrorKind::InvalidArgument, "gadget_plain needs k, l, n' >= 1");
    Graph g = path_graph(nprime);
    VertexId apex = static_cast<VertexId>(nprime);
    g.add_vertex(apex);
    for (std::size_t v = 0; v < nprime; ++v)
        g.add_edge(apex, static_cast<VertexId>(v));
    for (std::size_t level = 2; level <= k; ++level) {
        Graph next;
        const auto n = static_cast<VertexId>(g.num_vertices());
        for (std::size_t c = 0; c < 3 * ell; ++c) {
            const VertexId offset = static_cast<VertexId>(c) * n;
            for (VertexId v : g.vertices())
                next.add_vertex(v + offset);
            for (const auto& [u, v] : g.edges())
                next.add_edge(u + offset, v + offset);
        }
        apex = static_cast<VertexId>(3 * ell) * n;
        for (VertexId v = 0; v < apex; ++v)
            next.add_edge(apex, v);
        g = std::move(next);
    }
    Gadget out;
    out.spec = GadgetSpec{GadgetSpec::Kind::plain, k, 0, 0, ell, nprime};
    out.graph = std::move(g);
    out.apex = apex;
    return out;
}

Gadget gadget_bipartite(std::size_t i, std::size_t j, std::size_t ell, std::size_t nprime)
{
    if (i + j < 1 || ell < 1 || nprime < 2)
        throw Error(ErrorKind::InvalidArgument, "gadget_bipartite needs i + j >= 1, l >= 1, n' >= 2");
    Coloured g = coloured_base(nprime);
    std::size_t red_steps = i;
    if (j == 0) {
        red_steps = i - 1;
    } else {
        for (auto& [_, c] : g.colour)
            c = other(c);
        for (std::size_t step = 1; step < j; ++step)
            g = coloured_step(g, 5 * ell, Colour::blue);
    }
    for (std::size_t step = 0; step < red_steps; ++step)
        g = coloured_step(g, 5 * ell, Colour::red);

    Gadget out;
    out.spec = GadgetSpec{GadgetSpec::Kind::bipartite, i + j, i, j, ell, nprime};
    out.graph = std::move(g.graph);
    out.apex = g.apex;
    out.colouring = std::move(g.colour);
    return out;
}

PlaneGraph bipartite_base_embedding(std::size_t nprime)
{
    if (nprime < 2)
        throw Error(ErrorKind::InvalidArgument, "bipartite gadget base needs n' >= 2");
    const Coloured base = coloured_base(nprime);
    std::map<VertexId, std::pair<double, double>> coords;
    for (std::size_t v = 0; v < nprime; ++v)
        coords[static_cast<VertexId>(v)] = {static_cast<double>(v), 0.0};
    coords[base.apex] = {static_cast<double>(nprime - 1) / 2.0, 1.0};
    return plane_graph_from_drawing(coords, base.graph.edges());
}

std::size_t forcing_path_length(std::size_t a, std::size_t m)
{
    return (a + 1) * a * m + a;
}

std::string Gadget::metadata_json() const
{
    nlohmann::ordered_json j;
    const bool plain = spec.kind == GadgetSpec::Kind::plain;
    j["kind"] = plain ? "plain" : "bipartite";
    nlohmann::ordered_json params;
    if (plain) {
        params["k"] = spec.k;
    } else {
        params["i"] = spec.i;
        params["j"] = spec.j;
    }
    params["ell"] = spec.ell;
    params["nprime"] = spec.nprime;
    params["vertices"] = graph.num_vertices();
    params["edges"] = graph.num_edges();
    j["params"] = params;
    j["apex_id"] = apex;
    if (plain) {
        j["colouring"] = nullptr;
    } else {
        nlohmann::ordered_json colours = nlohmann::ordered_json::object();
        for (const auto& [v, c] : colouring)
            colours[std::to_string(v)] = to_string(c);
        j["colouring"] = colours;
    }
    return j.dump(2);
}

std::string forest_quotient_report_json(const std::string& instance, std::size_t gate,
                                        const ForestQuotientResult& result, double wall_time_ms)
{
    nlohmann::ordered_json j;
    j["instance"] = instance;
    j["gate"] = gate;
    j["outcome"] = result.sat ? "SAT" : "UNSAT";
    if (result.witness) {
        nlohmann::ordered_json w;
        w["parts"] = result.witness->parts;
        w["layers"] = result.witness->layering.layers;
        w["quotient_edges"] = result.witness->quotient.edges();
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["nodes_explored"] = result.nodes_explored;
    j["wall_time_ms"] = wall_time_ms;
    return j.dump(2);
}

}  // namespace squareprod
