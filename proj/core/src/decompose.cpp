#include "squareprod/decompose.hpp"

#include <algorithm>
#include <set>

#include "squareprod/recognize.hpp"

namespace squareprod {

SaturatingMatching leftmost_matching(const LeveledEmbedding& e, std::size_t i)
{
    if (i == 0 || i >= e.levels.size())
        throw Error(ErrorKind::InvalidArgument, "matching index " + std::to_string(i) + " out of range");
    const auto inner = inner_vertices(e.base);
    SaturatingMatching m{i, {}};
    std::set<VertexId> taken;
    for (VertexId v : e.levels[i - 1]) {
        if (!inner.contains(v))
            continue;
        std::optional<VertexId> leftmost;
        for (VertexId w : e.base.graph().neighbours(v))
            if (e.level.at(w) == i && (!leftmost || e.rank.at(w) < e.rank.at(*leftmost)))
                leftmost = w;
        if (!leftmost)
            throw Error(ErrorKind::DownDegreeZero, "inner vertex " + std::to_string(v) + " has no neighbour below", v);
        if (!taken.insert(*leftmost).second)
            throw Error(ErrorKind::MatchingClash,
                        "vertex " + std::to_string(*leftmost) + " is the leftmost choice of two inner vertices",
                        *leftmost);
        m.edges.emplace_back(v, *leftmost);
    }
    return m;
}

std::vector<SaturatingMatching> leftmost_matchings(const LeveledEmbedding& e)
{
    std::vector<SaturatingMatching> out;
    for (std::size_t i = 1; i < e.levels.size(); ++i)
        out.push_back(leftmost_matching(e, i));
    return out;
}

namespace {

std::map<VertexId, std::size_t> index_parts(const Graph& g, const std::vector<std::vector<VertexId>>& parts)
{
    std::map<VertexId, std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (VertexId v : parts[p]) {
            if (!g.has_vertex(v))
                throw Error(ErrorKind::InvalidArgument, "part contains unknown vertex " + std::to_string(v), v);
            if (!part_of.emplace(v, p).second)
                throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " lies in two parts", v);
        }
    if (part_of.size() != g.num_vertices())
        throw Error(ErrorKind::InvalidArgument, "parts do not cover every vertex");
    return part_of;
}

}  // namespace

Graph quotient(const Graph& g, const std::vector<std::vector<VertexId>>& parts)
{
    const auto part_of = index_parts(g, parts);
    Graph h;
    for (std::size_t p = 0; p < parts.size(); ++p)
        h.add_vertex(static_cast<VertexId>(p));
    for (const auto& [u, v] : g.edges()) {
        std::size_t a = part_of.at(u), b = part_of.at(v);
        if (a != b)
            h.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    return h;
}

Graph sub_quotient(const Graph& g, const std::vector<std::vector<VertexId>>& parts, const Graph& j)
{
    if (!is_subgraph(j, g))
        throw Error(ErrorKind::InvalidArgument, "J is not a subgraph of G");
    const auto part_of = index_parts(g, parts);
    Graph h;
    for (VertexId v : j.vertices())
        h.add_vertex(static_cast<VertexId>(part_of.at(v)));
    for (const auto& [u, v] : j.edges()) {
        std::size_t a = part_of.at(u), b = part_of.at(v);
        if (a != b)
            h.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    return h;
}

LayeredPartitionReport verify_layered_partition(const Graph& g, const std::vector<std::vector<VertexId>>& parts,
                                                const Layering& layering)
{
    LayeredPartitionReport report;
    for (const auto& part : parts) {
        std::map<std::size_t, std::size_t> per_layer;
        for (VertexId v : part)
            report.width = std::max(report.width, ++per_layer[layering.layer_of.at(v)]);
    }
    report.thin = report.width <= 1;
    report.layers_independent = std::all_of(layering.layers.begin(), layering.layers.end(),
                                            [&](const auto& layer) { return is_independent_layer(g, layer); });
    return report;
}

bool is_vertical_path(const Graph& g, const Layering& layering, const std::vector<VertexId>& part)
{
    for (std::size_t k = 1; k < part.size(); ++k) {
        auto a = layering.layer_of.find(part[k - 1]);
        auto b = layering.layer_of.find(part[k]);
        if (a == layering.layer_of.end() || b == layering.layer_of.end() || b->second != a->second + 1
            || !g.adjacent(part[k - 1], part[k]))
            return false;
    }
    return true;
}

HPartition vertical_path_partition(const LeveledEmbedding& e, const std::vector<SaturatingMatching>& matchings)
{
    const Graph& g = e.base.graph();
    std::map<VertexId, VertexId> child, parent;
    for (const auto& m : matchings)
        for (const auto& [up, down] : m.edges) {
            if (!g.adjacent(up, down) || e.level.at(up) + 1 != e.level.at(down))
                throw Error(ErrorKind::Invariant, "matching edge does not join consecutive levels", up);
            if (!child.emplace(up, down).second || !parent.emplace(down, up).second)
                throw Error(ErrorKind::Invariant, "matchings give a vertex two children or two parents", up);
        }

    std::vector<std::vector<VertexId>> parts;
    for (VertexId v : g.vertices()) {
        if (parent.contains(v))
            continue;
        std::vector<VertexId> path{v};
        for (auto it = child.find(v); it != child.end(); it = child.find(it->second))
            path.push_back(it->second);
        parts.push_back(std::move(path));
    }
    // Roots are visited in ascending id order, but the smallest vertex of a
    // part need not be its root.
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });

    const Layering layering = e.layering();
    const auto& outer = e.base.outer_vertices();
    for (const auto& part : parts) {
        if (!is_vertical_path(g, layering, part))
            throw Error(ErrorKind::Invariant, "part is not a vertical path", part.front());
        if (!outer.contains(part.back()))
            throw Error(ErrorKind::Invariant,
                        "deepest vertex " + std::to_string(part.back()) + " of its part is not outer", part.back());
    }

    HPartition out;
    out.parts = std::move(parts);
    out.part_of = index_parts(g, out.parts);
    out.quotient = quotient(g, out.parts);
    return out;
}

EmbeddingCheck verify_product_embedding(const Graph& g, const ProductEmbedding& emb)
{
    EmbeddingCheck check;
    std::map<ProductCoordinate, VertexId> seen;
    for (VertexId v : g.vertices()) {
        auto it = emb.map.find(v);
        if (it == emb.map.end()) {
            check.ok = false;
            check.detail = "vertex " + std::to_string(v) + " is not mapped";
            return check;
        }
        const ProductCoordinate& c = it->second;
        if (!emb.target_h.has_vertex(c.h) || c.path > emb.path_length) {
            check.ok = false;
            check.detail = "vertex " + std::to_string(v) + " maps outside the product";
            return check;
        }
        auto [prev, inserted] = seen.emplace(c, v);
        if (!inserted) {
            check.ok = false;
            check.collision = std::make_pair(prev->second, v);
            check.detail = "vertices " + std::to_string(prev->second) + " and " + std::to_string(v)
                         + " map to the same product vertex";
            return check;
        }
    }
    for (const auto& [u, v] : g.edges()) {
        const ProductCoordinate& a = emb.map.at(u);
        const ProductCoordinate& b = emb.map.at(v);
        const bool first_equal = a.h == b.h && a.copy == b.copy;
        const bool first_adjacent = emb.target_h.adjacent(a.h, b.h) || (a.h == b.h && a.copy != b.copy);
        const bool second_equal = a.path == b.path;
        const bool second_adjacent = a.path + 1 == b.path || b.path + 1 == a.path;
        if (!product_adjacent(emb.mode, first_equal, first_adjacent, second_equal, second_adjacent)) {
            check.ok = false;
            check.violated_edge = Edge{u, v};
            check.detail = "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge of the "
                         + to_string(emb.mode) + " product";
            return check;
        }
    }
    return check;
}

namespace {

// Rotation system over darts so that contraction can create parallel edges.
// Dart d runs tail[d] -> tail[d ^ 1].
struct DartSystem {
    std::vector<VertexId> tail;
    std::vector<char> alive;
    std::map<VertexId, std::vector<int>> rot;
    std::map<std::pair<VertexId, VertexId>, int> id;

    explicit DartSystem(const PlaneGraph& g)
    {
        for (const auto& [u, v] : g.graph().edges()) {
            id[{u, v}] = static_cast<int>(tail.size());
            tail.push_back(u);
            id[{v, u}] = static_cast<int>(tail.size());
            tail.push_back(v);
        }
        alive.assign(tail.size(), 1);
        for (const auto& [v, nbrs] : g.rotations()) {
            auto& r = rot[v];
            for (VertexId w : nbrs)
                r.push_back(id.at({v, w}));
        }
    }

    VertexId head(int d) const { return tail[d ^ 1]; }

    int next_in_face(int d) const
    {
        const auto& r = rot.at(head(d));
        auto pos = std::find(r.begin(), r.end(), d ^ 1) - r.begin();
        return r[(pos + r.size() - 1) % r.size()];
    }

    // Merges v into u along the dart d = u -> v.
    void contract(int d)
    {
        const VertexId u = tail[d], v = head(d);
        auto& ru = rot.at(u);
        const auto& rv = rot.at(v);
        auto p = std::find(ru.begin(), ru.end(), d) - ru.begin();
        auto q = std::find(rv.begin(), rv.end(), d ^ 1) - rv.begin();
        std::vector<int> merged(ru.begin(), ru.begin() + p);
        merged.insert(merged.end(), rv.begin() + q + 1, rv.end());
        merged.insert(merged.end(), rv.begin(), rv.begin() + q);
        merged.insert(merged.end(), ru.begin() + p + 1, ru.end());
        for (int x : rv)
            tail[x] = u;
        alive[d] = alive[d ^ 1] = 0;
        ru = std::move(merged);
        rot.erase(v);
    }
};

}  // namespace

bool outerplanar_by_contraction(const PlaneGraph& g, const std::vector<std::vector<VertexId>>& parts)
{
    DartSystem ds(g);
    for (const auto& part : parts)
        for (std::size_t k = part.size(); k-- > 1;) {
            const VertexId u = part[k - 1];
            int dart = -1;
            for (int d : ds.rot.at(u))
                if (ds.head(d) == part[k]) {
                    dart = d;
                    break;
                }
            if (dart < 0)
                throw Error(ErrorKind::InvalidArgument, "part is not a path in the graph", u);
            ds.contract(dart);
        }

    // Face id of every surviving dart.
    std::vector<int> face_of(ds.tail.size(), -1);
    std::vector<std::set<VertexId>> face_vertices;
    for (int d = 0; d < static_cast<int>(ds.tail.size()); ++d) {
        if (!ds.alive[d] || face_of[d] >= 0)
            continue;
        const int f = static_cast<int>(face_vertices.size());
        face_vertices.emplace_back();
        for (int x = d; face_of[x] < 0; x = ds.next_in_face(x)) {
            face_of[x] = f;
            face_vertices[f].insert(ds.tail[x]);
        }
    }

    // Components of the contracted graph, by surviving vertex.
    Graph contracted;
    for (const auto& [v, _] : ds.rot)
        contracted.add_vertex(v);
    for (int d = 0; d < static_cast<int>(ds.tail.size()); d += 2)
        if (ds.alive[d] && ds.tail[d] != ds.head(d))
            contracted.add_edge(ds.tail[d], ds.head(d));

    for (const auto& component : connected_components(contracted)) {
        if (component.size() == 1)
            continue;
        std::optional<int> outer;
        for (const FaceWalk& face : g.faces()) {
            if (!face.is_outer)
                continue;
            for (const Dart& dart : face.boundary) {
                int d = ds.id.at({dart.tail, dart.head});
                if (!ds.alive[d])
                    continue;
                if (!std::binary_search(component.begin(), component.end(), ds.tail[d]))
                    break;
                if (outer && *outer != face_of[d])
                    return false;
                outer = face_of[d];
            }
        }
        if (!outer)
            return false;
        for (VertexId v : component)
            if (!face_vertices[*outer].contains(v))
                return false;
    }
    return true;
}

bool DecompositionChecks::all() const
{
    return thin && layers_independent && vertical_paths && deepest_outer && semistrong_embedding
        && h_outerplanar_embedding && h_outerplanar_minor.value_or(true);
}

Decomposition decompose_squaregraph(const PlaneGraph& g, std::optional<VertexId> root)
{
    if (auto verdict = is_squaregraph(g); !verdict)
        throw Error(ErrorKind::NotSquaregraph, verdict.describe());
    if (root) {
        if (!g.graph().has_vertex(*root))
            throw Error(ErrorKind::UnknownVertex, "root " + std::to_string(*root) + " not in graph", *root);
        if (!g.outer_vertices().contains(*root))
            throw Error(ErrorKind::RootNotOuter, "root " + std::to_string(*root) + " is not an outer vertex", *root);
    }

    Decomposition out;
    std::map<VertexId, std::size_t> layer_of;
    std::vector<std::vector<VertexId>> parts;
    for (const auto& component : connected_components(g.graph())) {
        const PlaneGraph piece = g.restricted_to(component);
        VertexId r = root && std::binary_search(component.begin(), component.end(), *root)
                       ? *root
                       : default_root(piece);
        LeveledEmbedding e = leveled_embedding(piece, r);
        max_inner_up_degree(e);
        auto matchings = leftmost_matchings(e);
        HPartition hp = vertical_path_partition(e, matchings);
        for (const auto& [v, i] : e.level)
            layer_of[v] = i;
        parts.insert(parts.end(), hp.parts.begin(), hp.parts.end());
        out.roots.push_back(r);
        out.embeddings.push_back(std::move(e));
        out.matchings.push_back(std::move(matchings));
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });

    const Graph& graph = g.graph();
    out.partition.parts = std::move(parts);
    out.partition.part_of = index_parts(graph, out.partition.parts);
    out.partition.quotient = quotient(graph, out.partition.parts);
    out.layering = Layering::from_layer_map(layer_of);

    out.embedding.mode = ProductMode::semistrong;
    out.embedding.target_h = out.partition.quotient;
    out.embedding.path_length = out.layering.size() == 0 ? 0 : out.layering.size() - 1;
    for (const auto& [v, p] : out.partition.part_of)
        out.embedding.map[v] = ProductCoordinate{static_cast<VertexId>(p), layer_of.at(v), 0};

    auto& checks = out.checks;
    const auto report = verify_layered_partition(graph, out.partition.parts, out.layering);
    checks.width = report.width;
    checks.thin = report.thin;
    checks.layers_independent = report.layers_independent;
    checks.vertical_paths = std::all_of(out.partition.parts.begin(), out.partition.parts.end(),
                                        [&](const auto& part) { return is_vertical_path(graph, out.layering, part); });
    checks.deepest_outer = std::all_of(out.partition.parts.begin(), out.partition.parts.end(),
                                       [&](const auto& part) { return g.outer_vertices().contains(part.back()); });
    checks.semistrong_embedding = static_cast<bool>(verify_product_embedding(graph, out.embedding));
    checks.h_outerplanar_embedding = outerplanar_by_contraction(g, out.partition.parts);
    try {
        checks.h_outerplanar_minor = is_outerplanar_abstract(out.partition.quotient);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::SizeGate)
            throw;
    }
    if (!checks.all())
        throw Error(ErrorKind::Invariant, "decomposition failed its own verification");
    return out;
}

}  // namespace squareprod
