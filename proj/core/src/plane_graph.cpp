#include "squareprod/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "text.hpp"

namespace squareprod {

namespace {

std::size_t position_of(const std::vector<VertexId>& rot, VertexId w)
{
    auto it = std::find(rot.begin(), rot.end(), w);
    return static_cast<std::size_t>(it - rot.begin());
}

bool cyclically_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b)
{
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    auto it = std::find(b.begin(), b.end(), a.front());
    if (it == b.end())
        return false;
    std::size_t offset = static_cast<std::size_t>(it - b.begin());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[(offset + i) % b.size()])
            return false;
    return true;
}

}  // namespace

std::vector<VertexId> FaceWalk::vertices() const
{
    std::vector<VertexId> out;
    out.reserve(boundary.size());
    for (const Dart& d : boundary)
        out.push_back(d.tail);
    return out;
}

PlaneGraph::PlaneGraph(Rotation rotation, std::vector<Dart> outer_darts)
    : rotation_(std::move(rotation)), outer_darts_(std::move(outer_darts))
{
    for (const auto& [v, rot] : rotation_) {
        if (v < 0)
            throw Error(ErrorKind::InvalidArgument, "negative vertex id", v);
        graph_.add_vertex(v);
        std::set<VertexId> seen;
        for (VertexId w : rot) {
            if (w == v)
                throw Error(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(v), v);
            if (!rotation_.contains(w))
                throw Error(ErrorKind::UnknownVertex,
                            "vertex " + std::to_string(v) + " lists unknown neighbour " + std::to_string(w), v);
            if (!seen.insert(w).second)
                throw Error(ErrorKind::InvalidArgument,
                            "vertex " + std::to_string(v) + " lists neighbour " + std::to_string(w) + " twice", v);
        }
    }
    for (const auto& [v, rot] : rotation_)
        for (VertexId w : rot) {
            const auto& back = rotation_.at(w);
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw Error(ErrorKind::AsymmetricAdjacency,
                            std::to_string(w) + " appears around " + std::to_string(v) + " but not vice versa", v);
            if (v < w)
                graph_.add_edge(v, w);
        }

    for (const Dart& d : outer_darts_)
        if (!has_dart(d))
            throw Error(ErrorKind::DanglingOuter,
                        "outer edge (" + std::to_string(d.tail) + "," + std::to_string(d.head) + ") does not exist");

    const auto components = connected_components(graph_);
    std::map<VertexId, std::size_t> component_of;
    for (std::size_t c = 0; c < components.size(); ++c)
        for (VertexId v : components[c])
            component_of[v] = c;
    std::vector<int> outer_count(components.size(), 0);
    for (const Dart& d : outer_darts_)
        ++outer_count[component_of[d.tail]];
    for (std::size_t c = 0; c < components.size(); ++c) {
        bool trivial = components[c].size() == 1;
        if (!trivial && outer_count[c] == 0)
            throw Error(ErrorKind::DanglingOuter,
                        "component of vertex " + std::to_string(components[c].front()) + " has no outer edge",
                        components[c].front());
        if (outer_count[c] > 1)
            throw Error(ErrorKind::InvalidArgument,
                        "component of vertex " + std::to_string(components[c].front())
                            + " has more than one outer edge",
                        components[c].front());
    }

    std::set<Dart> outer_set(outer_darts_.begin(), outer_darts_.end());
    std::set<Dart> visited;
    std::vector<std::size_t> face_count(components.size(), 0);
    for (const auto& [v, rot] : rotation_) {
        for (VertexId w : rot) {
            Dart start{v, w};
            if (visited.contains(start))
                continue;
            FaceWalk walk;
            Dart d = start;
            do {
                visited.insert(d);
                walk.boundary.push_back(d);
                if (outer_set.contains(d))
                    walk.is_outer = true;
                d = next_in_face(d);
            } while (d != start);
            ++face_count[component_of[v]];
            faces_.push_back(std::move(walk));
        }
    }

    for (std::size_t c = 0; c < components.size(); ++c) {
        std::size_t n = components[c].size();
        std::size_t m = 0;
        for (VertexId v : components[c])
            m += graph_.degree(v);
        m /= 2;
        std::size_t f = std::max<std::size_t>(face_count[c], 1);
        if (n + f != m + 2)
            throw Error(ErrorKind::NotPlanar,
                        "component of vertex " + std::to_string(components[c].front()) + ": n - m + f = "
                            + std::to_string(static_cast<long long>(n + f) - static_cast<long long>(m))
                            + ", expected 2 (rotation system is not a plane embedding)",
                        components[c].front());
    }

    for (const FaceWalk& face : faces_)
        if (face.is_outer)
            for (const Dart& d : face.boundary)
                outer_vertices_.insert(d.tail);
    for (const auto& [v, rot] : rotation_)
        if (rot.empty())
            outer_vertices_.insert(v);
}

const std::vector<VertexId>& PlaneGraph::rotation(VertexId v) const
{
    auto it = rotation_.find(v);
    if (it == rotation_.end())
        throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " not in graph", v);
    return it->second;
}

std::optional<Dart> PlaneGraph::outer_ref() const
{
    if (outer_darts_.empty())
        return std::nullopt;
    return *std::min_element(outer_darts_.begin(), outer_darts_.end(),
                             [](const Dart& a, const Dart& b) { return std::min(a.tail, a.head) < std::min(b.tail, b.head); });
}

Dart PlaneGraph::next_in_face(Dart d) const
{
    const auto& rot = rotation(d.head);
    std::size_t pos = position_of(rot, d.tail);
    if (pos == rot.size())
        throw Error(ErrorKind::InvalidArgument, "not a dart of this graph");
    return {d.head, rot[(pos + rot.size() - 1) % rot.size()]};
}

PlaneGraph PlaneGraph::restricted_to(const std::vector<VertexId>& vertices) const
{
    std::set<VertexId> keep(vertices.begin(), vertices.end());
    Rotation rot;
    for (VertexId v : keep) {
        const auto& r = rotation(v);
        for (VertexId w : r)
            if (!keep.contains(w))
                throw Error(ErrorKind::InvalidArgument, "restriction must be a union of components", v);
        rot.emplace(v, r);
    }
    std::vector<Dart> outer;
    for (const Dart& d : outer_darts_)
        if (keep.contains(d.tail))
            outer.push_back(d);
    return PlaneGraph(std::move(rot), std::move(outer));
}

bool PlaneGraph::operator==(const PlaneGraph& other) const
{
    if (rotation_.size() != other.rotation_.size())
        return false;
    for (const auto& [v, rot] : rotation_) {
        auto it = other.rotation_.find(v);
        if (it == other.rotation_.end() || !cyclically_equal(rot, it->second))
            return false;
    }
    auto outer_darts_of = [](const PlaneGraph& g) {
        std::set<Dart> out;
        for (const FaceWalk& f : g.faces_)
            if (f.is_outer)
                out.insert(f.boundary.begin(), f.boundary.end());
        return out;
    };
    return outer_darts_of(*this) == outer_darts_of(other);
}

std::vector<FaceWalk> trace_faces(const PlaneGraph& g)
{
    return g.faces();
}

std::set<VertexId> inner_vertices(const PlaneGraph& g)
{
    std::set<VertexId> inner;
    for (VertexId v : g.vertices())
        if (!g.outer_vertices().contains(v))
            inner.insert(v);
    return inner;
}

PlaneGraph parse_plane_graph(std::string_view text)
{
    detail::LineReader reader(text);
    std::optional<std::size_t> declared;
    PlaneGraph::Rotation rotation;
    struct Token {
        VertexId id;
        int line;
        int column;
    };
    std::vector<Token> neighbour_tokens;
    std::vector<Dart> outer;
    std::vector<std::pair<int, int>> outer_positions;

    while (auto line = reader.next()) {
        detail::Tokenizer tok(*line, reader.line_number());
        if (!declared) {
            tok.expect_word("V");
            declared = static_cast<std::size_t>(tok.integer("vertex count"));
            tok.expect_end();
            continue;
        }
        if (tok.peek_word("OUTER")) {
            tok.expect_word("OUTER");
            outer_positions.emplace_back(reader.line_number(), tok.column());
            VertexId u = tok.integer("vertex id");
            VertexId v = tok.integer("vertex id");
            tok.expect_end();
            outer.push_back({u, v});
            continue;
        }
        int id_column = tok.column();
        VertexId v = tok.integer("vertex id");
        tok.expect_char(':');
        if (rotation.contains(v))
            throw ParseError("vertex " + std::to_string(v) + " declared twice", reader.line_number(), id_column);
        std::vector<VertexId> rot;
        while (!tok.at_end()) {
            int column = tok.column();
            rot.push_back(tok.integer("neighbour id"));
            neighbour_tokens.push_back({rot.back(), reader.line_number(), column});
        }
        rotation.emplace(v, std::move(rot));
    }
    if (!declared)
        throw ParseError("missing 'V <n>' header", reader.line_number() + 1, 1);
    if (rotation.size() != *declared)
        throw ParseError("header declares " + std::to_string(*declared) + " vertices but "
                             + std::to_string(rotation.size()) + " are listed",
                         reader.line_number() + 1, 1);
    for (const Token& t : neighbour_tokens)
        if (!rotation.contains(t.id))
            throw ParseError("unknown neighbour id " + std::to_string(t.id), t.line, t.column);
    for (std::size_t i = 0; i < outer.size(); ++i)
        if (!rotation.contains(outer[i].tail) || !rotation.contains(outer[i].head))
            throw Error(ErrorKind::DanglingOuter, "OUTER names an unknown vertex (line "
                                                      + std::to_string(outer_positions[i].first) + ")");
    return PlaneGraph(std::move(rotation), std::move(outer));
}

std::string serialize(const PlaneGraph& g)
{
    std::ostringstream out;
    out << "V " << g.num_vertices() << '\n';
    for (const auto& [v, rot] : g.rotations()) {
        out << v << ':';
        for (VertexId w : rot)
            out << ' ' << w;
        out << '\n';
    }
    for (const Dart& d : g.outer_darts())
        out << "OUTER " << d.tail << ' ' << d.head << '\n';
    return out.str();
}

PlaneGraph plane_graph_from_drawing(const std::map<VertexId, std::pair<double, double>>& coords,
                                    const std::vector<Edge>& edges)
{
    PlaneGraph::Rotation rotation;
    for (const auto& [v, _] : coords)
        rotation[v];
    for (const auto& [u, v] : edges) {
        rotation.at(u).push_back(v);
        rotation.at(v).push_back(u);
    }
    for (auto& [v, rot] : rotation) {
        const auto [x, y] = coords.at(v);
        auto angle = [&](VertexId w) {
            const auto [wx, wy] = coords.at(w);
            return std::atan2(wy - y, wx - x);
        };
        // Clockwise = decreasing angle.
        std::sort(rot.begin(), rot.end(), [&](VertexId a, VertexId b) { return angle(a) > angle(b); });
    }

    // Trace faces without outer darts first, then pick per component the walk
    // of largest signed area: inner faces run clockwise (negative area) under
    // the successor rule, so the outer walk is the maximum.
    Graph g;
    for (const auto& [v, rot] : rotation) {
        g.add_vertex(v);
        for (VertexId w : rot)
            g.add_edge(v, w);
    }
    auto next = [&](Dart d) {
        const auto& rot = rotation.at(d.head);
        std::size_t pos = position_of(rot, d.tail);
        return Dart{d.head, rot[(pos + rot.size() - 1) % rot.size()]};
    };
    std::vector<Dart> outer;
    for (const auto& component : connected_components(g)) {
        if (component.size() < 2)
            continue;
        std::set<Dart> visited;
        std::optional<std::pair<double, Dart>> best;
        for (VertexId v : component)
            for (VertexId w : rotation.at(v)) {
                Dart start{v, w};
                if (visited.contains(start))
                    continue;
                double area = 0;
                Dart d = start;
                do {
                    visited.insert(d);
                    const auto [x1, y1] = coords.at(d.tail);
                    const auto [x2, y2] = coords.at(d.head);
                    area += x1 * y2 - x2 * y1;
                    d = next(d);
                } while (d != start);
                if (!best || area > best->first + 1e-9)
                    best = std::make_pair(area, start);
            }
        outer.push_back(best->second);
    }
    return PlaneGraph(std::move(rotation), std::move(outer));
}

}  // namespace squareprod
