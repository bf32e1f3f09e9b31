#include "squareprod/products.hpp"

namespace squareprod {

const char* to_string(ProductMode mode)
{
    switch (mode) {
    case ProductMode::cartesian: return "cartesian";
    case ProductMode::direct: return "direct";
    case ProductMode::strong: return "strong";
    case ProductMode::semistrong: return "semistrong";
    }
    return "?";
}

std::optional<ProductMode> parse_product_mode(std::string_view name)
{
    for (ProductMode m : {ProductMode::cartesian, ProductMode::direct, ProductMode::strong, ProductMode::semistrong})
        if (name == to_string(m))
            return m;
    return std::nullopt;
}

PairGraph product(const Graph& g, const Graph& h, ProductMode mode)
{
    PairGraph out;
    const auto gv = g.vertices();
    const auto hv = h.vertices();
    for (VertexId a : gv)
        for (VertexId b : hv)
            out.add_vertex({a, b});
    // Only pairs drawn from closed neighbourhoods can be adjacent.
    for (VertexId a : gv)
        for (VertexId b : hv) {
            std::vector<VertexId> gs{a}, hs{b};
            gs.insert(gs.end(), g.neighbours(a).begin(), g.neighbours(a).end());
            hs.insert(hs.end(), h.neighbours(b).begin(), h.neighbours(b).end());
            for (VertexId c : gs)
                for (VertexId d : hs)
                    if (PairVertex{a, b} < PairVertex{c, d}
                        && product_adjacent(mode, a == c, a != c, b == d, b != d))
                        out.add_edge({a, b}, {c, d});
        }
    return out;
}

std::size_t ProductCounts::edges(ProductMode mode) const
{
    switch (mode) {
    case ProductMode::cartesian: return cartesian;
    case ProductMode::direct: return direct;
    case ProductMode::strong: return strong;
    case ProductMode::semistrong: return semistrong;
    }
    return 0;
}

ProductCounts edge_counts(const Graph& g, const Graph& h)
{
    const std::size_t vg = g.num_vertices(), eg = g.num_edges();
    const std::size_t vh = h.num_vertices(), eh = h.num_edges();
    ProductCounts c;
    c.vertices = vg * vh;
    c.cartesian = vg * eh + vh * eg;
    c.direct = 2 * eg * eh;
    c.strong = c.cartesian + c.direct;
    c.semistrong = vg * eh + 2 * eg * eh;
    return c;
}

}  // namespace squareprod
