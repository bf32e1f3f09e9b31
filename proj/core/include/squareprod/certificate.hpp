#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "squareprod/decompose.hpp"
#include "squareprod/plane_graph.hpp"

namespace squareprod {

/// Certificate JSON with fields in the order parts, layers, quotient_edges,
/// map, mode, checks. Part i is parts[i]; map[v] = [part, layer].
std::string certificate_json(const Decomposition& d);

struct Violation {
    std::string check;
    std::string detail;
};

struct CertificateReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool failed(std::string_view check) const;
};

/// Re-derives every claim of a certificate from the graph alone: the parts
/// partition V(G) into vertical paths, the layers form a layering with
/// independent layers, the map agrees with both, the quotient edges are
/// exactly G's quotient, the map embeds G in H ⨝ P, and H is outerplanar.
/// Every violation found is reported under the name of its check.
CertificateReport verify_certificate(const PlaneGraph& g, std::string_view certificate);

}  // namespace squareprod
