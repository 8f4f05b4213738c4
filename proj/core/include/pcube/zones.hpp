#ifndef PCUBE_ZONES_HPP
#define PCUBE_ZONES_HPP

#include <map>
#include <utility>
#include <vector>

#include "pcube/bits.hpp"
#include "pcube/graph.hpp"
#include "pcube/partial_cube.hpp"

namespace pcube {

// Zone graph of class f: one vertex per E_f edge, adjacent when the two
// edges lie on a common convex cycle (equivalently, when the hull of their
// four endpoints induces a cycle).
struct ZoneResult {
    Graph graph;
    // zone vertex i is this E_f edge of the host (lexicographic order)
    std::vector<std::pair<int, int>> zone_vertices;
    // per zone edge, the host classes (other than f) crossing its cycle
    std::vector<CoordSet> edge_crossings;
    bool well_embedded = false;
    // host class -> zone class, defined when well_embedded and the zone
    // graph could be embedded
    std::map<int, int> class_partition;
};

ZoneResult zone_graph(const PartialCube& pc, int f);

// True iff every zone graph is a well-embedded partial cube, recursively.
// Memoized on canonical keys (the predicate is isomorphism-invariant).
bool iterated_zone_check(const PartialCube& pc);

}  // namespace pcube

#endif
