#ifndef PCUBE_BRIDGE_HPP
#define PCUBE_BRIDGE_HPP

#include <vector>

#include "pcube/partial_cube.hpp"
#include "pcube/sign_system.hpp"

namespace pcube {

struct TopeGraphResult {
    PartialCube pc;  // vertices are the topes of the simplified system
    // pc class f corresponds to the f-th kept coordinate; its original
    // parallel class is coordinate_classes[f].
    std::vector<std::vector<int>> coordinate_classes;
};

// Simplify, collect the full-support vectors, build the graph on
// Hamming-distance-1 tope pairs and validate the partial cube system
// condition (isometric in the coordinate cube; every edge's one-zero
// midpoint vector belongs to the system). Throws NoTopes or
// NotPartialCubeSystem.
TopeGraphResult tope_graph(const SignSystem& l);

// Covectors L(G) of an embedded partial cube, computed two ways and
// cross-asserted before returning:
//   (a) all X with X o (-T) a vertex for every vertex T;
//   (b) signatures of the antipodal gated subgraphs.
// A mismatch would contradict the dictionary theorem and throws
// InternalMismatch.
SignSystem covectors_of(const PartialCube& pc);

// Canonical form for comparing systems up to reorientation: reorient so the
// lexicographically smallest tope is all-plus, then sort.
SignSystem canonicalize_reorientation(const SignSystem& l);

}  // namespace pcube

#endif
