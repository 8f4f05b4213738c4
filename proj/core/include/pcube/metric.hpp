#ifndef PCUBE_METRIC_HPP
#define PCUBE_METRIC_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pcube/partial_cube.hpp"
#include "pcube/sign_vector.hpp"

namespace pcube {

// Convex hull = intersection of all halfspaces containing S. Throws EmptySet.
VertexSet convex_hull(const PartialCube& pc, const VertexSet& s);

bool is_convex(const PartialCube& pc, const VertexSet& s);

// Classes crossing the convex set S (both sides meet S).
CoordSet crossing_classes(const PartialCube& pc, const VertexSet& s);

// Sign vector X(S) of a convex set: + / - where S lies inside a halfspace,
// 0 on crossing classes. Throws NotConvex.
SignVec signature(const PartialCube& pc, const VertexSet& s);

// The unique y in S with conv(x,y) = S, if any. S must be convex, x in S.
std::optional<int> antipode(const PartialCube& pc, const VertexSet& s, int x);

// Antipode with respect to the whole graph.
std::optional<int> global_antipode(const PartialCube& pc, int x);

// True iff S is convex and every vertex of S has an antipode in S.
// Non-convex input yields false (antipodal subgraphs are convex).
bool is_antipodal(const PartialCube& pc, const VertexSet& s);

// All distinct antipodal subgraphs, enumerated as conv(u,v) over vertex
// pairs in scan order (complete: an antipodal S equals conv(x, -x)).
std::vector<VertexSet> antipodal_subgraphs(const PartialCube& pc);

// Gate of x in convex S via composition: the vertex with coordinates
// X(S) o X(x), when present. Throws NotConvex.
std::optional<int> gate(const PartialCube& pc, const VertexSet& s, int x);

// True iff every vertex has a gate in S. Throws NotConvex on non-convex S.
bool is_gated(const PartialCube& pc, const VertexSet& s);

struct AffinityCertificate {
    // (u,v) -> chosen global antipodal pair (w, -w) with conv(u,w) and
    // conv(v,-w) crossed by disjoint class sets. Keyed by ordered pair.
    std::map<std::pair<int, int>, std::pair<int, int>> pair_witness;
    // NA: vertex pairs whose interval is a proper subset of the graph.
    std::vector<std::pair<int, int>> na_pairs;
};

// Intrinsic test for being a halfspace of an antipodal partial cube.
std::optional<AffinityCertificate> is_affine(const PartialCube& pc);

// Doubles an affine graph into an antipodal one: disjoint copy, plus an edge
// w -- (-w)' for every global antipodal pair. Throws NotAffine.
PartialCube antipodal_extension(const PartialCube& pc);

// Affine subgraphs S = conv(u,v) such that for every x in S, x has an
// antipode in S iff it has one in the whole graph. Host must be affine.
std::vector<VertexSet> conformal_subgraphs(const PartialCube& pc);

}  // namespace pcube

#endif
