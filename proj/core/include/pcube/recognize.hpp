#ifndef PCUBE_RECOGNIZE_HPP
#define PCUBE_RECOGNIZE_HPP

#include <optional>
#include <utility>

#include "pcube/metric.hpp"
#include "pcube/minors.hpp"
#include "pcube/partial_cube.hpp"

namespace pcube {

struct NonGatedCertificate {
    VertexSet subgraph;  // antipodal but not gated
    int vertex = -1;     // lowest-index vertex without a gate
};

struct ClassificationReport {
    bool is_partial_cube = true;
    bool is_com = false;
    bool is_om = false;
    bool is_aom = false;
    bool is_lop = false;
    int rank = 0;
    std::optional<NonGatedCertificate> certificate;  // set when !is_com
};

// COM:  every antipodal subgraph is gated.
// OM:   COM and the whole graph is antipodal.
// LOP:  COM and every antipodal subgraph is a hypercube (|S| = 2^d).
// AOM:  COM, affine, and every conformal subgraph is gated.
ClassificationReport classify_graph(const PartialCube& pc);

// Zone-graph route; must agree with classify_graph().is_com.
bool is_com_via_zones(const PartialCube& pc);

struct BoundedRankResult {
    bool member = false;
    int excluded_index = -1;  // which family member was found, when !member
    std::optional<MinorWitness> witness;
};

// Excluded-minor route for rank <= r (r >= 3).
BoundedRankResult is_com_bounded_rank(const PartialCube& pc, int r);
BoundedRankResult is_lop_bounded_rank(const PartialCube& pc, int r);

// Largest r such that contracting all classes outside some r-subset yields
// Q_r; equivalently the largest class subset on which the vertex coordinates
// hit every sign pattern.
int graph_rank(const PartialCube& pc);

}  // namespace pcube

#endif
