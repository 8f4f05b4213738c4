#ifndef PCUBE_CANONICAL_HPP
#define PCUBE_CANONICAL_HPP

#include <string>
#include <vector>

#include "pcube/bits.hpp"
#include "pcube/partial_cube.hpp"

namespace pcube {

// Canonical key of a coordinate set under the symmetries of the hypercube
// (coordinate permutations and reorientations). Partial cubes embed uniquely
// up to these symmetries, so two embedded graphs get equal keys iff they are
// isomorphic as graphs. Refinement (vertex and column invariants) narrows the
// search; ties are resolved by branch and bound over column orders.
std::string canonical_key_of_coords(int k, const std::vector<CoordSet>& coords);

std::string canonical_key(const PartialCube& pc);

bool isomorphic(const PartialCube& a, const PartialCube& b);

}  // namespace pcube

#endif
