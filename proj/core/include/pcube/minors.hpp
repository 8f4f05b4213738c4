#ifndef PCUBE_MINORS_HPP
#define PCUBE_MINORS_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "pcube/partial_cube.hpp"

namespace pcube {

// pi_f: collapse the matching E_f; coordinate f is dropped.
PartialCube contract(const PartialCube& pc, int f);

// rho_{f^sign}: induced subgraph on one halfspace; coordinate f and any
// class that became one-sided are dropped.
PartialCube restrict_halfspace(const PartialCube& pc, int f, char sign);

// Expansion data: two covering isometric subgraphs of the base graph with
// no edge between v1\v2 and v2\v1.
struct ExpansionSpec {
    VertexSet v1, v2;
};

// Reason the spec is invalid, or nullopt when it is fine.
std::optional<std::string> validate_expansion(const PartialCube& pc, const ExpansionSpec& spec);

// Inverse of contraction: one new class whose sides are the copies of v1
// and v2. Throws InvalidExpansion when the spec is invalid.
PartialCube expand(const PartialCube& pc, const ExpansionSpec& spec);

enum class PeripheralSides { None, Minus, Plus, Both };

// A halfspace is peripheral when all its vertices meet E_f.
PeripheralSides is_peripheral(const PartialCube& pc, int f);

// Witness that `pattern` is a pc-minor of `host`: restrict to the signed
// classes in restricted_signs, then contract contracted_classes.
struct MinorWitness {
    std::map<int, char> restricted_signs;  // host class -> '+'/'-'
    std::vector<int> contracted_classes;   // host class indices
    std::vector<int> vertex_subset;        // the seed set V'
};

// Minor test: scan vertex subsets of size <= |pattern| in lexicographic
// order, take convex hulls, try all contraction subsets of the crossing
// classes, compare canonically. Returns the first witness found.
std::optional<MinorWitness> pc_minor(const PartialCube& host, const PartialCube& pattern);

// Rebuilds the minor a witness describes (for validation and reporting).
PartialCube apply_minor_witness(const PartialCube& host, const MinorWitness& w);

enum class Family {
    Cube,               // Q_n, n >= 0
    CubeMinusVertex,    // Q_n^-, n >= 1
    CubeMinusAntipodes, // Q_n^{--}, n >= 3
    QMinusStar,         // Q_n^{-*}, n >= 4
    QMinusMinusM,       // Q_n^{--}(m), n >= 4, 0 <= m <= n
    Path,               // n vertices
    EvenCycle,          // n vertices, n even >= 4
};

PartialCube generate(Family family, int n, int m = 0);

enum class ExcludedKind { QMinusR, QMinusMinusR };

// Finite excluded-minor lists for rank <= r (r >= 3), deduplicated by
// canonical key.
std::vector<PartialCube> excluded_family(ExcludedKind kind, int r);

// All valid expansion specs of pc (vertex-to-{v1,v2,both} assignments that
// cover, avoid cross edges and induce isometric subgraphs).
std::vector<ExpansionSpec> enumerate_expansions(const PartialCube& pc);

struct EnumerateOptions {
    double max_seconds = 0;  // 0 = unlimited; Timeout is thrown on expiry
};

// Breadth-first closure under single-class expansions from K_1, dedup by
// canonical key, emitted in (vertex count, canonical key) order. Complete
// for all partial cubes on <= max_vertices vertices.
void enumerate_partial_cubes(int max_vertices,
                             const std::function<void(const PartialCube&)>& sink,
                             const EnumerateOptions& opts = {});

std::vector<PartialCube> enumerate_partial_cubes(int max_vertices,
                                                 const EnumerateOptions& opts = {});

// Expansions with v2 = -v1 (image of v1 under the antipodal map),
// deduplicated. Throws NotAntipodal when pc is not antipodal.
std::vector<PartialCube> antipodal_expansions(const PartialCube& pc);

}  // namespace pcube

#endif
