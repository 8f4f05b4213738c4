#ifndef PCUBE_IO_HPP
#define PCUBE_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "pcube/graph.hpp"
#include "pcube/partial_cube.hpp"
#include "pcube/sign_system.hpp"

namespace pcube {

// .pcg: line 1 "pcg <n>", one "u v" edge per line, 0-indexed, ascending
//       (u < v, edges in lexicographic order). '#' starts a comment,
//       blank lines are ignored.
// .pce: line 1 "pce <n> <k>", then one +/- string of length k per vertex.
// .svs: one +/-/0 string per line, uniform length, duplicates rejected.

struct LoadedGraph {
    Graph graph;
    std::optional<PartialCube> pc;  // set when the input was a .pce
};

// Accepts either header; throws PcError(ParseError / ...) on bad input.
// Connectivity is enforced here (Graph invariant at load).
LoadedGraph read_graph(std::istream& in);
LoadedGraph read_graph_file(const std::string& path);

void write_pcg(std::ostream& out, const Graph& g);
void write_pce(std::ostream& out, const PartialCube& pc);

SignSystem read_sign_system(std::istream& in);
SignSystem read_sign_system_file(const std::string& path);
void write_svs(std::ostream& out, const SignSystem& l);

std::string to_pcg(const Graph& g);
std::string to_pce(const PartialCube& pc);
std::string to_svs(const SignSystem& l);

}  // namespace pcube

#endif
