#include "pcube/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace pcube {

namespace {

// strips comments and blank lines
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        out.push_back(line.substr(start));
    }
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PcError(Errc::ParseError, "cannot open " + path);
    return in;
}

}  // namespace

LoadedGraph read_graph(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw PcError(Errc::ParseError, "empty graph file");

    std::istringstream head(lines[0]);
    std::string magic;
    head >> magic;

    if (magic == "pcg") {
        long long n = -1;
        if (!(head >> n) || n <= 0) throw PcError(Errc::ParseError, "pcg header needs n >= 1");
        std::vector<std::pair<int, int>> edges;
        std::pair<int, int> prev{-1, -1};
        for (std::size_t i = 1; i < lines.size(); ++i) {
            std::istringstream ls(lines[i]);
            long long u, v;
            if (!(ls >> u >> v)) throw PcError(Errc::ParseError, "bad edge line: " + lines[i]);
            std::string rest;
            if (ls >> rest) throw PcError(Errc::ParseError, "trailing tokens: " + lines[i]);
            if (u >= v) throw PcError(Errc::ParseError, "edges need u < v: " + lines[i]);
            if (u < 0 || v >= n) throw PcError(Errc::ParseError, "endpoint out of range: " + lines[i]);
            std::pair<int, int> e{static_cast<int>(u), static_cast<int>(v)};
            if (!(prev < e)) throw PcError(Errc::ParseError, "edges must be ascending: " + lines[i]);
            prev = e;
            edges.push_back(e);
        }
        Graph g = Graph::from_edges(static_cast<int>(n), std::move(edges));
        if (!g.connected()) throw PcError(Errc::DisconnectedGraph, "graph file must be connected");
        return LoadedGraph{std::move(g), std::nullopt};
    }

    if (magic == "pce") {
        long long n = -1, k = -1;
        if (!(head >> n >> k) || n <= 0 || k < 0)
            throw PcError(Errc::ParseError, "pce header needs n >= 1 and k >= 0");
        if (static_cast<std::size_t>(n) != lines.size() - 1)
            throw PcError(Errc::ParseError, "pce vertex count does not match line count");
        std::vector<CoordSet> coords;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const std::string& row = lines[i];
            if (static_cast<long long>(row.size()) != k)
                throw PcError(Errc::ParseError, "pce row of wrong length: " + row);
            CoordSet c;
            for (int f = 0; f < k; ++f) {
                if (row[f] == '+')
                    c.set(f);
                else if (row[f] != '-')
                    throw PcError(Errc::ParseError, "pce rows are over +-: " + row);
            }
            coords.push_back(c);
        }
        PartialCube pc = PartialCube::from_coords(static_cast<int>(k), std::move(coords), true);
        Graph g = pc.to_graph();
        return LoadedGraph{std::move(g), std::move(pc)};
    }

    throw PcError(Errc::ParseError, "unknown header '" + magic + "' (expected pcg or pce)");
}

LoadedGraph read_graph_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_graph(in);
}

void write_pcg(std::ostream& out, const Graph& g) {
    out << "pcg " << g.n << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

void write_pce(std::ostream& out, const PartialCube& pc) {
    out << "pce " << pc.vertex_count() << " " << pc.class_count() << "\n";
    for (int v = 0; v < pc.vertex_count(); ++v) {
        std::string row(pc.class_count(), '-');
        for (int f = 0; f < pc.class_count(); ++f)
            if (pc.on_plus_side(v, f)) row[f] = '+';
        out << row << "\n";
    }
}

SignSystem read_sign_system(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw PcError(Errc::ParseError, "empty sign system file");
    std::vector<SignVec> vecs;
    for (const auto& line : lines) {
        if (line.size() != lines[0].size())
            throw PcError(Errc::ParseError, "uneven vector lengths");
        vecs.push_back(SignVec::from_string(line));
    }
    return SignSystem::from_vectors(static_cast<int>(lines[0].size()), std::move(vecs));
}

SignSystem read_sign_system_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_sign_system(in);
}

void write_svs(std::ostream& out, const SignSystem& l) {
    for (const auto& v : l.vecs) out << v.to_string() << "\n";
}

std::string to_pcg(const Graph& g) {
    std::ostringstream out;
    write_pcg(out, g);
    return out.str();
}

std::string to_pce(const PartialCube& pc) {
    std::ostringstream out;
    write_pce(out, pc);
    return out.str();
}

std::string to_svs(const SignSystem& l) {
    std::ostringstream out;
    write_svs(out, l);
    return out.str();
}

}  // namespace pcube
