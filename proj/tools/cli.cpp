#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcube/bridge.hpp"
#include "pcube/canonical.hpp"
#include "pcube/io.hpp"
#include "pcube/recognize.hpp"
#include "pcube/zones.hpp"

namespace pcube::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0, kNegative = 1, kError = 2;

// user-facing failure that should not get an error-code prefix
struct CliMessage {
    std::string text;
};

PartialCube load_pc(const std::string& path) {
    LoadedGraph lg = read_graph_file(path);
    if (lg.pc) return std::move(*lg.pc);
    EmbedResult r = embed_partial_cube(lg.graph);
    if (!embed_ok(r)) {
        const EmbedFailure& f = embed_failure(r);
        throw CliMessage{"not a partial cube: " + std::string(errc_name(f.reason)) +
                         (f.message.empty() ? "" : " (" + f.message + ")")};
    }
    return std::get<PartialCube>(std::move(r));
}

std::string vertex_list(const VertexSet& s) {
    std::string out;
    s.for_each([&](int v) {
        if (!out.empty()) out += " ";
        out += std::to_string(v);
    });
    return out;
}

std::string witness_text(const MinorWitness& w) {
    std::ostringstream os;
    os << "restrict:";
    for (auto [f, sign] : w.restricted_signs) os << " " << f << sign;
    os << "\ncontract:";
    for (int f : w.contracted_classes) os << " " << f;
    os << "\nseed:";
    for (int v : w.vertex_subset) os << " " << v;
    return os.str();
}

void emit_graph(std::ostream& out, const PartialCube& pc, bool as_pce) {
    if (as_pce)
        write_pce(out, pc);
    else
        write_pcg(out, pc.to_graph());
}

struct Options {
    std::string file, file2, family;
    int klass = -1;
    std::string sign;
    int rank = -1;
    int n = -1, m = 0;
    int max_vertices = -1;
    double max_seconds = 0;
    bool as_json = false, as_pce = false;
};

int cmd_recognize(const Options& o, std::ostream& out) {
    PartialCube pc = load_pc(o.file);
    if (o.rank >= 0) {
        BoundedRankResult com = is_com_bounded_rank(pc, o.rank);
        BoundedRankResult lop = is_lop_bounded_rank(pc, o.rank);
        if (o.as_json) {
            json j;
            j["is_partial_cube"] = true;
            j["is_com"] = com.member;
            j["is_lop"] = lop.member;
            j["rank_bound"] = o.rank;
            j["certificate"] =
                com.member ? json() : json(witness_text(*com.witness));
            out << j.dump() << "\n";
        } else {
            out << "com (rank <= " << o.rank << "): " << (com.member ? "yes" : "no") << "\n";
            out << "lop (rank <= " << o.rank << "): " << (lop.member ? "yes" : "no") << "\n";
            if (!com.member) out << "excluded minor #" << com.excluded_index << "\n"
                                 << witness_text(*com.witness) << "\n";
        }
        return com.member ? kOk : kNegative;
    }

    ClassificationReport rep = classify_graph(pc);
    if (o.as_json) {
        json j;
        j["is_partial_cube"] = rep.is_partial_cube;
        j["is_com"] = rep.is_com;
        j["is_om"] = rep.is_om;
        j["is_aom"] = rep.is_aom;
        j["is_lop"] = rep.is_lop;
        j["rank"] = rep.rank;
        j["certificate"] =
            rep.certificate
                ? json("subgraph=[" + vertex_list(rep.certificate->subgraph) +
                       "] vertex=" + std::to_string(rep.certificate->vertex))
                : json();
        out << j.dump() << "\n";
    } else {
        out << "partial cube: yes\n";
        out << "vertices: " << pc.vertex_count() << "\nclasses: " << pc.class_count() << "\n";
        out << "com: " << (rep.is_com ? "yes" : "no") << "\n";
        out << "om: " << (rep.is_om ? "yes" : "no") << "\n";
        out << "aom: " << (rep.is_aom ? "yes" : "no") << "\n";
        out << "lop: " << (rep.is_lop ? "yes" : "no") << "\n";
        out << "rank: " << rep.rank << "\n";
        if (rep.certificate)
            out << "non-gated antipodal subgraph: [" << vertex_list(rep.certificate->subgraph)
                << "], vertex " << rep.certificate->vertex << " has no gate\n";
    }
    return rep.is_com ? kOk : kNegative;
}

int cmd_minor(const Options& o, std::ostream& out) {
    PartialCube host = load_pc(o.file);
    PartialCube pattern = load_pc(o.file2);
    auto w = pc_minor(host, pattern);
    if (o.as_json) {
        json j;
        j["present"] = w.has_value();
        if (w) {
            std::ostringstream rs, cs, ss;
            for (auto [f, sign] : w->restricted_signs) rs << (rs.tellp() > 0 ? " " : "") << f << sign;
            for (int f : w->contracted_classes) cs << (cs.tellp() > 0 ? " " : "") << f;
            for (int v : w->vertex_subset) ss << (ss.tellp() > 0 ? " " : "") << v;
            j["restrict"] = rs.str();
            j["contract"] = cs.str();
            j["seed"] = ss.str();
        }
        out << j.dump() << "\n";
    } else if (w) {
        out << "minor: present\n" << witness_text(*w) << "\n";
    } else {
        out << "minor: absent\n";
    }
    return w ? kOk : kNegative;
}

int cmd_contract(const Options& o, std::ostream& out) {
    PartialCube pc = load_pc(o.file);
    emit_graph(out, contract(pc, o.klass), o.as_pce);
    return kOk;
}

int cmd_restrict(const Options& o, std::ostream& out) {
    if (o.sign != "+" && o.sign != "-")
        throw PcError(Errc::BadParameter, "--sign must be + or -");
    PartialCube pc = load_pc(o.file);
    emit_graph(out, restrict_halfspace(pc, o.klass, o.sign[0]), o.as_pce);
    return kOk;
}

int cmd_zone(const Options& o, std::ostream& out) {
    PartialCube pc = load_pc(o.file);
    ZoneResult zr = zone_graph(pc, o.klass);
    out << "# zone graph of class " << o.klass << "\n";
    out << "# well-embedded: " << (zr.well_embedded ? "yes" : "no") << "\n";
    if (o.as_pce && zr.well_embedded)
        write_pce(out, embed_or_throw(zr.graph));
    else
        write_pcg(out, zr.graph);
    return zr.well_embedded ? kOk : kNegative;
}

int cmd_covectors(const Options& o, std::ostream& out) {
    PartialCube pc = load_pc(o.file);
    write_svs(out, covectors_of(pc));
    return kOk;
}

int cmd_topes(const Options& o, std::ostream& out) {
    SignSystem l = read_sign_system_file(o.file);
    TopeGraphResult r = tope_graph(l);
    if (o.as_pce)
        write_pce(out, r.pc);
    else
        write_pcg(out, r.pc.to_graph());
    return kOk;
}

int cmd_rank(const Options& o, std::ostream& out) {
    // sniff: graphs start with a pcg/pce header, systems with a sign row
    std::ifstream probe(o.file);
    if (!probe) throw PcError(Errc::ParseError, "cannot open " + o.file);
    std::string first;
    probe >> first;
    if (first == "pcg" || first == "pce") {
        out << graph_rank(load_pc(o.file)) << "\n";
    } else {
        out << system_rank(read_sign_system_file(o.file)) << "\n";
    }
    return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
    static const std::map<std::string, Family> families = {
        {"cube", Family::Cube},
        {"cube_minus_vertex", Family::CubeMinusVertex},
        {"cube_minus_antipodes", Family::CubeMinusAntipodes},
        {"q_minus_star", Family::QMinusStar},
        {"q_minus_minus_m", Family::QMinusMinusM},
        {"path", Family::Path},
        {"even_cycle", Family::EvenCycle},
    };
    auto it = families.find(o.family);
    if (it == families.end())
        throw PcError(Errc::BadParameter, "unknown family '" + o.family + "'");
    emit_graph(out, generate(it->second, o.n, o.m), o.as_pce);
    return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    EnumerateOptions opts;
    opts.max_seconds = o.max_seconds;
    int i = 0;
    enumerate_partial_cubes(
        o.max_vertices,
        [&](const PartialCube& pc) {
            out << "# " << i++ << "\n";
            write_pcg(out, pc.to_graph());
            out << "\n";
        },
        opts);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"partial cubes, pc-minors, sign systems and tope-graph recognition"};
    app.require_subcommand(1);
    Options o;

    auto* rec = app.add_subcommand("recognize", "classify a graph (COM/OM/AOM/LOP, rank)");
    rec->add_option("file", o.file)->required();
    rec->add_option("--rank", o.rank, "use the bounded-rank excluded-minor route");
    rec->add_flag("--json", o.as_json);

    auto* minor = app.add_subcommand("minor", "test pattern <= host in the pc-minor order");
    minor->add_option("host", o.file)->required();
    minor->add_option("pattern", o.file2)->required();
    minor->add_flag("--json", o.as_json);

    auto* con = app.add_subcommand("contract", "contract one Theta class");
    con->add_option("file", o.file)->required();
    con->add_option("--class", o.klass)->required();
    con->add_flag("--pce", o.as_pce);

    auto* res = app.add_subcommand("restrict", "restrict to one halfspace");
    res->add_option("file", o.file)->required();
    res->add_option("--class", o.klass)->required();
    res->add_option("--sign", o.sign)->required();
    res->add_flag("--pce", o.as_pce);

    auto* zone = app.add_subcommand("zone", "zone graph of one class");
    zone->add_option("file", o.file)->required();
    zone->add_option("--class", o.klass)->required();
    zone->add_flag("--pce", o.as_pce);

    auto* cov = app.add_subcommand("covectors", "covector system of a partial cube");
    cov->add_option("file", o.file)->required();

    auto* top = app.add_subcommand("topes", "tope graph of a sign system");
    top->add_option("file", o.file)->required();
    top->add_flag("--pce", o.as_pce);

    auto* rank = app.add_subcommand("rank", "rank of a graph (.pcg/.pce) or system (.svs)");
    rank->add_option("file", o.file)->required();

    auto* gen = app.add_subcommand("gen", "generate a named family member");
    gen->add_option("family", o.family)->required();
    gen->add_option("--n", o.n)->required();
    gen->add_option("--m", o.m);
    gen->add_flag("--pce", o.as_pce);

    auto* enu = app.add_subcommand("enumerate", "all partial cubes up to a vertex bound");
    enu->add_option("--max-vertices", o.max_vertices)->required();
    enu->add_option("--max-seconds", o.max_seconds);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kError;
    }

    try {
        if (rec->parsed()) return cmd_recognize(o, out);
        if (minor->parsed()) return cmd_minor(o, out);
        if (con->parsed()) return cmd_contract(o, out);
        if (res->parsed()) return cmd_restrict(o, out);
        if (zone->parsed()) return cmd_zone(o, out);
        if (cov->parsed()) return cmd_covectors(o, out);
        if (top->parsed()) return cmd_topes(o, out);
        if (rank->parsed()) return cmd_rank(o, out);
        if (gen->parsed()) return cmd_gen(o, out);
        if (enu->parsed()) return cmd_enumerate(o, out);
    } catch (const CliMessage& m) {
        err << "error: " << m.text << "\n";
        return kError;
    } catch (const PcError& e) {
        if (e.code() == Errc::NoTopes || e.code() == Errc::NotPartialCubeSystem) {
            err << e.what() << "\n";
            return kNegative;
        }
        err << "error: " << e.what() << "\n";
        return kError;
    }
    err << "error: no command\n";
    return kError;
}

}  // namespace pcube::cli
