// gapbrack: assemble magnetic graph Laplacians, bracket their spectra under
// flux, certify magnetic gaps, and sweep Floquet band structures.
//
// Exit codes: 0 success, 1 certification inconclusive, 2 invalid input,
// 3 solver failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapbrack/errors.hpp"
#include "gapbrack/gap_certify.hpp"
#include "gapbrack/graph_file.hpp"

using namespace gapbrack;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_list(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += " ";
        out += fmt(values[i]);
    }
    return out;
}

std::string fmt_set(const IntervalSet& s) {
    if (s.empty()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += " ";
        const Interval& p = s.parts()[i];
        out += "[" + fmt(p.lo) + ", " + fmt(p.hi) + "]";
    }
    return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct LoadedInput {
    GraphDescription description;
    std::string digest;
    std::string path;
};

LoadedInput load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    char digest[24];
    std::snprintf(digest, sizeof(digest), "fnv1a-%016llx",
                  static_cast<unsigned long long>(fnv1a(text)));
    return {parse_graph_file(text), digest, path};
}

void print_header(const char* command, const LoadedInput& input, double tol) {
    const WeightedGraph& w = input.description.weighted;
    std::cout << "command: " << command << "\n";
    std::cout << "input: " << input.path << "\n";
    std::cout << "digest: " << input.digest << "\n";
    std::cout << "scheme: " << to_string(w.scheme()) << "\n";
    std::cout << "vertices: " << w.graph().vertex_count() << "\n";
    std::cout << "edges: " << w.graph().edge_count() << "\n";
    std::cout << "rho_infinity: " << fmt(w.rho_infinity()) << "\n";
    std::cout << "tolerance: " << fmt(tol) << "\n";
}

void apply_alpha_overrides(GraphDescription& d, const std::vector<std::string>& overrides) {
    for (const std::string& spec : overrides) {
        auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw validation_error("--alpha-edge expects id=value, got '" + spec + "'");
        EdgeId id = 0;
        double value = 0.0;
        try {
            id = static_cast<EdgeId>(std::stoul(spec.substr(0, eq)));
            value = std::stod(spec.substr(eq + 1));
        } catch (const std::exception&) {
            throw validation_error("--alpha-edge expects id=value, got '" + spec + "'");
        }
        if (!d.weighted.graph().has_edge(id))
            throw validation_error("--alpha-edge names unknown edge " + std::to_string(id));
        d.alpha.set(id, value);
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write '" + path + "'");
    out << contents;
}

// the spectral reflection 2 - x only acts on the spectrum when the graph is
// bipartite with relative weight 1 everywhere
void require_kappa_eligible(const WeightedGraph& w) {
    if (!bipartition(w.graph()).has_value())
        throw validation_error("--kappa needs a bipartite graph");
    for (VertexId v = 0; v < w.graph().vertex_count(); ++v)
        if (std::abs(w.relative_weight(v) - 1.0) > 1e-9)
            throw validation_error(
                "--kappa needs normalised weights (relative weight 1 everywhere)");
}

int cmd_spectrum(const std::string& path, const std::vector<std::string>& alpha_overrides,
                 double tol, const std::string& out_csv) {
    auto t0 = std::chrono::steady_clock::now();
    LoadedInput input = load_input(path);
    apply_alpha_overrides(input.description, alpha_overrides);

    Spectrum s = spectrum(input.description.weighted, input.description.alpha, tol);

    print_header("spectrum", input, tol);
    std::cout << "n: " << s.dimension() << "\n";
    std::cout << "eigenvalues: " << fmt_list(s.eigenvalues) << "\n";

    if (!out_csv.empty()) {
        std::string csv = "k,lambda\n";
        for (std::size_t k = 0; k < s.dimension(); ++k)
            csv += std::to_string(k + 1) + "," + fmt(s[k]) + "\n";
        write_file(out_csv, csv);
        std::cout << "csv: " << out_csv << "\n";
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    std::cout << "timing_ms: " << fmt(ms.count()) << "\n";
    return 0;
}

int cmd_bracket(const std::string& path, const std::vector<EdgeId>& virtual_edges,
                const std::vector<VertexId>& virtual_vertices, bool kappa, double tol,
                const std::string& out_csv) {
    auto t0 = std::chrono::steady_clock::now();
    LoadedInput input = load_input(path);
    const WeightedGraph& w = input.description.weighted;

    std::set<EdgeId> e0(virtual_edges.begin(), virtual_edges.end());
    std::set<VertexId> v0(virtual_vertices.begin(), virtual_vertices.end());
    if (kappa) require_kappa_eligible(w);

    BracketingReport r = bracketing_report(w, e0, v0, tol);

    print_header("bracket", input, tol);
    std::cout << "virtual_edges:";
    for (EdgeId id : e0) std::cout << " " << id;
    std::cout << "\nvirtual_vertices:";
    for (VertexId v : v0) std::cout << " " << v;
    std::cout << "\nlower: " << fmt_list(r.lower.eigenvalues) << "\n";
    std::cout << "upper: " << fmt_list(r.upper.eigenvalues) << "\n";
    std::cout << "padded_upper: " << fmt_list(r.padded_upper) << "\n";
    for (std::size_t k = 0; k < r.intervals.size(); ++k)
        std::cout << "J " << k + 1 << ": [" << fmt(r.intervals[k].lo) << ", "
                  << fmt(r.intervals[k].hi) << "]\n";
    std::cout << "localising_set: " << fmt_set(r.localising_set) << "\n";
    std::cout << "gaps: " << fmt_set(r.complement_gaps) << "\n";
    std::cout << "gap_measure: " << fmt(r.complement_gaps.measure()) << "\n";
    std::cout << "trace_bound: " << fmt(r.trace_bound) << "\n";
    if (certifies_gap(r))
        std::cout << "trace_bound_note: the localising set cannot cover [0, "
                  << fmt(2.0 * r.rho_infinity) << "]\n";

    if (kappa) {
        IntervalSet reflected = kappa_reflect(r.localising_set);
        IntervalSet refined = interval_intersection(r.localising_set, reflected);
        IntervalSet refined_gaps =
            interval_complement(refined, 2.0 * r.rho_infinity, 2.0 * tol);
        std::cout << "kappa_localising_set: " << fmt_set(refined) << "\n";
        std::cout << "kappa_gaps: " << fmt_set(refined_gaps) << "\n";
        std::cout << "kappa_gap_measure: " << fmt(refined_gaps.measure()) << "\n";
    }

    if (!out_csv.empty()) {
        std::string csv = "k,lower,upper_padded,j_lo,j_hi\n";
        for (std::size_t k = 0; k < r.intervals.size(); ++k)
            csv += std::to_string(k + 1) + "," + fmt(r.lower[k]) + "," +
                   fmt(r.padded_upper[k]) + "," + fmt(r.intervals[k].lo) + "," +
                   fmt(r.intervals[k].hi) + "\n";
        write_file(out_csv, csv);
        std::cout << "csv: " << out_csv << "\n";
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    std::cout << "timing_ms: " << fmt(ms.count()) << "\n";
    return 0;
}

int cmd_certify(const std::string& path, double tol) {
    auto t0 = std::chrono::steady_clock::now();
    LoadedInput input = load_input(path);
    const WeightedGraph& w = input.description.weighted;

    GapCertificate cert = certify_magnetic_gap(w, tol);
    print_header("certify", input, tol);
    std::cout << "betti: " << betti_number(w.graph()) << "\n";

    int exit_code = 0;
    switch (cert.kind) {
        case GapCertificateKind::CentreVertexDelta:
            std::cout << "kind: centre-vertex-delta\n";
            break;
        case GapCertificateKind::Betti1Degree1:
            std::cout << "kind: degree-one-gap\n";
            break;
        case GapCertificateKind::None:
            std::cout << "kind: none\n";
            break;
    }
    if (cert.centre) {
        std::cout << "centre_vertex: " << cert.centre->v0 << "\n";
        std::cout << "cycle_edges:";
        for (EdgeId id : cert.centre->cycle_edges) std::cout << " " << id;
        std::cout << "\ndelta: " << fmt(cert.centre->delta) << "\n";
    }
    if (cert.degree_one_vertex)
        std::cout << "degree_one_vertex: " << *cert.degree_one_vertex << "\n";

    switch (cert.note) {
        case GapNote::TreeAllPotentialsEquivalent: {
            // every potential is gauge-trivial: magnetic gaps = spectral gaps,
            // the open intervals between consecutive eigenvalues
            Spectrum s = spectrum(w, {}, tol);
            std::cout << "note: tree quotient, every potential is gauge-trivial\n";
            std::cout << "eigenvalues: " << fmt_list(s.eigenvalues) << "\n";
            std::cout << "spectral_gaps:";
            double cursor = 0.0;
            for (double v : s.eigenvalues) {
                if (v - cursor > 2.0 * tol)
                    std::cout << " (" << fmt(cursor) << ", " << fmt(v) << ")";
                cursor = std::max(cursor, v);
            }
            if (2.0 * w.rho_infinity() - cursor > 2.0 * tol)
                std::cout << " (" << fmt(cursor) << ", " << fmt(2.0 * w.rho_infinity())
                          << ")";
            std::cout << "\n";
            std::cout << "verdict: magnetic gap set equals the spectral gap set\n";
            exit_code = 0;
            break;
        }
        case GapNote::CycleFullCover:
            std::cout << "note: cycle graph, the flux sweep covers the whole interval\n";
            std::cout << "verdict: no magnetic gap (cycle)\n";
            exit_code = 1;
            break;
        case GapNote::None:
            if (cert.kind == GapCertificateKind::None) {
                std::cout << "verdict: inconclusive (no certificate; gaps may still exist)\n";
                exit_code = 1;
            } else {
                std::cout << "guaranteed_gap_measure: " << fmt(cert.guaranteed_gap_measure)
                          << "\n";
                std::cout << "verdict: magnetic spectral gaps exist\n";
                exit_code = 0;
            }
            break;
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    std::cout << "timing_ms: " << fmt(ms.count()) << "\n";
    return exit_code;
}

int cmd_bands(const std::string& path, std::vector<std::size_t> grid, bool exact, double tol,
              const std::string& out_csv) {
    auto t0 = std::chrono::steady_clock::now();
    LoadedInput input = load_input(path);
    if (!input.description.quotient.has_value())
        throw validation_error("the input file declares no rank, so there is no quotient");
    const PeriodicQuotient& q = *input.description.quotient;

    if (grid.empty()) grid.assign(q.rank, q.rank == 1 ? 256 : 64);
    if (grid.size() == 1 && q.rank > 1) grid.assign(q.rank, grid[0]);

    print_header("bands", input, tol);
    std::cout << "rank: " << q.rank << "\n";
    std::cout << "maximal_abelian: " << (is_maximal_abelian(q) ? "yes" : "no") << "\n";

    BandStructure bs;
    std::vector<FloquetSample> samples;
    if (exact) {
        bs = z_exact_bands(q, tol);
        samples = sweep_characters(q, {2}, tol);  // theta = 0, pi
        std::cout << "method: exact-two-point\n";
    } else {
        samples = sweep_characters(q, grid, tol);
        bs.sample_grid = grid;
        bs.method = BandMethod::GridSampled;
        bs.rho_infinity = q.base.rho_infinity();
        bs.tol = tol;
        bs.bands.assign(q.base.graph().vertex_count(), Interval{2.0 * bs.rho_infinity, 0.0});
        for (const FloquetSample& s : samples)
            for (std::size_t k = 0; k < bs.bands.size(); ++k) {
                bs.bands[k].lo = std::min(bs.bands[k].lo, s.spectrum[k]);
                bs.bands[k].hi = std::max(bs.bands[k].hi, s.spectrum[k]);
            }
        std::cout << "method: grid-sampled\n";
        std::cout << "grid:";
        for (std::size_t r : grid) std::cout << " " << r;
        std::cout << "\n";
    }

    for (std::size_t k = 0; k < bs.bands.size(); ++k)
        std::cout << "band " << k + 1 << ": [" << fmt(bs.bands[k].lo) << ", "
                  << fmt(bs.bands[k].hi) << "]\n";
    IntervalSet u = bs.band_union();
    std::cout << "band_union: " << fmt_set(u) << "\n";
    IntervalSet holes = interval_complement(u, 2.0 * q.base.rho_infinity(), 2.0 * tol);
    if (exact)
        std::cout << "spectral_gaps: " << fmt_set(holes) << "\n";
    else
        std::cout << "sample_free: " << fmt_set(holes) << "\n";

    if (!out_csv.empty()) {
        std::string csv;
        for (std::size_t d = 0; d < q.rank; ++d) csv += "theta_" + std::to_string(d) + ",";
        csv += "k,lambda\n";
        for (const FloquetSample& s : samples)
            for (std::size_t k = 0; k < s.spectrum.dimension(); ++k) {
                for (double t : s.theta) csv += fmt(t) + ",";
                csv += std::to_string(k + 1) + "," + fmt(s.spectrum[k]) + "\n";
            }
        write_file(out_csv, csv);
        std::cout << "csv: " << out_csv << "\n";
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    std::cout << "timing_ms: " << fmt(ms.count()) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra, certified brackets and Floquet bands of discrete magnetic "
                 "Laplacians on weighted multigraphs"};
    app.require_subcommand(1);

    std::string path;
    double tol = 1e-10;
    std::string out_csv;
    std::vector<std::string> alpha_overrides;
    std::vector<std::string> edge_list, vertex_list;
    bool kappa = false, exact = false;
    std::vector<std::size_t> grid;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "graph description file")->required();
        cmd->add_option("--tol", tol, "eigensolver tolerance")->capture_default_str();
        cmd->add_option("--out", out_csv, "write a CSV next to the report");
    };

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of the Laplacian");
    add_common(spectrum_cmd);
    spectrum_cmd->add_option("--alpha-edge", alpha_overrides,
                             "override the potential on an edge, id=value");

    CLI::App* bracket_cmd =
        app.add_subcommand("bracket", "two-sided eigenvalue bracket and certified gaps");
    add_common(bracket_cmd);
    bracket_cmd->add_option("--virtual-edges", edge_list, "edge ids to virtualise")
        ->delimiter(',');
    bracket_cmd->add_option("--virtual-vertices", vertex_list, "vertex ids to virtualise")
        ->delimiter(',');
    bracket_cmd->add_flag("--kappa", kappa,
                          "also intersect with the spectral reflection 2 - x");

    CLI::App* certify_cmd = app.add_subcommand("certify", "magnetic gap certificate");
    certify_cmd->add_option("file", path, "graph description file")->required();
    certify_cmd->add_option("--tol", tol, "eigensolver tolerance")->capture_default_str();

    CLI::App* bands_cmd = app.add_subcommand("bands", "Floquet band structure");
    add_common(bands_cmd);
    bands_cmd->add_option("--grid", grid, "samples per character dimension")->delimiter(',');
    bands_cmd->add_flag("--exact", exact, "two-point exact bands (single Z crossing)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        auto to_ids = [](const std::vector<std::string>& raw) {
            std::vector<unsigned long> out;
            for (const std::string& s : raw) {
                try {
                    out.push_back(std::stoul(s));
                } catch (const std::exception&) {
                    throw validation_error("expected a numeric id, got '" + s + "'");
                }
            }
            return out;
        };
        if (spectrum_cmd->parsed()) return cmd_spectrum(path, alpha_overrides, tol, out_csv);
        if (bracket_cmd->parsed()) {
            std::vector<EdgeId> e;
            std::vector<VertexId> v;
            for (auto id : to_ids(edge_list)) e.push_back(static_cast<EdgeId>(id));
            for (auto id : to_ids(vertex_list)) v.push_back(static_cast<VertexId>(id));
            return cmd_bracket(path, e, v, kappa, tol, out_csv);
        }
        if (certify_cmd->parsed()) return cmd_certify(path, tol);
        if (bands_cmd->parsed()) return cmd_bands(path, grid, exact, tol, out_csv);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const solver_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
