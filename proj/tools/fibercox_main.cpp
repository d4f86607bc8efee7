// fibercox command-line interface. Every subcommand reads the shared JSON
// schemas, emits deterministic JSON to stdout or --out, and encodes its
// verdict in the exit status: 0 for certified success (degradation labels
// allowed), 2 for a refused certificate or found counterexample, 1 for usage
// and I/O errors.

#include "fibercox/json_io.hpp"
#include "fibercox/moves.hpp"
#include "fibercox/pipeline.hpp"
#include "fibercox/racg.hpp"
#include "fibercox/structure_checks.hpp"
#include "fibercox/thickening.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace fibercox;

void emit(const Json& j, const std::string& out, const std::string& name) {
    if (out.empty()) {
        std::cout << dump_json(j);
        return;
    }
    std::filesystem::path p(out);
    if (std::filesystem::is_directory(p)) p /= name + ".json";
    write_json_file(p.string(), j);
}

CubeComplex load_cube_complex(int cycle, const std::string& path) {
    if (path.empty()) return cycle_complex(cycle);
    Json j = read_json_file(path);
    switch (detect_kind(j)) {
        case JsonKind::cube: return cube_complex_from_json(j);
        case JsonKind::graph: return cube_complex_from_graph(graph_from_json(j));
        default:
            throw std::invalid_argument(path + ": expected a cube complex or graph JSON");
    }
}

Thickening load_thickening(int cycle, const std::string& path, bool identity) {
    if (path.empty()) {
        CubeComplex X = cycle_complex(cycle);
        return identity ? build_th1(X) : build_pair_thickening(X);
    }
    Json j = read_json_file(path);
    if (detect_kind(j) == JsonKind::thickening) return thickening_from_json(j);
    CubeComplex X = load_cube_complex(cycle, path);
    return identity ? build_th1(X) : build_pair_thickening(X);
}

int do_thicken(int cycle, const std::string& path, const std::string& alpha_path,
               bool identity, const std::string& out) {
    Thickening th;
    if (!alpha_path.empty()) {
        CubeComplex X = load_cube_complex(cycle, path);
        th = build_th_alpha(X, alpha_from_json(read_json_file(alpha_path), X));
    } else {
        th = load_thickening(cycle, path, identity);
    }
    emit(thickening_to_json(th), out, "thickening");
    return 0;
}

int do_check_legal(int cycle, const std::string& path, bool exhaustive, int samples,
                   bool sampled, std::uint64_t orbit_budget, std::uint64_t seed,
                   const std::string& out) {
    Thickening th;
    bool have_thickening = true;
    std::string build_error;
    if (!path.empty() && detect_kind(read_json_file(path)) == JsonKind::thickening) {
        th = thickening_from_json(read_json_file(path));
    } else {
        th.base = load_cube_complex(cycle, path);
        try {
            th = build_pair_thickening(th.base);
        } catch (const std::exception& e) {
            have_thickening = false;
            build_error = e.what();
        }
    }
    LegalityCertificate cert = certify_legal_by_hypotheses(th.base);
    Json j;
    j["certificate"] = legality_certificate_to_json(cert, th.base);
    if (!have_thickening) {
        j["report"] = nullptr;
        j["note"] = build_error;
        emit(j, out, "legality");
        return 2;
    }
    MoveSystem sys = canonical_moves(th);
    State S = canonical_state(th);
    OrbitOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    opts.budget = orbit_budget;
    opts.exhaustive =
        exhaustive || (!sampled && sys.rank() < 63 &&
                       (std::uint64_t(1) << sys.rank()) <= orbit_budget);
    LegalityReport rep = th.implicit_mode
                             ? check_legal_orbit_lazy(th, sys, S, opts)
                             : check_legal_orbit(th.complex.skeleton, sys, S, opts);
    j["report"] = legality_report_to_json(rep);
    emit(j, out, "legality");
    return (cert.granted && rep.all_legal) ? 0 : 2;
}

int do_vcd(int cycle, const std::string& path, Coeffs coeffs, std::size_t cell_budget,
           const std::string& out) {
    SimplicialComplex L;
    if (path.empty()) {
        L = build_pair_thickening(cycle_complex(cycle)).complex;
    } else {
        Json j = read_json_file(path);
        switch (detect_kind(j)) {
            case JsonKind::simplicial: L = complex_from_json(j); break;
            case JsonKind::graph: L = flag_complex(graph_from_json(j)); break;
            case JsonKind::thickening: {
                Thickening th = thickening_from_json(j);
                if (th.implicit_mode)
                    throw std::invalid_argument("vcd: the thickening is implicit");
                L = th.complex;
                break;
            }
            case JsonKind::cube:
                L = build_pair_thickening(cube_complex_from_json(j)).complex;
                break;
            default: throw std::invalid_argument(path + ": unrecognized JSON kind");
        }
    }
    VcdResult r = vcd_racg(L, coeffs, cell_budget);
    emit(vcd_result_to_json(r, L), out, "vcd");
    return 0;
}

int do_davis_quotient(int cycle, const std::string& graph_path, const std::string& path,
                      std::size_t cell_budget, std::size_t quotient_budget,
                      const std::string& out) {
    RACG G;
    if (!graph_path.empty()) {
        G = racg_from_graph(graph_from_json(read_json_file(graph_path)), cell_budget);
    } else if (!path.empty()) {
        Json j = read_json_file(path);
        switch (detect_kind(j)) {
            case JsonKind::graph: G = racg_from_graph(graph_from_json(j), cell_budget); break;
            case JsonKind::simplicial:
                G = racg_from_complex(complex_from_json(j), cell_budget);
                break;
            case JsonKind::thickening: {
                Thickening th = thickening_from_json(j);
                if (th.implicit_mode)
                    throw std::invalid_argument("davis-quotient: the thickening is implicit");
                G = racg_from_complex(th.complex, cell_budget);
                break;
            }
            default:
                throw std::invalid_argument(path +
                                            ": expected a graph, complex, or thickening");
        }
    } else {
        G = racg_from_graph(cycle_graph(cycle), cell_budget);
    }
    DavisQuotient q = level2_quotient(G, quotient_budget);
    int expected_cd = vcd_racg(flag_complex(G.gamma), Coeffs::Z, cell_budget).vcd;
    QuotientReport rep = verify_quotient_properties(q, expected_cd);
    Json j;
    j["complex"] = cube_complex_to_json(q.complex);
    j["f_vector"] = q.f_vector;
    j["report"] = quotient_report_to_json(rep, q.complex);
    emit(j, out, "quotient");
    return rep.ok ? 0 : 2;
}

int do_verify_properties(int cycle, const std::string& path, int restarts,
                         std::uint64_t seed, const std::string& out) {
    CubeComplex X = load_cube_complex(cycle, path);
    FiveLargeCertificate c = check_5_large(X, restarts, seed);
    CornerCheck corners = check_no_isolated_corners(X);
    DisconnectionCheck disc = check_no_disconnecting_cubes(X);
    bool connected = cube_components(X).size() == 1;
    Json j;
    j["five_large"] = five_large_to_json(c, X);
    j["corners"] = corner_check_to_json(corners, X);
    j["disconnection"] = disconnection_check_to_json(disc, X);
    j["connected"] = connected;
    bool ok = c.certified && corners.ok && disc.ok && connected;
    j["ok"] = ok;
    emit(j, out, "properties");
    return ok ? 0 : 2;
}

int do_pipeline(const PipelineConfig& cfg, const std::string& out) {
    CertificateChain chain = run_pipeline(cfg);
    emit(chain_to_json(chain), out, "chain");
    return chain.ok ? 0 : 2;
}

int do_lemma_suite(int cycle, const std::string& path, int level, int restarts,
                   std::uint64_t seed, std::size_t cell_budget, const std::string& out) {
    // cube or graph input runs the suite on the complex itself (the identity
    // thickening); pass a thickening JSON to audit a genuine thickening
    Thickening th = load_thickening(cycle, path, /*identity=*/true);
    if (th.implicit_mode)
        throw std::invalid_argument("lemma-suite: the thickening is implicit; the "
                                    "property suite needs an explicit complex");
    SuiteOptions opts;
    opts.level = level;
    opts.restarts = restarts;
    opts.seed = seed;
    opts.budget = cell_budget;
    SuiteReport rep = structure_suite(th, opts);
    emit(suite_report_to_json(rep), out, "suite");
    return rep.ok ? 0 : 2;
}

int do_family_report(const std::vector<int>& ks, const std::string& out) {
    FamilyReport rep = distinct_family_report(ks);
    emit(family_report_to_json(rep), out, "family");
    return rep.ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"thickenings of cube complexes, legal move systems, exact "
                 "(co)homology, and level-2 quotient certificates"};
    app.require_subcommand(1);

    int cycle = 5;
    std::string complex_path, graph_path, alpha_path, out;
    bool identity = false, exhaustive = false;
    int iterations = 1, samples = 256, neighborhood_samples = 64;
    int restarts = kDefaultCollapseRestarts, level = 1;
    std::uint64_t seed = 0, orbit_budget = kDefaultOrbitBudget;
    std::size_t cell_budget = kDefaultCellBudget, quotient_budget = kDefaultQuotientBudget;
    Coeffs coeffs = Coeffs::Z;
    std::vector<int> ks{5, 6, 7, 8};
    const std::map<std::string, Coeffs> coeff_names{
        {"z", Coeffs::Z}, {"q", Coeffs::Q}, {"gf2", Coeffs::GF2}};

    auto add_input = [&](CLI::App* sub, bool with_graph = false) {
        auto* c = sub->add_option("--cycle", cycle, "start from the cycle C_K (K >= 5)");
        auto* f = sub->add_option("--complex", complex_path, "input JSON file");
        c->excludes(f);
        if (with_graph) {
            auto* g = sub->add_option("--graph", graph_path, "defining graph JSON file");
            g->excludes(c);
            g->excludes(f);
        }
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", out, "write the JSON here instead of stdout");
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "random seed for restarts and sampling");
    };

    CLI::App* thicken = app.add_subcommand("thicken", "build a thickening of a cube complex");
    add_input(thicken);
    thicken->add_option("--alpha", alpha_path, "thicken along this alpha map JSON");
    thicken->add_flag("--identity", identity, "identity thickening instead of pairs");
    add_out(thicken);

    CLI::App* legal =
        app.add_subcommand("check-legal", "certify the canonical move system legal");
    add_input(legal);
    auto* ex = legal->add_flag("--exhaustive", exhaustive, "force the exhaustive orbit walk");
    auto* sm = legal->add_option("--samples", samples, "check this many sampled orbit states");
    ex->excludes(sm);
    legal->add_option("--orbit-budget", orbit_budget, "exhaustive-orbit state cap");
    add_seed(legal);
    add_out(legal);

    CLI::App* vcd = app.add_subcommand(
        "vcd", "virtual cohomological dimension of the group defined by a complex");
    add_input(vcd);
    vcd->add_option("--coeffs", coeffs, "coefficient ring")
        ->transform(CLI::CheckedTransformer(coeff_names, CLI::ignore_case));
    vcd->add_option("--cell-budget", cell_budget, "cell cap for the simplex sweep");
    add_out(vcd);

    CLI::App* davis =
        app.add_subcommand("davis-quotient", "level-2 quotient of the Davis complex");
    add_input(davis, /*with_graph=*/true);
    davis->add_option("--cell-budget", cell_budget, "clique enumeration cap");
    davis->add_option("--quotient-budget", quotient_budget, "quotient closure cell cap");
    add_out(davis);

    CLI::App* verify = app.add_subcommand(
        "verify-properties", "5-largeness, corner, disconnection, connectivity checks");
    add_input(verify);
    verify->add_option("--restarts", restarts, "collapse restart attempts per neighborhood");
    add_seed(verify);
    add_out(verify);

    CLI::App* pipe =
        app.add_subcommand("pipeline", "run the iterated construction, emit the chain");
    add_input(pipe);
    pipe->add_option("--iterations", iterations, "number of rounds to run");
    pipe->add_option("--cell-budget", cell_budget, "cell cap for homology sweeps");
    pipe->add_option("--orbit-budget", orbit_budget, "exhaustive-orbit state cap");
    pipe->add_option("--quotient-budget", quotient_budget, "quotient closure cell cap");
    pipe->add_option("--samples", samples, "orbit draws in sampled mode");
    pipe->add_option("--neighborhood-samples", neighborhood_samples,
                     "local scans per round in lazy mode");
    pipe->add_option("--restarts", restarts, "collapse restart attempts per neighborhood");
    add_seed(pipe);
    add_out(pipe);

    CLI::App* suite =
        app.add_subcommand("lemma-suite", "link, ball, filtration, and gluing property suite");
    add_input(suite);
    suite->add_option("--level", level,
                      "declared level n: sphere/link cd bounds compare against n-1");
    suite->add_option("--restarts", restarts, "collapse restart attempts");
    suite->add_option("--cell-budget", cell_budget, "cell cap for homology checks");
    add_seed(suite);
    add_out(suite);

    CLI::App* family = app.add_subcommand(
        "family-report", "vertex counts and abelianization orders across cycle lengths");
    family->add_option("--k", ks, "cycle lengths to compare")->delimiter(',');
    add_out(family);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*thicken) return do_thicken(cycle, complex_path, alpha_path, identity, out);
        if (*legal)
            return do_check_legal(cycle, complex_path, exhaustive, samples, sm->count() > 0,
                                  orbit_budget, seed, out);
        if (*vcd) return do_vcd(cycle, complex_path, coeffs, cell_budget, out);
        if (*davis)
            return do_davis_quotient(cycle, graph_path, complex_path, cell_budget,
                                     quotient_budget, out);
        if (*verify) return do_verify_properties(cycle, complex_path, restarts, seed, out);
        if (*pipe) {
            PipelineConfig cfg;
            cfg.cycle = cycle;
            cfg.complex_path = complex_path;
            cfg.iterations = iterations;
            cfg.cell_budget = cell_budget;
            cfg.orbit_budget = orbit_budget;
            cfg.quotient_budget = quotient_budget;
            cfg.samples = samples;
            cfg.neighborhood_samples = neighborhood_samples;
            cfg.restarts = restarts;
            cfg.seed = seed;
            return do_pipeline(cfg, out);
        }
        if (*suite)
            return do_lemma_suite(cycle, complex_path, level, restarts, seed, cell_budget,
                                  out);
        if (*family) return do_family_report(ks, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
