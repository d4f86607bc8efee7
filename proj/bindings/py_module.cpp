// Python bindings for the fibercox core. Operations accept and return plain
// Python dicts/lists in the same JSON schemas the CLI reads and writes, so
// artifacts move freely between the two front ends.

#include "fibercox/json_io.hpp"
#include "fibercox/moves.hpp"
#include "fibercox/pipeline.hpp"
#include "fibercox/racg.hpp"
#include "fibercox/structure_checks.hpp"
#include "fibercox/thickening.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace fibercox;

namespace {

// Json <-> Python through the stdlib json module: small, lossless for the
// schemas used here, and it keeps key order.
py::object to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(dump_json(j));
}

Json from_py(const py::object& o) {
    std::string s = py::cast<std::string>(py::module_::import("json").attr("dumps")(o));
    return Json::parse(s);
}

CubeComplex as_cube(const Json& j) {
    switch (detect_kind(j)) {
        case JsonKind::cube: return cube_complex_from_json(j);
        case JsonKind::graph: return cube_complex_from_graph(graph_from_json(j));
        default: throw std::invalid_argument("expected a cube complex or graph object");
    }
}

Thickening as_thickening(const Json& j, bool identity) {
    if (detect_kind(j) == JsonKind::thickening) return thickening_from_json(j);
    CubeComplex X = as_cube(j);
    return identity ? build_th1(X) : build_pair_thickening(X);
}

SimplicialComplex as_simplicial(const Json& j) {
    switch (detect_kind(j)) {
        case JsonKind::simplicial: return complex_from_json(j);
        case JsonKind::graph: return flag_complex(graph_from_json(j));
        case JsonKind::cube: return build_pair_thickening(cube_complex_from_json(j)).complex;
        case JsonKind::thickening: {
            Thickening th = thickening_from_json(j);
            if (th.implicit_mode)
                throw std::invalid_argument("the thickening is implicit");
            return th.complex;
        }
        default: throw std::invalid_argument("unrecognized object kind");
    }
}

Coeffs parse_coeffs(const std::string& s) {
    if (s == "z") return Coeffs::Z;
    if (s == "q") return Coeffs::Q;
    if (s == "gf2") return Coeffs::GF2;
    throw std::invalid_argument("coeffs must be one of \"z\", \"q\", \"gf2\"");
}

Json degree_group_to_json(const DegreeGroup& g) {
    Json j;
    j["betti"] = g.betti;
    Json t = Json::array();
    for (const Int& d : g.torsion) t.push_back(d.str());
    j["torsion"] = std::move(t);
    return j;
}

Json homology_result_to_json(const HomologyResult& r, const ChainComplex& C) {
    Json j;
    j["reduced"] = r.reduced;
    Json groups = Json::array();
    for (const auto& g : r.groups) groups.push_back(degree_group_to_json(g));
    j["groups"] = std::move(groups);
    if (r.reduced) j["minus_one"] = degree_group_to_json(r.minus_one);
    Json f = Json::array();
    for (const auto& cells : C.cells) f.push_back(cells.size());
    j["f_vector"] = std::move(f);
    j["euler"] = C.euler();
    return j;
}

// graph -> flag complex, cube complex -> cubical chain complex, otherwise the
// complex itself; this is the shape (co)homology callers expect
ChainComplex chain_of(const Json& j, std::size_t budget) {
    if (detect_kind(j) == JsonKind::cube) return chain_complex(cube_complex_from_json(j));
    return chain_complex(as_simplicial(j), budget);
}

} // namespace

PYBIND11_MODULE(_fibercox, m) {
    m.doc() = "Pair thickenings of cube complexes: legality orbits, exact "
              "(co)homology, vcd, level-2 quotients, and certificate chains. "
              "All functions exchange plain dicts in the CLI's JSON schemas.";

    m.def(
        "cycle_complex", [](int k) { return to_py(cube_complex_to_json(cycle_complex(k))); },
        py::arg("k"), "Cube complex of the cycle graph C_k (k >= 3).");

    m.def(
        "flag_complex",
        [](const py::object& graph) {
            return to_py(complex_to_json(flag_complex(graph_from_json(from_py(graph)))));
        },
        py::arg("graph"), "Flag simplicial complex of a graph object.");

    m.def(
        "detect_kind",
        [](const py::object& obj) -> std::string {
            switch (detect_kind(from_py(obj))) {
                case JsonKind::graph: return "graph";
                case JsonKind::simplicial: return "simplicial";
                case JsonKind::cube: return "cube";
                case JsonKind::alpha: return "alpha";
                case JsonKind::thickening: return "thickening";
                default: return "unknown";
            }
        },
        py::arg("obj"), "Schema kind of a JSON-shaped object.");

    m.def(
        "thicken",
        [](const py::object& obj, bool identity, std::size_t implicit_threshold) {
            CubeComplex X = as_cube(from_py(obj));
            Thickening th = identity ? build_th1(X, implicit_threshold)
                                     : build_pair_thickening(X, implicit_threshold);
            return to_py(thickening_to_json(th));
        },
        py::arg("obj"), py::arg("identity") = false,
        py::arg("implicit_threshold") = kImplicitThickeningThreshold,
        "Pair thickening (or identity thickening) of a cube complex or graph.");

    m.def(
        "check_legal",
        [](const py::object& obj, const py::object& exhaustive, int samples,
           std::uint64_t seed, std::uint64_t orbit_budget, int restarts) {
            Json in = from_py(obj);
            Thickening th;
            bool have_thickening = true;
            std::string build_error;
            if (detect_kind(in) == JsonKind::thickening) {
                th = thickening_from_json(in);
            } else {
                th.base = as_cube(in);
                try {
                    th = build_pair_thickening(th.base);
                } catch (const std::exception& e) {
                    have_thickening = false;
                    build_error = e.what();
                }
            }
            LegalityCertificate cert = certify_legal_by_hypotheses(th.base, restarts, seed);
            Json out;
            out["certificate"] = legality_certificate_to_json(cert, th.base);
            if (!have_thickening) {
                out["report"] = nullptr;
                out["note"] = build_error;
                out["ok"] = false;
                return to_py(out);
            }
            MoveSystem sys = canonical_moves(th);
            State S = canonical_state(th);
            OrbitOptions opts;
            opts.samples = samples;
            opts.seed = seed;
            opts.budget = orbit_budget;
            opts.exhaustive = exhaustive.is_none()
                                  ? (sys.rank() < 63 &&
                                     (std::uint64_t(1) << sys.rank()) <= orbit_budget)
                                  : py::cast<bool>(exhaustive);
            LegalityReport rep = th.implicit_mode
                                     ? check_legal_orbit_lazy(th, sys, S, opts)
                                     : check_legal_orbit(th.complex.skeleton, sys, S, opts);
            out["report"] = legality_report_to_json(rep);
            out["ok"] = cert.granted && rep.all_legal;
            return to_py(out);
        },
        py::arg("obj"), py::arg("exhaustive") = py::none(), py::arg("samples") = 256,
        py::arg("seed") = std::uint64_t(0), py::arg("orbit_budget") = kDefaultOrbitBudget,
        py::arg("restarts") = kDefaultCollapseRestarts,
        "Hypothesis certificate plus legality of the canonical move orbit.");

    m.def(
        "vcd",
        [](const py::object& obj, const std::string& coeffs, std::size_t cell_budget) {
            SimplicialComplex L = as_simplicial(from_py(obj));
            VcdResult r = vcd_racg(L, parse_coeffs(coeffs), cell_budget);
            return to_py(vcd_result_to_json(r, L));
        },
        py::arg("obj"), py::arg("coeffs") = "z", py::arg("cell_budget") = kDefaultCellBudget,
        "Virtual cohomological dimension sweep of the group defined by a complex.");

    m.def(
        "homology",
        [](const py::object& obj, const std::string& coeffs, bool reduced,
           std::size_t cell_budget) {
            ChainComplex C = chain_of(from_py(obj), cell_budget);
            return to_py(homology_result_to_json(homology(C, parse_coeffs(coeffs), reduced), C));
        },
        py::arg("obj"), py::arg("coeffs") = "z", py::arg("reduced") = false,
        py::arg("cell_budget") = kDefaultCellBudget,
        "Exact homology (Betti numbers and torsion) of a complex.");

    m.def(
        "cohomology",
        [](const py::object& obj, const std::string& coeffs, bool reduced,
           std::size_t cell_budget) {
            ChainComplex C = chain_of(from_py(obj), cell_budget);
            return to_py(
                homology_result_to_json(cohomology(C, parse_coeffs(coeffs), reduced), C));
        },
        py::arg("obj"), py::arg("coeffs") = "z", py::arg("reduced") = false,
        py::arg("cell_budget") = kDefaultCellBudget,
        "Exact cohomology of a complex (universal coefficients over Z).");

    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<long long>>& rows) {
            SparseIntMatrix M;
            M.rows = int(rows.size());
            M.cols = rows.empty() ? 0 : int(rows.front().size());
            M.col_entries.assign(std::size_t(M.cols), {});
            for (int r = 0; r < M.rows; ++r) {
                if (int(rows[std::size_t(r)].size()) != M.cols)
                    throw std::invalid_argument("ragged matrix");
                for (int c = 0; c < M.cols; ++c) {
                    long long v = rows[std::size_t(r)][std::size_t(c)];
                    if (v != 0) M.col_entries[std::size_t(c)].push_back({r, int(v)});
                }
            }
            SmithResult s = smith_normal_form(M);
            Json j;
            j["rank"] = s.rank;
            Json f = Json::array();
            for (const Int& d : s.invariant_factors) f.push_back(d.str());
            j["invariant_factors"] = std::move(f);
            return to_py(j);
        },
        py::arg("rows"), "Smith normal form of an integer matrix (dense rows).");

    m.def(
        "davis_quotient",
        [](const py::object& obj, std::size_t cell_budget, std::size_t quotient_budget) {
            Json in = from_py(obj);
            RACG G;
            switch (detect_kind(in)) {
                case JsonKind::graph: G = racg_from_graph(graph_from_json(in), cell_budget); break;
                case JsonKind::simplicial:
                    G = racg_from_complex(complex_from_json(in), cell_budget);
                    break;
                case JsonKind::thickening: {
                    Thickening th = thickening_from_json(in);
                    if (th.implicit_mode)
                        throw std::invalid_argument("the thickening is implicit");
                    G = racg_from_complex(th.complex, cell_budget);
                    break;
                }
                default:
                    throw std::invalid_argument("expected a graph, complex, or thickening");
            }
            DavisQuotient q = level2_quotient(G, quotient_budget);
            int expected_cd = vcd_racg(flag_complex(G.gamma), Coeffs::Z, cell_budget).vcd;
            QuotientReport rep = verify_quotient_properties(q, expected_cd);
            Json out;
            out["complex"] = cube_complex_to_json(q.complex);
            out["f_vector"] = q.f_vector;
            out["report"] = quotient_report_to_json(rep, q.complex);
            out["ok"] = rep.ok;
            return to_py(out);
        },
        py::arg("obj"), py::arg("cell_budget") = kDefaultCellBudget,
        py::arg("quotient_budget") = kDefaultQuotientBudget,
        "Level-2 quotient of the Davis complex of a right-angled Coxeter group.");

    m.def(
        "verify_properties",
        [](const py::object& obj, int restarts, std::uint64_t seed) {
            CubeComplex X = as_cube(from_py(obj));
            FiveLargeCertificate c = check_5_large(X, restarts, seed);
            CornerCheck corners = check_no_isolated_corners(X);
            DisconnectionCheck disc = check_no_disconnecting_cubes(X);
            bool connected = cube_components(X).size() == 1;
            Json j;
            j["five_large"] = five_large_to_json(c, X);
            j["corners"] = corner_check_to_json(corners, X);
            j["disconnection"] = disconnection_check_to_json(disc, X);
            j["connected"] = connected;
            j["ok"] = c.certified && corners.ok && disc.ok && connected;
            return to_py(j);
        },
        py::arg("obj"), py::arg("restarts") = kDefaultCollapseRestarts,
        py::arg("seed") = std::uint64_t(0),
        "5-largeness, corner, disconnection, and connectivity checks.");

    m.def(
        "lemma_suite",
        [](const py::object& obj, int level, int restarts, std::uint64_t seed,
           std::size_t cell_budget) {
            Thickening th = as_thickening(from_py(obj), /*identity=*/true);
            if (th.implicit_mode)
                throw std::invalid_argument("the thickening is implicit; the property "
                                            "suite needs an explicit complex");
            SuiteOptions opts;
            opts.level = level;
            opts.restarts = restarts;
            opts.seed = seed;
            opts.budget = cell_budget;
            return to_py(suite_report_to_json(structure_suite(th, opts)));
        },
        py::arg("obj"), py::arg("level") = 1, py::arg("restarts") = kDefaultCollapseRestarts,
        py::arg("seed") = std::uint64_t(0), py::arg("cell_budget") = kDefaultCellBudget,
        "Exhaustive structural property suite over one explicit thickening.");

    m.def(
        "pipeline",
        [](int cycle, int iterations, int restarts, std::uint64_t seed, int samples,
           int neighborhood_samples, std::size_t cell_budget, std::uint64_t orbit_budget,
           std::size_t quotient_budget) {
            PipelineConfig cfg;
            cfg.cycle = cycle;
            cfg.iterations = iterations;
            cfg.restarts = restarts;
            cfg.seed = seed;
            cfg.samples = samples;
            cfg.neighborhood_samples = neighborhood_samples;
            cfg.cell_budget = cell_budget;
            cfg.orbit_budget = orbit_budget;
            cfg.quotient_budget = quotient_budget;
            return to_py(chain_to_json(run_pipeline(cfg)));
        },
        py::arg("cycle") = 5, py::arg("iterations") = 1,
        py::arg("restarts") = kDefaultCollapseRestarts, py::arg("seed") = std::uint64_t(0),
        py::arg("samples") = 256, py::arg("neighborhood_samples") = 64,
        py::arg("cell_budget") = kDefaultCellBudget,
        py::arg("orbit_budget") = kDefaultOrbitBudget,
        py::arg("quotient_budget") = kDefaultQuotientBudget,
        "Iterated thicken/certify/quotient pipeline; returns the certificate chain.");

    m.def(
        "family_report",
        [](const std::vector<int>& ks) { return to_py(family_report_to_json(distinct_family_report(ks))); },
        py::arg("ks"),
        "Vertex counts and abelianization orders for the cycle thickening family.");
}
