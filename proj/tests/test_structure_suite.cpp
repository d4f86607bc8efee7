#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibercox/cube_complex.hpp"
#include "fibercox/davis.hpp"
#include "fibercox/racg.hpp"
#include "fibercox/structure_checks.hpp"
#include "fibercox/thickening.hpp"

#include <string>

using namespace fibercox;

TEST_CASE("cube-link iteration on the solid cube and the pentagon quotient") {
    std::vector<std::string> labels;
    for (int m = 0; m < 8; ++m) labels.push_back("v" + std::to_string(m));
    Cube top;
    top.dim = 3;
    top.verts = {0, 1, 2, 3, 4, 5, 6, 7};
    CubeComplex X = make_cube_complex(std::move(labels), {top});
    for (int id = 0; id < int(X.closure.size()); ++id)
        for (int v : X.cube(id).verts) CHECK(cube_link_iteration_check(X, id, v));

    // the full sweep over the pentagon group's level-2 quotient
    DavisQuotient Q = level2_quotient(racg_from_graph(cycle_graph(5)));
    std::size_t cases = 0;
    for (int id = 0; id < int(Q.complex.closure.size()); ++id)
        for (int v : Q.complex.cube(id).verts) {
            CHECK(cube_link_iteration_check(Q.complex, id, v));
            ++cases;
        }
    CHECK(cases == 32 + 2 * 80 + 4 * 40);  // every (cube, corner) incidence
}

TEST_CASE("ball checks on the pentagon thickening") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening th = build_pair_thickening(C5);
    for (const Simplex& s : th.complex.all_simplices()) {
        CHECK(ball_fullness_check(th.complex, s));
        CHECK(ball_collapse_check(th.complex, s, 8, 0));
    }
}

TEST_CASE("minimal-cube oracle over all pairs of the quotient") {
    DavisQuotient Q = level2_quotient(racg_from_graph(cycle_graph(5)));
    for (int u = 0; u < Q.complex.n(); u += 3)
        for (int v = u; v < Q.complex.n(); v += 5)
            CHECK(minimal_cube_oracle_check(Q.complex, u == v ? std::vector<int>{u}
                                                              : std::vector<int>{u, v}));
}

TEST_CASE("sphere filtration reports on the thickening") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening th = build_pair_thickening(C5);
    for (const Simplex& s : th.complex.all_simplices()) {
        FiltrationReport rep = sphere_filtration_report(th.complex, s, /*n=*/2, 8, 0);
        CHECK(rep.ok);
        CHECK(rep.failure.empty());
        CHECK(rep.separation);
        CHECK(rep.identification);
        CHECK(rep.boundary_ok);
    }
}

TEST_CASE("full suite on the pentagon thickening finds nothing") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening th = build_pair_thickening(C5);
    SuiteOptions opts;
    opts.level = 2;
    opts.restarts = 8;
    SuiteReport rep = structure_suite(th, opts);
    CHECK(rep.ok);
    CHECK(rep.counterexamples == 0);
    CHECK(rep.cases > 0);
    for (const SuiteCheck& c : rep.checks) {
        CHECK(c.ok());
        CHECK(c.cases > 0);
        CHECK(c.witness.empty());
    }
}

TEST_CASE("full suite on identity thickenings of cycles") {
    for (int k : {5, 6}) {
        Thickening th1 = build_th1(cube_complex_from_graph(cycle_graph(k)));
        SuiteOptions opts;
        opts.level = 2;
        opts.restarts = 8;
        SuiteReport rep = structure_suite(th1, opts);
        CHECK(rep.ok);
        CHECK(rep.counterexamples == 0);
    }
}

TEST_CASE("the suite refuses implicit thickenings") {
    Thickening lazy = build_pair_thickening(cube_complex_from_graph(cycle_graph(5)),
                                            /*implicit_threshold=*/4);
    CHECK_THROWS(structure_suite(lazy));
}
