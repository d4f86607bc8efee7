#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibercox/cube_complex.hpp"
#include "fibercox/moves.hpp"
#include "fibercox/thickening.hpp"

#include <algorithm>
#include <string>

using namespace fibercox;

namespace {

State state_of(int n, std::initializer_list<int> ones) {
    State s{std::size_t(n)};
    for (int v : ones) s.set(std::size_t(v));
    return s;
}

int pair_index(const Thickening& th, int v, int w) {
    for (int y = 0; y < th.n(); ++y)
        if (th.pairs[std::size_t(y)] == std::pair<int, int>(v, w)) return y;
    throw std::logic_error("pair not found");
}

} // namespace

TEST_CASE("state legality on the pentagon graph") {
    Graph c5 = cycle_graph(5);
    CHECK(is_legal_state(c5, state_of(5, {0, 1})).legal);
    CHECK(is_legal_state(c5, state_of(5, {2, 3, 4})).legal);

    LegalState split = is_legal_state(c5, state_of(5, {0, 2}));
    CHECK(!split.legal);
    CHECK(!split.witness.empty());

    LegalState empty_side = is_legal_state(c5, state_of(5, {0, 1, 2, 3, 4}));
    CHECK(!empty_side.legal);
    CHECK(empty_side.witness.find("empty") != std::string::npos);
}

TEST_CASE("the move predicate constrains the vertex and its neighbors only") {
    Graph c5 = cycle_graph(5);
    CHECK(is_move(c5, 0, state_of(5, {0})));
    CHECK(is_move(c5, "x1", state_of(5, {0, 2})));   // x3 is not a neighbor of x1
    CHECK(!is_move(c5, 0, state_of(5, {0, 1})));     // toggles a neighbor
    CHECK(!is_move(c5, 0, state_of(5, {2})));        // does not toggle x1
    CHECK_THROWS(is_move(c5, "z9", state_of(5, {0})));
}

TEST_CASE("move group bases: disjoint kept, overlapping reduced") {
    auto disjoint = move_group_basis(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(disjoint.size() == 3);

    auto dependent = move_group_basis(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(dependent.size() == 2);  // the third is the GF(2) sum of the others

    auto with_dupes = move_group_basis(4, {{0, 1}, {0, 1}, {2}});
    CHECK(with_dupes.size() == 2);
}

TEST_CASE("canonical state and moves of the pentagon thickening") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening th = build_pair_thickening(C5);

    State s = canonical_state(th);
    for (int y = 0; y < th.n(); ++y) {
        auto [v, w] = th.pairs[std::size_t(y)];
        CHECK(s.get(std::size_t(y)) == (v < w));
    }

    MoveSystem sys = canonical_moves(th);
    CHECK(sys.n == 10);
    CHECK(sys.rank() == 5);
    for (int y = 0; y < th.n(); ++y) {
        std::vector<int> expect = {std::min(y, th.partner[std::size_t(y)]),
                                   std::max(y, th.partner[std::size_t(y)])};
        CHECK(sys.moves[std::size_t(y)] == expect);
        // each toggle really is a move of the thickening's skeleton: it flips
        // both orientations of one pair, and no neighbor of either
        State m = sys.move_state(y);
        CHECK(m.get(std::size_t(y)));
        for (int z : th.neighbors(y)) CHECK(!m.get(std::size_t(z)));
    }

    // the identity thickening records no pairs, so there is nothing canonical
    CHECK_THROWS(canonical_state(build_th1(C5)));
}

TEST_CASE("the pentagon orbit is exhaustively legal") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening th = build_pair_thickening(C5);
    MoveSystem sys = canonical_moves(th);
    State s = canonical_state(th);

    LegalityReport rep = check_legal_orbit(th.complex.skeleton, sys, s);
    CHECK(rep.mode == "exhaustive");
    CHECK(rep.rank == 5);
    CHECK(rep.orbit == 32);
    CHECK(rep.all_legal);
    CHECK(rep.witnesses.empty());
    CHECK(rep.states.size() == 32);
    CHECK(!rep.verdict.empty());

    // the lazy base-level predicate agrees state by state
    LegalityReport lazy = check_legal_orbit_lazy(th, sys, s);
    CHECK(lazy.all_legal);
    CHECK(lazy.orbit == 32);
    for (std::size_t i = 0; i < rep.states.size(); ++i) {
        LegalState direct = is_legal_state(th.complex.skeleton, rep.states[i].state);
        LegalState via_base = is_legal_state_lazy(th, rep.states[i].state);
        CHECK(direct.legal == via_base.legal);
        CHECK(direct.legal == rep.states[i].legal());
    }

    // the exhaustive walker refuses to exceed its budget
    OrbitOptions tight;
    tight.budget = 16;
    CHECK_THROWS(check_legal_orbit(th.complex.skeleton, sys, s, tight));

    // sampled mode: fixed seed, recorded draw count
    OrbitOptions sampled;
    sampled.exhaustive = false;
    sampled.samples = 40;
    sampled.seed = 11;
    LegalityReport sr = check_legal_orbit_lazy(th, sys, s, sampled);
    CHECK(sr.mode == "sampled");
    CHECK(sr.orbit == 40);
    CHECK(sr.seed == 11);
    CHECK(sr.all_legal);
}

TEST_CASE("the hexagon thickening has rank 9 and a fully legal orbit") {
    CubeComplex C6 = cube_complex_from_graph(cycle_graph(6));
    Thickening th = build_pair_thickening(C6);
    CHECK(th.n() == 18);
    MoveSystem sys = canonical_moves(th);
    CHECK(sys.rank() == 9);
    LegalityReport rep = check_legal_orbit_lazy(th, sys, canonical_state(th));
    CHECK(rep.orbit == 512);
    CHECK(rep.all_legal);
}

TEST_CASE("detection tables and blockade cubes for the canonical state") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening th = build_pair_thickening(C5);
    State s = canonical_state(th);

    // x1 and x2 precede both their partners, x4 and x5 follow both
    DetectionTable d0 = detection_function(th, s, 0);
    DetectionTable d1 = detection_function(th, s, 1);
    CHECK(d0.eps == 0);
    for (int v = 0; v < 5; ++v) {
        CHECK(d0.yes.get(std::size_t(v)) == (v >= 2));
        CHECK(d1.yes.get(std::size_t(v)) == (v <= 2));
    }

    BlockadeResult b0 = blockade_cube(C5, th, s, 0);
    CHECK(!b0.vacuous);
    CHECK(b0.n_set == std::vector<int>{0, 1});
    CHECK(b0.cube.sorted() == std::vector<int>{0, 1});  // the edge x1 x2

    BlockadeResult b1 = blockade_cube(C5, th, s, 1);
    CHECK(b1.n_set == std::vector<int>{3, 4});
    CHECK(b1.cube.sorted() == std::vector<int>{3, 4});  // the edge x4 x5

    // a state with every fiber mixed detects everything: both N-sets vacuous
    State mixed{std::size_t(th.n())};
    for (int v = 0; v < 5; ++v) mixed.set(std::size_t(pair_index(th, v, (v + 2) % 5)));
    CHECK(blockade_cube(C5, th, mixed, 0).vacuous);
    CHECK(blockade_cube(C5, th, mixed, 1).vacuous);

    // an N-set spread across non-cube vertices is a hypothesis violation
    State spread = mixed;
    spread.set(std::size_t(pair_index(th, 0, 3)));  // fiber over x1 all ones
    spread.set(std::size_t(pair_index(th, 2, 0)));  // fiber over x3 all ones
    CHECK_THROWS(blockade_cube(C5, th, spread, 0));
}

TEST_CASE("hypothesis certificates: granted and refused") {
    LegalityCertificate ok = certify_legal_by_hypotheses(cube_complex_from_graph(cycle_graph(5)));
    CHECK(ok.granted);
    CHECK(ok.refusal.empty());
    CHECK(ok.note.find("both orientations") != std::string::npos);

    // C4: locally fine, but the wrap-around neighborhoods stay inconclusive
    LegalityCertificate c4 =
        certify_legal_by_hypotheses(cube_complex_from_graph(cycle_graph(4)), 4, 0);
    CHECK(!c4.granted);
    CHECK(c4.refusal.find("inconclusive") != std::string::npos);
    CHECK(c4.refusal.find("x1") != std::string::npos);

    // a single square is refused for its isolated corners, not disconnection
    std::vector<std::string> labels = {"a", "b", "c", "d"};
    Cube sq;
    sq.dim = 2;
    sq.verts = {0, 1, 2, 3};
    LegalityCertificate square =
        certify_legal_by_hypotheses(make_cube_complex(std::move(labels), {sq}));
    CHECK(!square.granted);
    CHECK(square.refusal.find("isolated corner") != std::string::npos);
    CHECK(square.refusal.find("{a, b, c, d}") != std::string::npos);

    // a path has a disconnecting cube once corners pass... but corners fail
    // first at the leaves, so build a complex whose only defect is the cut:
    // two pentagons sharing a single vertex
    Graph wedge = Graph::from_labels({"p1", "p2", "p3", "p4", "p5", "q2", "q3", "q4", "q5"});
    int p[5] = {0, 1, 2, 3, 4};
    int q[5] = {0, 5, 6, 7, 8};
    for (int i = 0; i < 5; ++i) {
        wedge.add_edge(p[i], p[(i + 1) % 5]);
        wedge.add_edge(q[i], q[(i + 1) % 5]);
    }
    LegalityCertificate cut = certify_legal_by_hypotheses(cube_complex_from_graph(wedge), 8, 3);
    CHECK(!cut.granted);
    CHECK(cut.refusal.find("disconnects") != std::string::npos);
    CHECK(cut.refusal.find("{p1}") != std::string::npos);
}
