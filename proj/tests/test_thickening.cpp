#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibercox/cube_complex.hpp"
#include "fibercox/homology.hpp"
#include "fibercox/racg.hpp"
#include "fibercox/davis.hpp"
#include "fibercox/thickening.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace fibercox;

TEST_CASE("pair thickening of the pentagon") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening th = build_pair_thickening(C5);
    CHECK(!th.implicit_mode);
    CHECK(th.n() == 10);  // each vertex has exactly two others at distance >= 2

    // labels are "v|w" with both orders present, paired by the involution
    CHECK(std::find(th.alpha.domain.begin(), th.alpha.domain.end(), "x1|x3") !=
          th.alpha.domain.end());
    for (int y = 0; y < th.n(); ++y) {
        int p = th.partner[std::size_t(y)];
        CHECK(p != y);
        CHECK(th.partner[std::size_t(p)] == y);
        CHECK(th.pairs[std::size_t(y)].first == th.pairs[std::size_t(p)].second);
        CHECK(th.base_of(y) == th.pairs[std::size_t(y)].first);
        CHECK(cubical_distance(C5, th.pairs[std::size_t(y)].first,
                               th.pairs[std::size_t(y)].second) >= 2);
    }

    // every fiber has two points and they span a simplex (same image)
    for (int v = 0; v < 5; ++v) {
        CHECK(th.fibers[std::size_t(v)].size() == 2);
        CHECK(th.contains(th.fibers[std::size_t(v)]));
    }

    // f-vector of the thickening complex: (10, 25, 20, 5)
    auto cells = th.complex.all_simplices();
    int by_dim[4] = {0, 0, 0, 0};
    for (const auto& s : cells) ++by_dim[s.size() - 1];
    CHECK(by_dim[0] == 10);
    CHECK(by_dim[1] == 25);
    CHECK(by_dim[2] == 20);
    CHECK(by_dim[3] == 5);
}

TEST_CASE("thickening adjacency is image-driven") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening th = build_pair_thickening(C5);
    for (int y1 = 0; y1 < th.n(); ++y1)
        for (int y2 = 0; y2 < th.n(); ++y2) {
            int u = th.base_of(y1), v = th.base_of(y2);
            bool expect = (y1 != y2) && (u == v || C5.share_adj[std::size_t(u)].get(std::size_t(v)));
            CHECK(th.adjacent(y1, y2) == expect);
        }
    // neighbor lists agree with the pairwise predicate
    for (int y = 0; y < th.n(); ++y) {
        std::vector<int> nb = th.neighbors(y);
        std::set<int> nbs(nb.begin(), nb.end());
        for (int z = 0; z < th.n(); ++z)
            CHECK(nbs.count(z) == std::size_t(th.adjacent(y, z)));
    }
}

TEST_CASE("identity thickening reproduces the base") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening th1 = build_th1(C5);
    CHECK(th1.n() == 5);
    for (int v = 0; v < 5; ++v) CHECK(th1.fibers[std::size_t(v)] == std::vector<int>{v});
    CHECK(th1.alpha.domain == C5.vertices);
    HomotopyAudit audit = homotopy_audit(th1);
    CHECK(audit.ok);
    // the identity is a section of itself and spans the whole complex
    CHECK(section_retraction_check(th1, {0, 1, 2, 3, 4}));
}

TEST_CASE("custom alpha maps are validated") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    AlphaMap missing;
    missing.domain = {"y1", "y2"};
    missing.to_base = {0, 1};
    CHECK_THROWS_WITH_AS(build_th_alpha(C5, missing), doctest::Contains("x3"),
                         std::invalid_argument);

    AlphaMap skew;
    skew.domain = {"y1"};
    skew.to_base = {0, 1};  // length mismatch
    CHECK_THROWS(build_th_alpha(C5, skew));

    AlphaMap oob;
    oob.domain = {"y1", "y2", "y3", "y4", "y5"};
    oob.to_base = {0, 1, 2, 3, 9};
    CHECK_THROWS(build_th_alpha(C5, oob));

    // a doubled fiber over one vertex is fine and homotopy-neutral
    AlphaMap doubled;
    doubled.domain = {"a0", "a1", "b", "c", "d", "e"};
    doubled.to_base = {0, 0, 1, 2, 3, 4};
    Thickening th = build_th_alpha(C5, doubled);
    CHECK(th.n() == 6);
    CHECK(th.fibers[0].size() == 2);
    CHECK(homotopy_audit(th).ok);
    CHECK(section_retraction_check(th, {0, 2, 3, 4, 5}));
    CHECK(section_retraction_check(th, {1, 2, 3, 4, 5}));
    // not a section at all: y=1 also lies over the base vertex of y=0, so
    // every later slot projects one vertex short
    CHECK_THROWS_WITH_AS(section_retraction_check(th, {0, 1, 2, 3, 4}),
                         doctest::Contains("not a section"), std::invalid_argument);
}

TEST_CASE("pair thickening refuses bases with no distant pairs") {
    std::vector<std::string> labels = {"a", "b", "c", "d"};
    Cube sq;
    sq.dim = 2;
    sq.verts = {0, 1, 2, 3};
    CubeComplex S = make_cube_complex(std::move(labels), {sq});
    CHECK_THROWS_WITH_AS(build_pair_thickening(S), doctest::Contains("thickening empty"),
                         std::runtime_error);
}

TEST_CASE("homotopy audit agrees with direct Betti comparison") {
    // spot-check the audit against homology computed by hand on both sides
    for (int k : {4, 5, 6}) {
        CubeComplex Ck = cube_complex_from_graph(cycle_graph(k));
        Thickening th = build_pair_thickening(Ck);
        HomologyResult H = homology(chain_complex(th.complex), Coeffs::Z, true);
        HomologyResult HB = homology(chain_complex(Ck), Coeffs::Z, true);
        bool same = true;
        for (std::size_t d = 0; d < std::max(H.groups.size(), HB.groups.size()); ++d) {
            long long a = d < H.groups.size() ? H.groups[d].betti : 0;
            long long b = d < HB.groups.size() ? HB.groups[d].betti : 0;
            if (a != b) same = false;
        }
        CHECK(homotopy_audit(th).ok == same);
        CHECK(homotopy_audit(th).ok);  // these thickenings are circles too
    }
    CHECK_THROWS(homotopy_audit(build_pair_thickening(
        cube_complex_from_graph(cycle_graph(5)), /*implicit_threshold=*/4)));
}

TEST_CASE("implicit mode serves adjacency without a global complex") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening full = build_pair_thickening(C5);
    Thickening lazy = build_pair_thickening(C5, /*implicit_threshold=*/4);
    CHECK(lazy.implicit_mode);
    CHECK(lazy.n() == full.n());
    CHECK(lazy.alpha.domain == full.alpha.domain);
    for (int y1 = 0; y1 < full.n(); ++y1)
        for (int y2 = 0; y2 < full.n(); ++y2)
            CHECK(lazy.adjacent(y1, y2) == full.adjacent(y1, y2));
    // same-fiber sets span simplices; a pair and its reverse never do
    CHECK(lazy.contains(lazy.fibers[std::size_t(lazy.base_of(0))]));
    CHECK(!lazy.contains({0, lazy.partner[0]}));
    // the explicit complex is absent by design
    CHECK(lazy.complex.n() == 0);
}

TEST_CASE("join decomposition of simplex links") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    Thickening th = build_pair_thickening(C5);

    // single vertex: box is its image vertex, lk' is its fiber partner
    JoinDecomposition d1 = link_join_decomposition(th, {0});
    CHECK(d1.join_ok);
    CHECK(d1.prime_simplex_ok);
    CHECK(d1.homology_ok);
    CHECK(d1.box.dim == 0);
    CHECK(d1.lk_prime.size() == 1);  // the other pair over the same base vertex

    // a whole fiber: box is still the image vertex, lk' empty
    int v0 = th.base_of(0);
    JoinDecomposition d2 = link_join_decomposition(th, th.fibers[std::size_t(v0)]);
    CHECK(d2.join_ok);
    CHECK(d2.lk_prime.empty());

    // an edge over a base edge: box is the base edge
    int other = -1;
    for (int y = 1; y < th.n(); ++y)
        if (th.adjacent(0, y) && th.base_of(y) != th.base_of(0)) {
            other = y;
            break;
        }
    REQUIRE(other >= 0);
    JoinDecomposition d3 = link_join_decomposition(th, {0, other});
    CHECK(d3.join_ok);
    CHECK(d3.prime_simplex_ok);
    CHECK(d3.homology_ok);
    CHECK(d3.box.dim == 1);
}

TEST_CASE("base square witnesses: cycles, and the wrapped level-2 quotient") {
    CubeComplex C4 = cube_complex_from_graph(cycle_graph(4));
    auto w4 = base_square_witness(C4, 0);
    REQUIRE(w4.has_value());
    CHECK((*w4)[0] == 0);
    // consecutive share-distance 1, diagonals >= 2
    CHECK(cubical_distance(C4, (*w4)[0], (*w4)[2]) >= 2);
    CHECK(cubical_distance(C4, (*w4)[1], (*w4)[3]) >= 2);

    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    for (int u = 0; u < 5; ++u) CHECK(!base_square_witness(C5, u).has_value());

    // the level-2 quotient of the pentagon group wraps every non-commuting
    // pair into a genuine chordless square through every vertex
    RACG G = racg_from_graph(cycle_graph(5));
    DavisQuotient Q = level2_quotient(G);
    for (int u = 0; u < Q.complex.n(); u += 7) CHECK(base_square_witness(Q.complex, u).has_value());
}
