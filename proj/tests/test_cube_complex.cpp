#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibercox/cube_complex.hpp"
#include "fibercox/graph.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace fibercox;

namespace {

// the solid 3-cube on vertices 000..111 (ids 0..7, bit i = axis i)
CubeComplex solid_cube() {
    std::vector<std::string> labels;
    for (int m = 0; m < 8; ++m)
        labels.push_back(std::string{char('0' + ((m >> 2) & 1)), char('0' + ((m >> 1) & 1)),
                                     char('0' + (m & 1))});
    Cube top;
    top.dim = 3;
    top.verts = {0, 1, 2, 3, 4, 5, 6, 7};
    return make_cube_complex(std::move(labels), {top});
}

// two squares glued along an edge: a path of squares
CubeComplex square_path() {
    std::vector<std::string> labels = {"a", "b", "c", "d", "e", "f"};
    Cube s1, s2;
    s1.dim = 2;
    s1.verts = {0, 1, 2, 3};  // square abdc (mask order a,b,c,d)
    s2.dim = 2;
    s2.verts = {2, 3, 4, 5};  // square cdfe sharing edge cd
    return make_cube_complex(std::move(labels), {s1, s2});
}

} // namespace

TEST_CASE("solid cube closure has the right face counts") {
    CubeComplex X = solid_cube();
    CHECK(X.n() == 8);
    CHECK(X.dim() == 3);
    int by_dim[4] = {0, 0, 0, 0};
    for (const Cube& c : X.closure) ++by_dim[c.dim];
    CHECK(by_dim[0] == 8);
    CHECK(by_dim[1] == 12);
    CHECK(by_dim[2] == 6);
    CHECK(by_dim[3] == 1);
    CHECK(X.maximal.size() == 1);

    // edge adjacency is the cube graph, share adjacency is complete
    Graph sk = X.skeleton();
    CHECK(sk.edges.size() == 12);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) CHECK(X.share_adj[std::size_t(u)].get(std::size_t(v)));
}

TEST_CASE("construction validates its input") {
    Cube bad;
    bad.dim = 2;
    bad.verts = {0, 1, 2};  // wrong length
    CHECK_THROWS(make_cube_complex({"a", "b", "c"}, {bad}));

    Cube repeated;
    repeated.dim = 1;
    repeated.verts = {0, 0};
    CHECK_THROWS(make_cube_complex({"a", "b"}, {repeated}));

    // faces of other maximal cubes are silently dropped
    CubeComplex X = solid_cube();
    Cube edge;
    edge.dim = 1;
    edge.verts = {0, 1};
    std::vector<Cube> cubes = X.maximal;
    cubes.push_back(edge);
    CubeComplex Y = make_cube_complex(X.vertices, cubes);
    CHECK(Y.maximal.size() == 1);
}

TEST_CASE("cube identity is by vertex set") {
    CubeComplex X = square_path();
    CHECK(X.closure.size() == 6 + 7 + 2);  // 6 vertices, 7 edges, 2 squares
    int sq = X.id_of({0, 1, 2, 3});
    CHECK(sq >= 0);
    CHECK(X.cube(sq).dim == 2);
    CHECK(X.id_of({0, 1, 4}) == -1);
    int cd = X.id_of({2, 3});
    CHECK(X.is_face_of(cd, sq));
    CHECK(!X.is_face_of(sq, cd));
}

TEST_CASE("cubical distances on a cycle") {
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    auto d = cubical_distances_from(C5, 0);
    CHECK(d == std::vector<int>{0, 1, 2, 2, 1});
    CHECK(cubical_distance(C5, 0, 2) == 2);

    // matches the Floyd–Warshall oracle everywhere
    auto fw = oracle::share_distances(C5);
    for (int v = 0; v < 5; ++v) CHECK(cubical_distances_from(C5, v) == fw[std::size_t(v)]);

    // distance-2 arcs: the 2-neighborhood of a vertex covers the whole cycle
    CubeComplex nb = cubical_neighborhood(C5, 0, 2);
    CHECK(nb.n() == 5);
    CubeComplex nb1 = cubical_neighborhood(C5, 0, 1);
    CHECK(nb1.n() == 3);
}

TEST_CASE("disconnected complexes are reported, distances refuse to lie") {
    Graph g = Graph::from_labels({"p", "q", "r", "s"});
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CubeComplex X = cube_complex_from_graph(g);
    auto comps = cube_components(X);
    CHECK(comps.size() == 2);
    CHECK(cubical_distances_from(X, 0)[2] == -1);
    CHECK_THROWS(cubical_distance(X, 0, 2));
}

TEST_CASE("minimal cubes agree with the brute-force intersection oracle") {
    for (const CubeComplex& X : {solid_cube(), square_path()}) {
        for (int u = 0; u < X.n(); ++u)
            for (int v = u; v < X.n(); ++v) {
                std::vector<int> S = (u == v) ? std::vector<int>{u} : std::vector<int>{u, v};
                auto expect = oracle::min_cube_brute(X, S);
                if (!expect) {
                    CHECK_THROWS(minimal_cube(X, S));
                } else {
                    Cube got = minimal_cube(X, S);
                    CHECK(got.sorted() == *expect);
                }
            }
    }
}

TEST_CASE("vertex and cube links") {
    CubeComplex X = solid_cube();
    // the link of a corner of the 3-cube is a filled triangle
    SimplicialComplex lk = vertex_link(X, 0);
    CHECK(lk.n() == 3);
    CHECK(lk.maximal_simplices().size() == 1);
    CHECK(lk.maximal_simplices()[0].size() == 3);

    // the link of an edge is a filled edge (one vertex per adjacent square)
    int e = X.id_of({0, 1});
    SimplicialComplex elk = cube_link(X, e);
    CHECK(elk.n() == 2);
    CHECK(elk.maximal_simplices().size() == 1);

    // the link of the top cube is empty
    int top = X.id_of({0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(cube_link(X, top).n() == 0);

    // on the square path, the shared-edge corners see both squares, unjoined
    CubeComplex P = square_path();
    SimplicialComplex plk = vertex_link(P, P.index("c"));
    CHECK(plk.n() == 3);                        // neighbors a, d, e
    CHECK(plk.maximal_simplices().size() == 2);  // edges {a,d} and {d,e}... via squares
}

TEST_CASE("largeness certificates for small complexes") {
    FiveLargeCertificate c5 = check_5_large(cube_complex_from_graph(cycle_graph(5)));
    CHECK(c5.locally_5_large);
    CHECK(c5.certified);
    for (auto v : c5.neighborhoods) CHECK(v == NeighborhoodVerdict::contractible);

    // C4 = the hollow square: links fine, but 2-neighborhoods wrap the circle
    FiveLargeCertificate c4 = check_5_large(cube_complex_from_graph(cycle_graph(4)), 4, 0);
    CHECK(c4.locally_5_large);
    CHECK(!c4.certified);
    CHECK(std::count(c4.neighborhoods.begin(), c4.neighborhoods.end(),
                     NeighborhoodVerdict::inconclusive) == 4);

    // a single solid square is certified: contractible and tiny
    std::vector<std::string> labels = {"a", "b", "c", "d"};
    Cube sq;
    sq.dim = 2;
    sq.verts = {0, 1, 2, 3};
    FiveLargeCertificate sqc = check_5_large(make_cube_complex(std::move(labels), {sq}));
    CHECK(sqc.certified);
}

TEST_CASE("isolated corners and disconnecting cubes") {
    // the lone square: every corner is isolated
    std::vector<std::string> labels = {"a", "b", "c", "d"};
    Cube sq;
    sq.dim = 2;
    sq.verts = {0, 1, 2, 3};
    CubeComplex S = make_cube_complex(std::move(labels), {sq});
    CornerCheck cc = check_no_isolated_corners(S);
    CHECK(!cc.ok);
    CHECK(cc.cube == S.id_of({0, 1, 2, 3}));
    CHECK(cc.vertex >= 0);

    // C5 has neither problem
    CubeComplex C5 = cube_complex_from_graph(cycle_graph(5));
    CHECK(check_no_isolated_corners(C5).ok);
    CHECK(check_no_disconnecting_cubes(C5).ok);

    // a path: deleting the closed star of an interior vertex separates it
    Graph p4 = Graph::from_labels({"p", "q", "r", "s"});
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CubeComplex P = cube_complex_from_graph(p4);
    DisconnectionCheck dc = check_no_disconnecting_cubes(P);
    CHECK(!dc.ok);
    CHECK(dc.cube == P.id_of({1}));  // the first offender in closure order: vertex q
    CHECK(dc.parts == std::vector<std::vector<int>>{{0}, {2, 3}});
}

TEST_CASE("the cube poset collapses the solid cube") {
    CubeComplex X = solid_cube();
    CellPoset poset = cell_poset_from_cubes(X);
    CHECK(poset.size() == X.closure.size());
    CHECK_NOTHROW(poset.validate());
    CollapseReport rep = collapse_poset(poset);
    CHECK(rep.collapsible());
}
