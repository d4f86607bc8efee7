#pragma once

// Finite cube complexes stored by maximal cubes. A cube of dimension d is a
// vertex array of length 2^d indexed by bit-strings; identity is by vertex
// set, with a canonical labeling (minimum vertex at mask 0, axes sorted by
// neighbor id). The closure is computed and validated at construction.
// Two adjacency relations coexist: edge adjacency (1-cubes) and cube sharing
// (cubical distance 1); corners use the former, distances the latter.

#include "fibercox/collapse.hpp"
#include "fibercox/graph.hpp"
#include "fibercox/simplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fibercox {

struct Cube {
    int dim = 0;
    std::vector<int> verts;  // size 1<<dim; verts[mask] = vertex id at bit-string mask

    std::vector<int> sorted() const;
    bool operator==(const Cube& o) const { return dim == o.dim && verts == o.verts; }
};

// canonical relabeling; throws on wrong array length or repeated vertices
Cube canonical_cube(const Cube& raw);

// face of c with coordinate `axis` frozen to `value`; inherits c's labeling
Cube cube_face(const Cube& c, int axis, int value);

// sign of the hyperoctahedral transformation taking labeling a to labeling b
// (same vertex set); throws if the two labelings are not cube-isomorphic
int labeling_sign(const Cube& a, const Cube& b);

struct CubeComplex {
    std::vector<std::string> vertices;
    std::vector<Cube> maximal;                    // canonical, deduped, none a face of another
    std::vector<Cube> closure;                    // all cubes, sorted by (dim, vertex set)
    std::vector<std::vector<int>> vert_cubes;     // vertex id -> closure ids containing it
    std::vector<BitVec> share_adj;                // u~v iff distinct and in a common cube
    std::vector<BitVec> edge_adj;                 // u~v iff joined by a 1-cube

    int n() const { return int(vertices.size()); }
    int dim() const;
    int index(const std::string& label) const;    // throws on unknown label
    int id_of(const std::vector<int>& sorted_verts) const;  // closure id, -1 if absent
    const Cube& cube(int id) const { return closure[std::size_t(id)]; }
    // true iff `face` (a closure cube) is a face of closure cube `of`
    bool is_face_of(int face, int of) const;
    Graph skeleton() const;                        // edge adjacency as a Graph

private:
    std::map<std::vector<int>, int> closure_index_;
    friend CubeComplex make_cube_complex(std::vector<std::string>, std::vector<Cube>);
};

// canonicalizes, drops cubes that are faces of others, computes + validates
// the closure ("vertex set determines cube" is enforced here)
CubeComplex make_cube_complex(std::vector<std::string> vertex_labels,
                              std::vector<Cube> maximal_cubes);

// graph as a 1-dimensional cube complex (vertices + edges)
CubeComplex cube_complex_from_graph(const Graph& g);

// connected components of the cube-sharing graph, each sorted
std::vector<std::vector<int>> cube_components(const CubeComplex& X);

// distances from v in the cube-sharing graph; -1 where unreachable (no throw)
std::vector<int> cubical_distances_from(const CubeComplex& X, int v);

// shortest chain of common-cube hops; throws with a component witness when
// v and w lie in different components
int cubical_distance(const CubeComplex& X, int v, int w);

// the unique inclusion-minimal cube containing S; throws "no common cube"
// when none exists and a 5-largeness diagnostic when minimality is ambiguous
Cube minimal_cube(const CubeComplex& X, const std::vector<int>& S);

// abstract link of a closure cube: one vertex per codimension-1 coface
// (labeled by the extra vertices, comma-joined), simplices = cofaces sharing
// a cube; vertex_link is the dimension-0 case
SimplicialComplex cube_link(const CubeComplex& X, int cube_id);
SimplicialComplex vertex_link(const CubeComplex& X, int v);

struct CornerCheck {
    bool ok = true;
    int cube = -1;    // closure id of the witness cube
    int vertex = -1;  // corner with no edge-neighbor outside the cube
};
CornerCheck check_no_isolated_corners(const CubeComplex& X);

struct DisconnectionCheck {
    bool ok = true;
    int cube = -1;                        // closure id of the removed cube
    std::vector<std::vector<int>> parts;  // components left behind (empty when emptied)
};
// removal is closed: a cube survives iff it shares no vertex with the removed
// cube; the survivors must be nonempty and connected
DisconnectionCheck check_no_disconnecting_cubes(const CubeComplex& X);

// union of the closed cubes meeting the (r-1)-ball around v: r=1 is the star
// of v, r=2 the star of the closed 1-ball; every vertex of the result is at
// cubical distance <= r from v
CubeComplex cubical_neighborhood(const CubeComplex& X, int v, int r);

enum class NeighborhoodVerdict { contractible, inconclusive };

struct FiveLargeCertificate {
    bool locally_5_large = true;
    int link_failure_vertex = -1;          // first vertex whose link fails, if any
    LargenessCheck link_failure;
    std::vector<NeighborhoodVerdict> neighborhoods;  // per vertex
    bool certified = false;                // all links 5-large and all neighborhoods collapse
};
FiveLargeCertificate check_5_large(const CubeComplex& X,
                                   int restarts = kDefaultCollapseRestarts,
                                   std::uint64_t seed = 0);

// cells of the cube closure as a graded poset (for the collapse driver)
CellPoset cell_poset_from_cubes(const CubeComplex& X);

} // namespace fibercox
