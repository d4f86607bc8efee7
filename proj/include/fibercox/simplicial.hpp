#pragma once

// Simplicial complexes in two storage modes: flag-of-graph (simplices are the
// cliques of a 1-skeleton, expanded lazily) and explicit (maximal-face list).
// Includes links, full subcomplexes, combinatorial spheres/balls, the
// closest-face map and the sphere filtration used by the structure checks.

#include "fibercox/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fibercox {

using Simplex = std::vector<int>;  // strictly sorted vertex ids; {} is the empty simplex

constexpr std::size_t kDefaultCellBudget = 10'000'000;

struct SimplicialComplex {
    enum class Mode { flag, explicit_facets };

    Mode mode = Mode::flag;
    Graph skeleton;                          // vertices + 1-skeleton, both modes
    std::vector<std::vector<int>> facets;    // explicit mode: maximal simplices

    int n() const { return skeleton.n(); }
    const std::vector<std::string>& labels() const { return skeleton.vertices; }

    bool contains(const Simplex& s) const;                  // empty simplex always contained
    std::vector<std::vector<int>> maximal_simplices() const;  // facets; flag: maximal cliques
    // all nonempty simplices ordered by (dimension, lex); throws if count exceeds budget
    std::vector<Simplex> all_simplices(std::size_t budget = kDefaultCellBudget) const;
    int dim() const;

    Simplex simplex_from_labels(const std::vector<std::string>& ls) const;
    std::vector<std::string> labels_of(const Simplex& s) const;
};

SimplicialComplex flag_complex(Graph g);
SimplicialComplex explicit_complex(std::vector<std::string> vertex_labels,
                                   const std::vector<std::vector<std::string>>& facet_labels);
// ids variant: vertex set of `g` with facets given by vertex ids (edges of g are ignored)
SimplicialComplex explicit_complex_ids(std::vector<std::string> vertex_labels,
                                       std::vector<std::vector<int>> facet_ids);

struct FlagCheck {
    bool flag = true;
    std::vector<int> witness;  // a minimal non-spanning clique when flag == false
};
FlagCheck is_flag(const SimplicialComplex& K, std::size_t budget = kDefaultCellBudget);

struct LargenessCheck {
    bool large = true;
    std::vector<int> witness_cycle;  // chordless cycle (or non-spanning clique if not flag)
    bool flag_failure = false;
};
// true iff K is flag and every embedded cycle of length < k has a chord; k >= 5
LargenessCheck is_k_large(const SimplicialComplex& K, int k = 5);

// link of σ in a flag complex: full subcomplex on common neighbors of σ outside σ
SimplicialComplex link(const SimplicialComplex& K, const Simplex& sigma);

// subcomplex of all simplices with vertices inside W (preserves labels)
SimplicialComplex full_subcomplex(const SimplicialComplex& K, const BitVec& W);
SimplicialComplex full_subcomplex(const SimplicialComplex& K, const std::vector<int>& W);

// full subcomplex on vertices at combinatorial distance exactly one from σ
SimplicialComplex combinatorial_sphere(const SimplicialComplex& K, const Simplex& sigma);

// union of all simplices meeting σ (facets = maximal simplices meeting σ)
SimplicialComplex combinatorial_ball(const SimplicialComplex& K, const Simplex& sigma);

// verifies lk(σ,K) equals lk(σ∖τ, lk(τ,K)) as labeled complexes
bool link_iteration_check(const SimplicialComplex& K, const Simplex& sigma, const Simplex& tau);

// closest-face map: for each sphere vertex, the set of σ-vertices adjacent to it
struct ClosestFaceMap {
    std::vector<int> sphere_vertices;   // ids in K
    std::vector<Simplex> face;          // parallel: π(v) ⊆ σ, nonempty
};
ClosestFaceMap closest_face_map(const SimplicialComplex& K, const Simplex& sigma);

struct FiltrationClass {
    Simplex tau;                 // face of σ (in K ids)
    std::vector<int> L;          // π-preimage of exactly τ
    std::vector<int> boundary;   // V(lk(τ,K)) ∩ V(S_{i-1})
};
struct Filtration {
    Simplex sigma;
    SimplicialComplex sphere;                       // Ŝ(σ,K)
    ClosestFaceMap pi;
    std::vector<std::vector<int>> stage_vertices;   // S_0 ⊆ … ⊆ S_k vertex ids in K
    std::vector<std::vector<FiltrationClass>> classes_by_codim;  // index i = codimension
};
Filtration sphere_filtration(const SimplicialComplex& K, const Simplex& sigma);

// labeled-complex equality: same vertex label set and same maximal simplices (by label)
bool complexes_equal_labeled(const SimplicialComplex& A, const SimplicialComplex& B);

// maximal cliques of a graph (Bron–Kerbosch with pivoting), each sorted, list sorted
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

// all nonempty cliques ordered by (size, lex); throws when budget exceeded
std::vector<std::vector<int>> all_cliques(const Graph& g, std::size_t budget = kDefaultCellBudget);

} // namespace fibercox
