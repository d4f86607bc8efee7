#pragma once

// Structural cross-checks tying the combinatorics of links, spheres and
// balls to the homology layer: iterated links over cubes and over simplices,
// ball fullness and collapsibility, the minimal-cube intersection oracle,
// join decompositions, sphere-filtration bookkeeping (class separation,
// class identification, gluing bounds) and the cohomological-dimension
// sweeps. `structure_suite` bundles every check over one thickening and
// tallies cases and counterexamples per check for the CLI.

#include "fibercox/collapse.hpp"
#include "fibercox/cube_complex.hpp"
#include "fibercox/homology.hpp"
#include "fibercox/simplicial.hpp"
#include "fibercox/thickening.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fibercox {

// lk(□, X) compared with lk(τ, lk(v, X)), where τ is the simplex of the
// vertex link spanned by the edges of □ at v. The comparison relabels each
// vertex of the iterated link by its codimension-1 coface of □; a missing or
// ambiguous coface counts as failure.
bool cube_link_iteration_check(const CubeComplex& X, int cube_id, int v);

// B̂(σ, K) equals the full subcomplex on V(σ) ∪ V(Ŝ(σ, K))
bool ball_fullness_check(const SimplicialComplex& K, const Simplex& sigma);

// greedy collapse of B̂(σ, K); an inconclusive run counts as failure
bool ball_collapse_check(const SimplicialComplex& K, const Simplex& sigma,
                         int restarts = kDefaultCollapseRestarts, std::uint64_t seed = 0);

// minimal_cube(X, S) equals the vertex-set intersection of all closure cubes
// containing S, and that intersection is itself a closure cube; when no cube
// contains S the check passes iff minimal_cube refuses
bool minimal_cube_oracle_check(const CubeComplex& X, const std::vector<int>& S);

struct GluingStep {
    Simplex tau;              // face of σ driving the step (ids in K)
    bool vacuous = false;     // empty class: nothing glued at this step
    bool hypotheses = false;  // cd(lk(τ)) ≤ n−1, ball collapses, cd(carried union) ≤ n−1
    bool exact = false;       // Mayer–Vietoris bookkeeping on both gluing descriptions
    bool bound = false;       // cd(union after the gluing) ≤ n−1
    std::string note;         // first failed condition of the step
};

struct FiltrationReport {
    Simplex sigma;
    bool separation = true;      // no edges between distinct same-codimension classes
    bool identification = true;  // class subcomplex = link minus the opposite simplex,
                                 // and every simplex touching a class stays inside it
    bool boundary_ok = true;     // recorded ∂L equals the distance-one vertices of the link
    bool base_cd = true;         // cd(S₀) ≤ n−1 (vacuous when S₀ is empty)
    std::vector<GluingStep> steps;
    bool ok = false;
    std::string failure;         // first violated condition, empty when ok
};

// replays the sphere filtration of a nonempty σ stage by stage, checking the
// class combinatorics and the gluing bound cd ≤ n−1 after every addition
FiltrationReport sphere_filtration_report(const SimplicialComplex& K, const Simplex& sigma,
                                          int n, int restarts = kDefaultCollapseRestarts,
                                          std::uint64_t seed = 0);

struct SuiteCheck {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string witness;  // first failing case
    bool ok() const { return failures == 0; }
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;
    bool ok = true;
    std::size_t cases = 0;
    std::size_t counterexamples = 0;
};

struct SuiteOptions {
    int level = 1;  // declared level n; cd bounds compare against n−1
    int restarts = kDefaultCollapseRestarts;
    std::uint64_t seed = 0;
    std::size_t budget = kDefaultCellBudget;
};

// sweeps every check over all admissible inputs of one explicit thickening:
// all (cube, vertex) pairs of the base, all (σ, τ ⊆ σ) pairs and all σ of
// the thickened complex; throws on implicit thickenings
SuiteReport structure_suite(const Thickening& th, const SuiteOptions& opts = {});

} // namespace fibercox
