#pragma once

// Thickenings of cube complexes: a surjective map α : Y → V(X) induces the
// simplicial complex on Y whose simplices are the subsets with α-image inside
// a common cube. Includes the identity thickening, the pair thickening on
// ordered vertex pairs at cubical distance >= 2 (labels "v|w"), the join
// decomposition of simplex links over the minimal cube of the image, and the
// homological audits that stand in for the retraction argument. Vertex counts
// beyond a threshold switch to an implicit representation: adjacency, fibers
// and local scans are served from the base complex without global expansion.

#include "fibercox/cube_complex.hpp"
#include "fibercox/homology.hpp"
#include "fibercox/simplicial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fibercox {

constexpr std::size_t kImplicitThickeningThreshold = 5000;

struct AlphaMap {
    std::vector<std::string> domain;  // labels of Y, order fixed
    std::vector<int> to_base;         // parallel: vertex id in the base complex
};

struct Thickening {
    CubeComplex base;
    AlphaMap alpha;
    std::vector<std::vector<int>> fibers;  // base vertex -> Y indices, increasing
    bool implicit_mode = false;
    SimplicialComplex complex;             // explicit mode only (facet list)

    // pair thickenings additionally record the ordered pair per Y vertex and
    // the index of the reversed pair
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> partner;

    int n() const { return int(alpha.domain.size()); }
    int base_of(int y) const { return alpha.to_base[std::size_t(y)]; }
    // adjacency of the thickening's 1-skeleton: images equal or share a cube
    bool adjacent(int y1, int y2) const;
    // predicate-based membership: the image set lies in a common cube
    bool contains(const std::vector<int>& ys) const;
    std::vector<int> neighbors(int y) const;
};

Thickening build_th1(const CubeComplex& X,
                     std::size_t implicit_threshold = kImplicitThickeningThreshold);
// throws when α is not total/valid or not surjective (names the missed vertex)
Thickening build_th_alpha(const CubeComplex& X, AlphaMap alpha,
                          std::size_t implicit_threshold = kImplicitThickeningThreshold);
// throws "thickening empty" when no vertex pair has cubical distance >= 2 and
// names the offending vertex when the first projection misses it
Thickening build_pair_thickening(const CubeComplex& X,
                                 std::size_t implicit_threshold = kImplicitThickeningThreshold);

// reduced-homology comparison of the thickening against its base over
// ℤ, ℚ and GF(2); explicit mode only
struct HomotopyAudit {
    bool ok = true;
    std::string detail;  // first mismatching coefficient system and degree
};
HomotopyAudit homotopy_audit(const Thickening& th, std::size_t budget = kDefaultCellBudget);

// verifies s is a section of α, that its image spans a copy of Th₁(X), and
// that the reduced homology of the thickening matches the image's
bool section_retraction_check(const Thickening& th, const std::vector<int>& section,
                              std::size_t budget = kDefaultCellBudget);

struct JoinDecomposition {
    Cube box;                    // minimal cube of the image of σ
    std::vector<int> lk_prime;   // α-preimage of the box outside σ (spans a simplex)
    std::vector<int> lk_second;  // link vertices mapping outside the box
    bool join_ok = false;        // link = lk′ ∗ lk″ verified as complexes
    bool prime_simplex_ok = false;
    bool homology_ok = false;    // reduced homology of lk″ matches cube_link(X, box)
};
JoinDecomposition link_join_decomposition(const Thickening& th, const std::vector<int>& sigma,
                                          std::size_t budget = kDefaultCellBudget);

// base-level chordless-square witness through u: vertices (u,v,w,z) of the
// cube-sharing graph with consecutive distances 1 and both diagonals >= 2;
// such a pattern exists iff the thickening's skeleton has an embedded
// 4-cycle without chords through the fiber of u
std::optional<std::array<int, 4>> base_square_witness(const CubeComplex& X, int u);

} // namespace fibercox
