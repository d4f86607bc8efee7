#pragma once

// Greedy free-face collapsing over a generic graded cell poset. A cell is
// free when exactly one living cell covers it (codimension 1); removing a
// free pair preserves homotopy type, so a run ending in a single vertex
// certifies contractibility. Failure to finish certifies nothing: the
// verdict is "inconclusive", never "no". Randomized restarts with a fixed
// seed keep the outcome reproducible.

#include "fibercox/simplicial.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fibercox {

constexpr int kDefaultCollapseRestarts = 32;

// Graded poset of cells closed under faces: faces[i] lists the ids covered
// by cell i (its codimension-1 faces), each of dimension dims[i] - 1.
struct CellPoset {
    std::vector<int> dims;
    std::vector<std::vector<int>> faces;
    std::vector<std::string> labels;  // optional, parallel to dims when present

    std::size_t size() const { return dims.size(); }
    void validate() const;  // throws on dangling ids or inconsistent grading
};

enum class CollapseVerdict { yes, inconclusive };

struct CollapseReport {
    CollapseVerdict verdict = CollapseVerdict::inconclusive;
    std::vector<int> residual;                  // living cell ids of the best attempt
    std::vector<std::pair<int, int>> log;       // (free face, coface) pairs, successful attempt only
    int attempts = 0;
    std::uint64_t seed = 0;

    bool collapsible() const { return verdict == CollapseVerdict::yes; }
};

// Core driver over an arbitrary poset (used for both simplicial and cubical
// closures). Attempt 0 is deterministic LIFO; later attempts draw candidates
// at random from a generator seeded by (seed, attempt).
CollapseReport collapse_poset(const CellPoset& poset,
                              int restarts = kDefaultCollapseRestarts,
                              std::uint64_t seed = 0);

// Poset of the full face closure of K (cells ordered by (dim, lex)).
CellPoset cell_poset_from_simplicial(const SimplicialComplex& K,
                                     std::size_t budget = kDefaultCellBudget);

// Convenience wrapper: expand K and run the driver; labels in the report's
// residual refer to comma-joined vertex labels.
CollapseReport collapse(const SimplicialComplex& K,
                        int restarts = kDefaultCollapseRestarts,
                        std::uint64_t seed = 0,
                        std::size_t budget = kDefaultCellBudget);

} // namespace fibercox
