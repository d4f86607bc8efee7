#pragma once

// States on a vertex set, systems of moves, legal orbits, detection tables and
// blockade cubes. A state assigns a bit per vertex; a move at v toggles v but
// no neighbor of v; an orbit is legal when every reachable state splits the
// graph into two nonempty connected halves.

#include "fibercox/cube_complex.hpp"
#include "fibercox/graph.hpp"
#include "fibercox/thickening.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fibercox {

using State = BitVec;  // bit per vertex, in the graph's stored order

constexpr std::uint64_t kDefaultOrbitBudget = std::uint64_t(1) << 20;

struct LegalState {
    bool legal = false;
    std::string witness;  // names the empty or disconnected side when illegal
};
// both preimages phi^{-1}(0) and phi^{-1}(1) nonempty and connected in g
LegalState is_legal_state(const Graph& g, const State& phi);

// m(v) = 1 and m(u) = 0 for every neighbor u of v; throws on unknown vertex
bool is_move(const Graph& g, int v, const State& m);
bool is_move(const Graph& g, const std::string& v, const State& m);

// moves are stored by toggle support so huge lazily-thickened vertex sets
// never materialize dense rows
struct MoveSystem {
    int n = 0;                             // number of state bits
    std::vector<std::vector<int>> moves;   // vertex -> sorted support of its move
    std::vector<std::vector<int>> basis;   // independent supports spanning the group
    int rank() const { return int(basis.size()); }
    State move_state(int v) const;         // dense form of the move at v
};

// canonical state of a pair thickening: bit of (v,w) set iff v precedes w in
// the base vertex order; throws unless the thickening records pairs
State canonical_state(const Thickening& th);
// the per-pair toggle system: the move at (v,w) flips exactly (v,w) and (w,v)
// and is assigned to both orientations
MoveSystem canonical_moves(const Thickening& th);

// independent generating supports: disjoint-support systems are kept as-is,
// anything else is row-reduced densely over GF(2)
std::vector<std::vector<int>> move_group_basis(int n, std::vector<std::vector<int>> moves);

struct StateCheck {
    State state;
    bool zeros_ok = false;
    bool ones_ok = false;
    std::string witness;  // empty when legal
    bool legal() const { return zeros_ok && ones_ok; }
};

struct LegalityReport {
    std::string mode;                  // "exhaustive" or "sampled"
    int rank = 0;
    std::uint64_t orbit = 0;           // exhaustive: 2^rank; sampled: draw count
    bool all_legal = true;
    std::string verdict;               // human-readable outcome
    std::vector<StateCheck> witnesses; // illegal states found
    std::vector<StateCheck> states;    // per-state data when the orbit is small
    std::uint64_t seed = 0;            // sampled mode
};

struct OrbitOptions {
    bool exhaustive = true;
    int samples = 256;                      // sampled mode draw count
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultOrbitBudget;  // exhaustive state cap
    std::uint64_t record_cap = 4096;        // keep per-state data up to this size
};

// walks the orbit M·S on the graph's induced-subgraph legality predicate;
// exhaustive mode throws when 2^rank exceeds the budget
LegalityReport check_legal_orbit(const Graph& g, const MoveSystem& sys, const State& S,
                                 const OrbitOptions& opts = {});

// legality of a thickening state via its base: the ε-side is nonempty and
// connected iff the base vertices whose fiber carries ε form a nonempty
// connected set in the share graph; exact, and usable in implicit mode
LegalState is_legal_state_lazy(const Thickening& th, const State& phi);
LegalityReport check_legal_orbit_lazy(const Thickening& th, const MoveSystem& sys,
                                      const State& S, const OrbitOptions& opts = {});

struct DetectionTable {
    int eps = 0;
    BitVec yes;  // bit v set iff some fiber vertex over v carries value eps
};
DetectionTable detection_function(const Thickening& th, const State& s, int eps);

struct BlockadeResult {
    Cube cube;
    bool vacuous = false;      // the N-set was empty; cube is an arbitrary vertex
    std::vector<int> n_set;    // base vertices with delta = N
};
// the minimal cube containing every undetected vertex; throws a "hypothesis
// violation" diagnostic when the N-set does not fit in a cube
BlockadeResult blockade_cube(const CubeComplex& X, const Thickening& th, const State& s,
                             int eps);

struct LegalityCertificate {
    bool granted = false;
    FiveLargeCertificate five_large;
    DisconnectionCheck disconnection;
    CornerCheck corners;
    std::string refusal;  // failing sub-check and witness, empty when granted
    std::string note;     // records the per-pair move assignment convention
};
// grants legality of the canonical system on the pair thickening of X iff X
// certifies 5-large and has no disconnecting cubes and no isolated corners
LegalityCertificate certify_legal_by_hypotheses(const CubeComplex& X,
                                                int restarts = kDefaultCollapseRestarts,
                                                std::uint64_t seed = 0);

} // namespace fibercox
