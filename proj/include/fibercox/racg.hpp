#pragma once

// Right-angled Coxeter groups presented by graphs: one involutive generator
// per vertex, commuting exactly along edges. Provides the clique (spherical
// subset) inventory, a confluent shortlex normal form, and the hyperbolicity
// criterion (flag complex of the defining graph has no empty square).

#include "fibercox/graph.hpp"
#include "fibercox/simplicial.hpp"

#include <string>
#include <vector>

namespace fibercox {

struct RACG {
    Graph gamma;                             // defining graph; vertices are generators
    std::vector<std::vector<int>> cliques;   // all nonempty cliques, by (size, lex)
};

// the RACG on the 1-skeleton of a flag complex; throws on non-flag input
RACG racg_from_complex(const SimplicialComplex& L, std::size_t budget = kDefaultCellBudget);
RACG racg_from_graph(Graph gamma, std::size_t budget = kDefaultCellBudget);

struct HyperbolicityCheck {
    bool hyperbolic = false;
    std::vector<int> witness_square;  // an empty square (or non-spanning clique) when not
};
// Gromov hyperbolicity criterion for RACGs: the flag complex of the defining
// graph is 5-large
HyperbolicityCheck is_hyperbolic_racg(const Graph& gamma);

using GroupWord = std::vector<int>;  // generator ids, left to right

GroupWord word_from_labels(const RACG& G, const std::vector<std::string>& letters);
std::vector<std::string> word_labels(const RACG& G, const GroupWord& w);

// confluent rewriting to the shortlex-minimal representative: delete adjacent
// equal letters, swap adjacent commuting letters that are out of order,
// iterate to a fixpoint; equal group elements get identical normal forms
GroupWord racg_normal_form(const RACG& G, GroupWord w);

// GF(2) abelianization: per-generator parity of letter counts
BitVec abelianization(const RACG& G, const GroupWord& w);

} // namespace fibercox
