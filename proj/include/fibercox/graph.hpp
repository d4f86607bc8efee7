#pragma once

// Finite simple graphs on an ordered vertex list. The vertex order is part of
// the data: it fixes the reference indexing used by canonical states.

#include "fibercox/bitvec.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fibercox {

struct Graph {
    std::vector<std::string> vertices;              // stable order
    std::unordered_map<std::string, int> index_of;  // label -> position
    std::vector<BitVec> adj;                        // adjacency rows (no self-loops)
    std::vector<std::pair<int, int>> edges;         // i < j, sorted

    int n() const { return int(vertices.size()); }
    bool adjacent(int u, int v) const { return adj[u].get(std::size_t(v)); }
    int degree(int v) const { return int(adj[v].count()); }
    int index(const std::string& label) const;  // throws on unknown label

    static Graph from_labels(std::vector<std::string> labels);
    void add_edge(int u, int v);
    void add_edge(const std::string& u, const std::string& v);

    // induced subgraph on the given vertex set, preserving relative order
    Graph induced(const BitVec& keep) const;
};

Graph cycle_graph(int k, const std::string& prefix = "x");

// connected components of the subgraph induced on `keep`
std::vector<std::vector<int>> components_within(const Graph& g, const BitVec& keep);

// true iff induced subgraph on `keep` is connected and nonempty
bool connected_within(const Graph& g, const BitVec& keep);

} // namespace fibercox
