#include "fibercox/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibercox {

int Graph::index(const std::string& label) const {
    auto it = index_of.find(label);
    if (it == index_of.end()) throw std::invalid_argument("unknown vertex label: " + label);
    return it->second;
}

Graph Graph::from_labels(std::vector<std::string> labels) {
    Graph g;
    g.vertices = std::move(labels);
    for (int i = 0; i < int(g.vertices.size()); ++i) {
        if (!g.index_of.emplace(g.vertices[i], i).second)
            throw std::invalid_argument("duplicate vertex label: " + g.vertices[i]);
    }
    g.adj.assign(g.vertices.size(), BitVec(g.vertices.size()));
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + vertices[u]);
    if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::invalid_argument("edge endpoint out of range");
    if (adjacent(u, v)) return;
    adj[u].set(std::size_t(v));
    adj[v].set(std::size_t(u));
    edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(edges.begin(), edges.end());
}

void Graph::add_edge(const std::string& u, const std::string& v) {
    add_edge(index(u), index(v));
}

Graph Graph::induced(const BitVec& keep) const {
    std::vector<std::string> labels;
    std::vector<int> old_ids;
    for (int i = 0; i < n(); ++i)
        if (keep.get(std::size_t(i))) { labels.push_back(vertices[i]); old_ids.push_back(i); }
    Graph h = Graph::from_labels(std::move(labels));
    for (int a = 0; a < int(old_ids.size()); ++a)
        for (int b = a + 1; b < int(old_ids.size()); ++b)
            if (adjacent(old_ids[a], old_ids[b])) h.add_edge(a, b);
    return h;
}

Graph cycle_graph(int k, const std::string& prefix) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::string> labels;
    for (int i = 1; i <= k; ++i) labels.push_back(prefix + std::to_string(i));
    Graph g = Graph::from_labels(std::move(labels));
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

std::vector<std::vector<int>> components_within(const Graph& g, const BitVec& keep) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (std::size_t s = keep.first(); s < keep.size(); s = keep.next(s)) {
        if (seen[s]) continue;
        comps.emplace_back();
        std::vector<int> stack{int(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            BitVec nb = g.adj[v] & keep;
            for (std::size_t u = nb.first(); u < nb.size(); u = nb.next(u))
                if (!seen[u]) { seen[u] = 1; stack.push_back(int(u)); }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

bool connected_within(const Graph& g, const BitVec& keep) {
    if (keep.none()) return false;
    return components_within(g, keep).size() == 1;
}

} // namespace fibercox
