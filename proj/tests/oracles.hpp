#pragma once

// Independent oracles for cross-checking library results. Everything here is
// deliberately naive: dense rational Gaussian elimination, brute-force clique
// extension, Floyd–Warshall distances, and reduced Betti numbers assembled
// straight from a facet list with none of the library's chain machinery.

#include "fibercox/cube_complex.hpp"
#include "fibercox/graph.hpp"
#include "fibercox/simplicial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;

// rank by dense fraction-exact Gaussian elimination
inline int rank_q(std::vector<std::vector<Rat>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// every nonempty clique, grown by last-index extension
inline std::vector<std::vector<int>> all_cliques_brute(const fibercox::Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto grow = [&](auto&& self, int from) -> void {
        for (int v = from; v < g.n(); ++v) {
            bool joined = true;
            for (int u : cur)
                if (!g.adjacent(u, v)) {
                    joined = false;
                    break;
                }
            if (!joined) continue;
            cur.push_back(v);
            out.push_back(cur);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    grow(grow, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

// all-pairs cubical distances by Floyd–Warshall over the share graph
inline std::vector<std::vector<int>> share_distances(const fibercox::CubeComplex& X) {
    const int n = X.n();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(std::size_t(n), std::vector<int>(std::size_t(n), inf));
    for (int v = 0; v < n; ++v) {
        d[std::size_t(v)][std::size_t(v)] = 0;
        for (int w = 0; w < n; ++w)
            if (X.share_adj[std::size_t(v)].get(std::size_t(w)))
                d[std::size_t(v)][std::size_t(w)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[std::size_t(i)][std::size_t(j)] =
                    std::min(d[std::size_t(i)][std::size_t(j)],
                             d[std::size_t(i)][std::size_t(k)] + d[std::size_t(k)][std::size_t(j)]);
    for (auto& row : d)
        for (int& x : row)
            if (x >= inf) x = -1;
    return d;
}

// the intersection of all closure cubes containing S (vertex ids, any order);
// empty optional when no cube contains S
inline std::optional<std::vector<int>> min_cube_brute(const fibercox::CubeComplex& X,
                                                      std::vector<int> S) {
    std::sort(S.begin(), S.end());
    std::optional<std::vector<int>> meet;
    for (const fibercox::Cube& c : X.closure) {
        std::vector<int> vs = c.sorted();
        if (!std::includes(vs.begin(), vs.end(), S.begin(), S.end())) continue;
        if (!meet) {
            meet = vs;
        } else {
            std::vector<int> next;
            std::set_intersection(meet->begin(), meet->end(), vs.begin(), vs.end(),
                                  std::back_inserter(next));
            *meet = std::move(next);
        }
    }
    return meet;
}

// reduced rational Betti numbers straight from a facet list: enumerate the
// closure by subset expansion, build signed boundary matrices, rank-nullity
inline std::vector<long long> reduced_betti_q(const std::vector<std::vector<int>>& facets) {
    std::set<std::vector<int>> cells;
    for (std::vector<int> f : facets) {
        std::sort(f.begin(), f.end());
        const std::size_t k = f.size();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> s;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            cells.insert(std::move(s));
        }
    }
    if (cells.empty()) return {};
    int top = 0;
    for (const auto& s : cells) top = std::max(top, int(s.size()) - 1);
    std::vector<std::vector<std::vector<int>>> by_dim(std::size_t(top) + 1);
    for (const auto& s : cells) by_dim[s.size() - 1].push_back(s);
    std::vector<std::map<std::vector<int>, int>> index(std::size_t(top) + 1);
    for (int d = 0; d <= top; ++d)
        for (std::size_t i = 0; i < by_dim[std::size_t(d)].size(); ++i)
            index[std::size_t(d)][by_dim[std::size_t(d)][i]] = int(i);
    // ranks[d] = rank of boundary C_d -> C_{d-1}, with the augmentation map in
    // degree 0 (reduced homology)
    std::vector<int> ranks(std::size_t(top) + 2, 0);
    ranks[0] = by_dim[0].empty() ? 0 : 1;
    for (int d = 1; d <= top; ++d) {
        const auto& rows_cells = by_dim[std::size_t(d) - 1];
        const auto& cols_cells = by_dim[std::size_t(d)];
        std::vector<std::vector<Rat>> m(rows_cells.size(),
                                        std::vector<Rat>(cols_cells.size(), 0));
        for (std::size_t c = 0; c < cols_cells.size(); ++c) {
            const auto& s = cols_cells[c];
            int sign = 1;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face = s;
                face.erase(face.begin() + long(drop));
                m[std::size_t(index[std::size_t(d) - 1].at(face))][c] = sign;
                sign = -sign;
            }
        }
        ranks[std::size_t(d)] = rank_q(std::move(m));
    }
    std::vector<long long> betti(std::size_t(top) + 1, 0);
    for (int d = 0; d <= top; ++d)
        betti[std::size_t(d)] = static_cast<long long>(by_dim[std::size_t(d)].size()) -
                                ranks[std::size_t(d)] - ranks[std::size_t(d) + 1];
    return betti;
}

// seeded Erdős–Rényi graph on labels v0..v{n-1}
inline fibercox::Graph random_graph(int n, double p, std::uint64_t seed) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    fibercox::Graph g = fibercox::Graph::from_labels(std::move(labels));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

// seeded explicit complex: a handful of random facets of size <= 4
inline fibercox::SimplicialComplex random_explicit_complex(int n, int facet_count,
                                                           std::uint64_t seed) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_of(1, 4);
    std::uniform_int_distribution<int> vert(0, n - 1);
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < facet_count; ++i) {
        std::set<int> f;
        int want = size_of(rng);
        while (int(f.size()) < want) f.insert(vert(rng));
        facets.emplace_back(f.begin(), f.end());
    }
    return fibercox::explicit_complex_ids(std::move(labels), std::move(facets));
}

} // namespace oracle
