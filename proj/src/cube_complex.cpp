#include "fibercox/cube_complex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibercox {

namespace {

// scatter the bits of m into the positions selected by mask (low bit first)
std::uint32_t spread_bits(std::uint32_t m, std::uint32_t mask) {
    std::uint32_t out = 0;
    while (mask) {
        std::uint32_t low = mask & (~mask + 1);
        if (m & 1u) out |= low;
        m >>= 1;
        mask ^= low;
    }
    return out;
}

int perm_sign(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) { seen[j] = 1; j = std::size_t(p[j]); ++len; }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::string join_labels(const CubeComplex& X, const std::vector<int>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ',';
        s += X.vertices[std::size_t(ids[i])];
    }
    return s;
}

} // namespace

std::vector<int> Cube::sorted() const {
    std::vector<int> s = verts;
    std::sort(s.begin(), s.end());
    return s;
}

Cube canonical_cube(const Cube& raw) {
    if (raw.dim < 0 || raw.dim > 25) throw std::invalid_argument("cube dimension out of range");
    if (raw.verts.size() != (std::size_t(1) << raw.dim))
        throw std::invalid_argument("cube vertex array has wrong length");
    {
        auto s = raw.sorted();
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("cube has repeated vertices");
    }
    std::uint32_t t = 0;
    for (std::uint32_t b = 1; b < raw.verts.size(); ++b)
        if (raw.verts[b] < raw.verts[t]) t = b;
    std::vector<int> axes(std::size_t(raw.dim));
    std::iota(axes.begin(), axes.end(), 0);
    std::sort(axes.begin(), axes.end(), [&](int i, int j) {
        return raw.verts[t ^ (1u << i)] < raw.verts[t ^ (1u << j)];
    });
    Cube out;
    out.dim = raw.dim;
    out.verts.resize(raw.verts.size());
    for (std::uint32_t b = 0; b < raw.verts.size(); ++b) {
        std::uint32_t src = t;
        for (int i = 0; i < raw.dim; ++i)
            if (b & (1u << i)) src ^= 1u << axes[std::size_t(i)];
        out.verts[b] = raw.verts[src];
    }
    return out;
}

Cube cube_face(const Cube& c, int axis, int value) {
    if (axis < 0 || axis >= c.dim) throw std::invalid_argument("cube_face: axis out of range");
    Cube f;
    f.dim = c.dim - 1;
    f.verts.resize(std::size_t(1) << f.dim);
    std::uint32_t low_mask = (1u << axis) - 1;
    for (std::uint32_t m = 0; m < f.verts.size(); ++m) {
        std::uint32_t src = (m & low_mask) | (std::uint32_t(value) << axis) |
                            ((m & ~low_mask) << 1);
        f.verts[m] = c.verts[src];
    }
    return f;
}

int labeling_sign(const Cube& a, const Cube& b) {
    if (a.dim != b.dim || a.verts.size() != b.verts.size())
        throw std::invalid_argument("labeling_sign: dimension mismatch");
    std::map<int, std::uint32_t> pos;
    for (std::uint32_t m = 0; m < a.verts.size(); ++m) pos[a.verts[m]] = m;
    auto lookup = [&](int v) {
        auto it = pos.find(v);
        if (it == pos.end()) throw std::invalid_argument("labeling_sign: vertex sets differ");
        return it->second;
    };
    std::uint32_t t = lookup(b.verts[0]);
    std::vector<int> perm(std::size_t(a.dim), -1);
    for (int i = 0; i < a.dim; ++i) {
        std::uint32_t q = lookup(b.verts[1u << i]) ^ t;
        if (std::popcount(q) != 1)
            throw std::invalid_argument("labeling_sign: labelings are not cube-isomorphic");
        perm[std::size_t(i)] = std::countr_zero(q);
    }
    {
        std::vector<int> chk = perm;
        std::sort(chk.begin(), chk.end());
        for (int i = 0; i < a.dim; ++i)
            if (chk[std::size_t(i)] != i)
                throw std::invalid_argument("labeling_sign: axis map is not a permutation");
    }
    for (std::uint32_t m = 0; m < b.verts.size(); ++m) {
        std::uint32_t src = t;
        for (int i = 0; i < a.dim; ++i)
            if (m & (1u << i)) src ^= 1u << perm[std::size_t(i)];
        if (a.verts[src] != b.verts[m])
            throw std::invalid_argument("labeling_sign: labelings are not cube-isomorphic");
    }
    int sign = perm_sign(perm);
    if (std::popcount(t) % 2 == 1) sign = -sign;
    return sign;
}

int CubeComplex::dim() const {
    int d = 0;
    for (const auto& c : maximal) d = std::max(d, c.dim);
    return d;
}

int CubeComplex::index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return int(i);
    throw std::invalid_argument("unknown vertex label: " + label);
}

int CubeComplex::id_of(const std::vector<int>& sorted_verts) const {
    auto it = closure_index_.find(sorted_verts);
    return it == closure_index_.end() ? -1 : it->second;
}

bool CubeComplex::is_face_of(int face, int of) const {
    const Cube& f = closure[std::size_t(face)];
    const Cube& c = closure[std::size_t(of)];
    if (f.dim > c.dim) return false;
    std::set<int> fv(f.verts.begin(), f.verts.end());
    std::vector<std::uint32_t> P;
    for (std::uint32_t m = 0; m < c.verts.size(); ++m)
        if (fv.count(c.verts[m])) P.push_back(m);
    if (P.size() != f.verts.size()) return false;
    std::uint32_t diag = 0;
    for (std::uint32_t p : P) diag |= p ^ P[0];
    return (std::size_t(1) << std::popcount(diag)) == P.size();
}

Graph CubeComplex::skeleton() const {
    Graph g = Graph::from_labels(vertices);
    for (const auto& c : closure)
        if (c.dim == 1) g.add_edge(c.verts[0], c.verts[1]);
    return g;
}

CubeComplex make_cube_complex(std::vector<std::string> vertex_labels,
                              std::vector<Cube> maximal_cubes) {
    CubeComplex X;
    X.vertices = std::move(vertex_labels);
    {
        auto chk = X.vertices;
        std::sort(chk.begin(), chk.end());
        if (std::adjacent_find(chk.begin(), chk.end()) != chk.end())
            throw std::invalid_argument("duplicate vertex label");
    }
    int n = X.n();
    for (int v = 0; v < n; ++v) maximal_cubes.push_back(Cube{0, {v}});

    std::map<std::vector<int>, Cube> given;
    for (const auto& raw : maximal_cubes) {
        for (int v : raw.verts)
            if (v < 0 || v >= n) throw std::invalid_argument("cube vertex id out of range");
        Cube c = canonical_cube(raw);
        auto key = c.sorted();
        auto [it, fresh] = given.emplace(key, c);
        if (!fresh && !(it->second == c))
            throw std::invalid_argument("vertex set does not determine a unique cube");
    }

    std::map<std::vector<int>, Cube> closure;
    std::set<std::vector<int>> proper_faces;
    for (const auto& [key, c] : given) {
        std::uint32_t full = (1u << c.dim) - 1;
        for (std::uint32_t frozen = 0; frozen <= full; ++frozen) {
            std::uint32_t free_mask = full & ~frozen;
            int fd = std::popcount(free_mask);
            std::uint32_t val = frozen;
            while (true) {
                Cube face;
                face.dim = fd;
                face.verts.resize(std::size_t(1) << fd);
                for (std::uint32_t m = 0; m < face.verts.size(); ++m)
                    face.verts[m] = c.verts[spread_bits(m, free_mask) | val];
                Cube canon = canonical_cube(face);
                auto fkey = canon.sorted();
                auto [it, fresh] = closure.emplace(fkey, canon);
                if (!fresh && !(it->second == canon))
                    throw std::invalid_argument("vertex set does not determine a unique cube");
                if (frozen != 0) proper_faces.insert(std::move(fkey));
                if (val == 0) break;
                val = (val - 1) & frozen;
            }
            if (full == 0) break;
        }
    }

    for (const auto& [key, c] : given)
        if (!proper_faces.count(key)) X.maximal.push_back(c);

    X.closure.reserve(closure.size());
    std::vector<std::pair<std::pair<int, std::vector<int>>, Cube>> order;
    for (const auto& [key, c] : closure) order.push_back({{c.dim, key}, c});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, c] : order) {
        X.closure_index_[k.second] = int(X.closure.size());
        X.closure.push_back(std::move(c));
    }

    X.vert_cubes.assign(std::size_t(n), {});
    for (std::size_t id = 0; id < X.closure.size(); ++id)
        for (int v : X.closure[id].verts)
            X.vert_cubes[std::size_t(v)].push_back(int(id));

    X.share_adj.assign(std::size_t(n), BitVec(std::size_t(n)));
    for (const auto& c : X.maximal)
        for (std::size_t i = 0; i < c.verts.size(); ++i)
            for (std::size_t j = i + 1; j < c.verts.size(); ++j) {
                X.share_adj[std::size_t(c.verts[i])].set(std::size_t(c.verts[j]));
                X.share_adj[std::size_t(c.verts[j])].set(std::size_t(c.verts[i]));
            }
    X.edge_adj.assign(std::size_t(n), BitVec(std::size_t(n)));
    for (const auto& c : X.closure)
        if (c.dim == 1) {
            X.edge_adj[std::size_t(c.verts[0])].set(std::size_t(c.verts[1]));
            X.edge_adj[std::size_t(c.verts[1])].set(std::size_t(c.verts[0]));
        }
    return X;
}

CubeComplex cube_complex_from_graph(const Graph& g) {
    std::vector<Cube> cubes;
    for (const auto& [a, b] : g.edges) cubes.push_back(Cube{1, {a, b}});
    return make_cube_complex(g.vertices, std::move(cubes));
}

std::vector<std::vector<int>> cube_components(const CubeComplex& X) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(std::size_t(X.n()), 0);
    for (int s = 0; s < X.n(); ++s) {
        if (seen[std::size_t(s)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[std::size_t(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            const BitVec& nb = X.share_adj[std::size_t(v)];
            for (std::size_t w = nb.first(); w < nb.size(); w = nb.next(w))
                if (!seen[w]) { seen[w] = 1; q.push(int(w)); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> cubical_distances_from(const CubeComplex& X, int v) {
    std::vector<int> dist(std::size_t(X.n()), -1);
    std::queue<int> q;
    dist[std::size_t(v)] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        const BitVec& nb = X.share_adj[std::size_t(u)];
        for (std::size_t w = nb.first(); w < nb.size(); w = nb.next(w))
            if (dist[w] < 0) { dist[w] = dist[std::size_t(u)] + 1; q.push(int(w)); }
    }
    return dist;
}

int cubical_distance(const CubeComplex& X, int v, int w) {
    if (v < 0 || v >= X.n() || w < 0 || w >= X.n())
        throw std::invalid_argument("cubical_distance: vertex out of range");
    auto dist = cubical_distances_from(X, v);
    if (dist[std::size_t(w)] < 0) {
        std::vector<int> comp;
        for (int u = 0; u < X.n(); ++u)
            if (dist[std::size_t(u)] >= 0) comp.push_back(u);
        std::ostringstream msg;
        msg << "cubical distance undefined: complex is disconnected; component of "
            << X.vertices[std::size_t(v)] << " = {" << join_labels(X, comp) << "}";
        throw std::runtime_error(msg.str());
    }
    return dist[std::size_t(w)];
}

Cube minimal_cube(const CubeComplex& X, const std::vector<int>& S) {
    if (S.empty()) throw std::invalid_argument("minimal_cube: empty vertex set");
    for (int v : S)
        if (v < 0 || v >= X.n()) throw std::invalid_argument("minimal_cube: vertex out of range");
    std::vector<int> s = S;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    std::vector<int> candidates;
    for (int id : X.vert_cubes[std::size_t(s[0])]) {
        const auto verts = X.closure[std::size_t(id)].sorted();
        if (std::includes(verts.begin(), verts.end(), s.begin(), s.end()))
            candidates.push_back(id);
    }
    if (candidates.empty())
        throw std::runtime_error("no common cube contains {" + join_labels(X, s) + "}");

    std::vector<int> minimal;
    for (int c : candidates) {
        bool has_smaller = false;
        for (int c2 : candidates)
            if (c2 != c && X.is_face_of(c2, c)) { has_smaller = true; break; }
        if (!has_smaller) minimal.push_back(c);
    }
    if (minimal.size() != 1)
        throw std::runtime_error("5-largeness violated: no unique minimal cube for {" +
                                 join_labels(X, s) + "}");
    return X.closure[std::size_t(minimal.front())];
}

SimplicialComplex cube_link(const CubeComplex& X, int cube_id) {
    if (cube_id < 0 || std::size_t(cube_id) >= X.closure.size())
        throw std::invalid_argument("cube_link: cube not in closure");
    const Cube& base = X.closure[std::size_t(cube_id)];
    auto base_verts = base.sorted();

    // closure cubes containing all of base's vertices
    std::vector<int> containing;
    for (int id : X.vert_cubes[std::size_t(base_verts[0])]) {
        const auto verts = X.closure[std::size_t(id)].sorted();
        if (std::includes(verts.begin(), verts.end(), base_verts.begin(), base_verts.end()))
            containing.push_back(id);
    }

    std::vector<int> cofaces;  // codimension-1, in closure order
    for (int id : containing)
        if (X.closure[std::size_t(id)].dim == base.dim + 1 && X.is_face_of(cube_id, id))
            cofaces.push_back(id);
    std::sort(cofaces.begin(), cofaces.end());

    std::vector<std::string> labels;
    std::map<int, int> link_id;
    for (int id : cofaces) {
        auto verts = X.closure[std::size_t(id)].sorted();
        std::vector<int> extra;
        std::set_difference(verts.begin(), verts.end(), base_verts.begin(), base_verts.end(),
                            std::back_inserter(extra));
        link_id[id] = int(labels.size());
        labels.push_back(join_labels(X, extra));
    }

    std::set<std::vector<int>> maximal_keys;
    for (const auto& c : X.maximal) maximal_keys.insert(c.sorted());
    std::vector<std::vector<int>> facets;
    for (int id : containing) {
        if (!maximal_keys.count(X.closure[std::size_t(id)].sorted())) continue;
        if (!X.is_face_of(cube_id, id)) continue;
        std::vector<int> facet;
        for (int cf : cofaces)
            if (X.is_face_of(cf, id)) facet.push_back(link_id.at(cf));
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    return explicit_complex_ids(std::move(labels), std::move(facets));
}

SimplicialComplex vertex_link(const CubeComplex& X, int v) {
    if (v < 0 || v >= X.n()) throw std::invalid_argument("vertex_link: vertex out of range");
    return cube_link(X, X.id_of({v}));
}

CornerCheck check_no_isolated_corners(const CubeComplex& X) {
    for (std::size_t id = 0; id < X.closure.size(); ++id) {
        const Cube& c = X.closure[id];
        for (int v : c.verts) {
            bool has_outside = false;
            const BitVec& nb = X.edge_adj[std::size_t(v)];
            for (std::size_t w = nb.first(); w < nb.size(); w = nb.next(w))
                if (std::find(c.verts.begin(), c.verts.end(), int(w)) == c.verts.end()) {
                    has_outside = true;
                    break;
                }
            if (!has_outside) return {false, int(id), v};
        }
    }
    return {};
}

DisconnectionCheck check_no_disconnecting_cubes(const CubeComplex& X) {
    int n = X.n();
    std::vector<int> parent(std::size_t(n), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[std::size_t(x)] != x) {
            parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
            x = parent[std::size_t(x)];
        }
        return x;
    };
    for (std::size_t id = 0; id < X.closure.size(); ++id) {
        const Cube& removed = X.closure[id];
        BitVec gone{std::size_t(n)};
        for (int v : removed.verts) gone.set(std::size_t(v));

        std::iota(parent.begin(), parent.end(), 0);
        int survivors = 0;
        for (int v = 0; v < n; ++v)
            if (!gone.get(std::size_t(v))) ++survivors;
        if (survivors == 0) return {false, int(id), {}};

        for (const auto& c : X.closure) {
            bool hits = false;
            for (int v : c.verts)
                if (gone.get(std::size_t(v))) { hits = true; break; }
            if (hits || c.dim == 0) continue;
            int anchor = c.verts[0];
            for (int v : c.verts) parent[std::size_t(find(v))] = find(anchor);
        }

        std::map<int, std::vector<int>> comps;
        for (int v = 0; v < n; ++v)
            if (!gone.get(std::size_t(v))) comps[find(v)].push_back(v);
        if (comps.size() != 1) {
            DisconnectionCheck out;
            out.ok = false;
            out.cube = int(id);
            for (auto& [root, vs] : comps) out.parts.push_back(vs);
            return out;
        }
    }
    return {};
}

CubeComplex cubical_neighborhood(const CubeComplex& X, int v, int r) {
    if (v < 0 || v >= X.n()) throw std::invalid_argument("cubical_neighborhood: vertex out of range");
    if (r < 1) throw std::invalid_argument("cubical_neighborhood: radius must be positive");
    auto dist = cubical_distances_from(X, v);
    // union of the closed cubes meeting the (r-1)-ball: r=1 is the star of v,
    // and the neighborhood's vertices all sit at cubical distance <= r
    std::vector<const Cube*> selected;
    BitVec keep{std::size_t(X.n())};
    for (const auto& c : X.closure) {
        bool meets = false;
        for (int u : c.verts)
            if (dist[std::size_t(u)] >= 0 && dist[std::size_t(u)] <= r - 1) { meets = true; break; }
        if (!meets) continue;
        selected.push_back(&c);
        for (int u : c.verts) keep.set(std::size_t(u));
    }
    std::vector<int> remap(std::size_t(X.n()), -1);
    std::vector<std::string> labels;
    for (int u = 0; u < X.n(); ++u)
        if (keep.get(std::size_t(u))) {
            remap[std::size_t(u)] = int(labels.size());
            labels.push_back(X.vertices[std::size_t(u)]);
        }
    std::vector<Cube> cubes;
    for (const Cube* c : selected) {
        Cube copy = *c;
        for (auto& u : copy.verts) u = remap[std::size_t(u)];
        cubes.push_back(std::move(copy));
    }
    return make_cube_complex(std::move(labels), std::move(cubes));
}

CellPoset cell_poset_from_cubes(const CubeComplex& X) {
    CellPoset poset;
    poset.dims.reserve(X.closure.size());
    poset.faces.reserve(X.closure.size());
    poset.labels.reserve(X.closure.size());
    for (const auto& c : X.closure) {
        poset.dims.push_back(c.dim);
        std::vector<int> fs;
        for (int axis = 0; axis < c.dim; ++axis)
            for (int value = 0; value < 2; ++value) {
                int id = X.id_of(cube_face(c, axis, value).sorted());
                if (id < 0) throw std::logic_error("closure is not face-closed");
                fs.push_back(id);
            }
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        poset.faces.push_back(std::move(fs));
        poset.labels.push_back(join_labels(X, c.sorted()));
    }
    return poset;
}

FiveLargeCertificate check_5_large(const CubeComplex& X, int restarts, std::uint64_t seed) {
    FiveLargeCertificate cert;
    for (int v = 0; v < X.n(); ++v) {
        auto lc = is_k_large(vertex_link(X, v), 5);
        if (!lc.large) {
            cert.locally_5_large = false;
            cert.link_failure_vertex = v;
            cert.link_failure = lc;
            break;
        }
    }
    cert.neighborhoods.reserve(std::size_t(X.n()));
    bool all_yes = true;
    for (int v = 0; v < X.n(); ++v) {
        CubeComplex nb = cubical_neighborhood(X, v, 2);
        auto report = collapse_poset(cell_poset_from_cubes(nb), restarts, seed);
        bool yes = report.collapsible();
        all_yes = all_yes && yes;
        cert.neighborhoods.push_back(yes ? NeighborhoodVerdict::contractible
                                         : NeighborhoodVerdict::inconclusive);
    }
    cert.certified = cert.locally_5_large && all_yes;
    return cert;
}

} // namespace fibercox
