#include "fibercox/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace fibercox {

namespace {

BitVec set_of(const std::vector<int>& ids, int n) {
    BitVec b{std::size_t(n)};
    for (int v : ids) b.set(std::size_t(v));
    return b;
}

// candidates must stay sorted/deduped; facet domination check
bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void bron_kerbosch(const Graph& g, BitVec R, BitVec P, BitVec X,
                   std::vector<std::vector<int>>& out) {
    if (P.none() && X.none()) {
        out.push_back({});
        for (std::size_t v = R.first(); v < R.size(); v = R.next(v)) out.back().push_back(int(v));
        return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    std::size_t pivot = R.size();
    std::size_t best = 0;
    BitVec PX = P;
    PX |= X;
    for (std::size_t u = PX.first(); u < PX.size(); u = PX.next(u)) {
        std::size_t c = (g.adj[u] & P).count();
        if (pivot == R.size() || c > best) { pivot = u; best = c; }
    }
    BitVec ext = P;
    if (pivot < R.size()) {
        BitVec mask = g.adj[pivot];
        for (std::size_t v = ext.first(); v < ext.size(); v = ext.next(v))
            if (mask.get(v)) ext.set(v, false);
    }
    for (std::size_t v = ext.first(); v < ext.size(); v = ext.next(v)) {
        BitVec R2 = R;
        R2.set(v);
        bron_kerbosch(g, R2, P & g.adj[v], X & g.adj[v], out);
        P.set(v, false);
        X.set(v);
    }
}

void clique_extend(const Graph& g, std::vector<int>& cur, const BitVec& cand,
                   std::vector<std::vector<int>>& out, std::size_t budget) {
    for (std::size_t v = cand.first(); v < cand.size(); v = cand.next(v)) {
        cur.push_back(int(v));
        out.push_back(cur);
        if (out.size() > budget) throw std::runtime_error("cell budget exceeded while enumerating cliques");
        BitVec next = cand & g.adj[v];
        // restrict to ids greater than v to enumerate each clique once
        BitVec gt(cand.size());
        for (std::size_t u = next.next(v); u < next.size(); u = next.next(u)) gt.set(u);
        clique_extend(g, cur, gt, out, budget);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<std::vector<int>> out;
    BitVec R(std::size_t(g.n())), P(std::size_t(g.n())), X(std::size_t(g.n()));
    for (int v = 0; v < g.n(); ++v) P.set(std::size_t(v));
    if (g.n() > 0) bron_kerbosch(g, R, P, X, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> all_cliques(const Graph& g, std::size_t budget) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    BitVec all(std::size_t(g.n()));
    for (int v = 0; v < g.n(); ++v) all.set(std::size_t(v));
    clique_extend(g, cur, all, out, budget);
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) {
                         return a.size() != b.size() ? a.size() < b.size() : a < b;
                     });
    return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.empty()) return true;
    for (int v : s)
        if (v < 0 || v >= n()) return false;
    if (mode == Mode::flag) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!skeleton.adjacent(s[i], s[j])) return false;
        return true;
    }
    for (const auto& f : facets)
        if (subset_of(s, f)) return true;
    return false;
}

std::vector<std::vector<int>> SimplicialComplex::maximal_simplices() const {
    if (mode == Mode::flag) return maximal_cliques(skeleton);
    return facets;
}

std::vector<Simplex> SimplicialComplex::all_simplices(std::size_t budget) const {
    if (mode == Mode::flag) return all_cliques(skeleton, budget);
    std::set<Simplex> seen;
    // closure of each facet by subset enumeration
    for (const auto& f : facets) {
        if (f.size() > 25) throw std::runtime_error("facet too large for explicit closure");
        std::uint32_t m = std::uint32_t(1) << f.size();
        for (std::uint32_t mask = 1; mask < m; ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            seen.insert(std::move(s));
            if (seen.size() > budget) throw std::runtime_error("cell budget exceeded in face closure");
        }
    }
    std::vector<Simplex> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) {
                         return a.size() != b.size() ? a.size() < b.size() : a < b;
                     });
    return out;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : maximal_simplices()) d = std::max(d, int(f.size()) - 1);
    return d;
}

Simplex SimplicialComplex::simplex_from_labels(const std::vector<std::string>& ls) const {
    Simplex s;
    for (const auto& l : ls) s.push_back(skeleton.index(l));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("repeated vertex in simplex");
    return s;
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const {
    std::vector<std::string> out;
    for (int v : s) out.push_back(skeleton.vertices[std::size_t(v)]);
    return out;
}

SimplicialComplex flag_complex(Graph g) {
    SimplicialComplex K;
    K.mode = SimplicialComplex::Mode::flag;
    K.skeleton = std::move(g);
    return K;
}

SimplicialComplex explicit_complex_ids(std::vector<std::string> vertex_labels,
                                       std::vector<std::vector<int>> facet_ids) {
    SimplicialComplex K;
    K.mode = SimplicialComplex::Mode::explicit_facets;
    K.skeleton = Graph::from_labels(std::move(vertex_labels));
    for (auto& f : facet_ids) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= K.n()) throw std::invalid_argument("facet vertex out of range");
    }
    // drop dominated facets, dedupe
    std::sort(facet_ids.begin(), facet_ids.end());
    facet_ids.erase(std::unique(facet_ids.begin(), facet_ids.end()), facet_ids.end());
    BitVec covered(std::size_t(K.n()));
    for (const auto& f : facet_ids) {
        bool dominated = false;
        for (const auto& g2 : facet_ids)
            if (&f != &g2 && f.size() < g2.size() && subset_of(f, g2)) { dominated = true; break; }
        if (!f.empty() && !dominated) {
            K.facets.push_back(f);
            for (int v : f) covered.set(std::size_t(v));
        }
    }
    for (int v = 0; v < K.n(); ++v)
        if (!covered.get(std::size_t(v))) K.facets.push_back({v});
    std::sort(K.facets.begin(), K.facets.end());
    // 1-skeleton from facet pairs
    for (const auto& f : K.facets)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                K.skeleton.add_edge(f[i], f[j]);
    return K;
}

SimplicialComplex explicit_complex(std::vector<std::string> vertex_labels,
                                   const std::vector<std::vector<std::string>>& facet_labels) {
    Graph tmp = Graph::from_labels(vertex_labels);
    std::vector<std::vector<int>> ids;
    for (const auto& f : facet_labels) {
        ids.emplace_back();
        for (const auto& l : f) ids.back().push_back(tmp.index(l));
    }
    return explicit_complex_ids(std::move(vertex_labels), std::move(ids));
}

FlagCheck is_flag(const SimplicialComplex& K, std::size_t budget) {
    if (K.mode == SimplicialComplex::Mode::flag) return {};
    // smallest clique of the 1-skeleton that is not a face
    auto cliques = all_cliques(K.skeleton, budget);
    for (const auto& c : cliques) {
        if (c.size() < 3) continue;  // vertices/edges are faces by construction
        if (!K.contains(c)) return {false, c};
    }
    return {};
}

namespace {

// chordless cycles of length exactly L via induced-path DFS; returns first found
bool find_chordless_cycle(const Graph& g, int L, std::vector<int>& out) {
    int n = g.n();
    std::vector<int> path;
    // forbidden = adjacent to some non-endpoint path vertex, or on the path
    std::function<bool()> dfs = [&]() -> bool {
        if (int(path.size()) == L) {
            if (g.adjacent(path.back(), path.front())) { out = path; return true; }
            return false;
        }
        int last = path.back();
        for (int u = 0; u < n; ++u) {
            if (u <= path.front()) continue;  // canonical: start vertex is minimum
            if (!g.adjacent(last, u)) continue;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                bool is_start = (i == 0);
                bool closing_pos = (int(path.size()) == L - 1);
                if (std::find(path.begin(), path.end(), u) != path.end()) { ok = false; break; }
                if (g.adjacent(path[i], u) && !(is_start && closing_pos)) { ok = false; break; }
            }
            if (!ok) continue;
            path.push_back(u);
            if (dfs()) return true;
            path.pop_back();
        }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        path = {v};
        if (dfs()) return true;
    }
    return false;
}

} // namespace

LargenessCheck is_k_large(const SimplicialComplex& K, int k) {
    if (k < 5) throw std::invalid_argument("k-largeness requires k >= 5");
    auto fc = is_flag(K);
    if (!fc.flag) return {false, fc.witness, true};
    const Graph& g = K.skeleton;
    // 4-cycles: non-adjacent pair with two non-adjacent common neighbors
    for (int a = 0; a < g.n(); ++a)
        for (int c = a + 1; c < g.n(); ++c) {
            if (g.adjacent(a, c)) continue;
            BitVec common = g.adj[a] & g.adj[c];
            auto N = common.ones();
            for (std::size_t i = 0; i < N.size(); ++i)
                for (std::size_t j = i + 1; j < N.size(); ++j)
                    if (!g.adjacent(int(N[i]), int(N[j])))
                        return {false, {a, int(N[i]), c, int(N[j])}, false};
        }
    for (int L = 5; L < k; ++L) {
        std::vector<int> cyc;
        if (find_chordless_cycle(g, L, cyc)) return {false, cyc, false};
    }
    return {};
}

namespace {

void require_flag(const SimplicialComplex& K, const char* op) {
    if (K.mode == SimplicialComplex::Mode::flag) return;
    auto fc = is_flag(K);
    if (!fc.flag) throw std::invalid_argument(std::string(op) + " requires a flag complex");
}

} // namespace

SimplicialComplex link(const SimplicialComplex& K, const Simplex& sigma) {
    if (!K.contains(sigma)) throw std::invalid_argument("link: simplex not in complex");
    if (K.mode == SimplicialComplex::Mode::flag) {
        if (sigma.empty()) return flag_complex(K.skeleton);
        BitVec keep(std::size_t(K.n()));
        for (int v = 0; v < K.n(); ++v) keep.set(std::size_t(v));
        for (int s : sigma) { keep &= K.skeleton.adj[s]; }
        for (int s : sigma) keep.set(std::size_t(s), false);
        return flag_complex(K.skeleton.induced(keep));
    }
    // explicit mode: facets of the link come from facets containing σ
    std::vector<std::string> labels;
    std::vector<int> remap(std::size_t(K.n()), -1);
    std::vector<std::vector<int>> fs;
    for (const auto& f : K.facets) {
        if (!subset_of(sigma, f)) continue;
        std::vector<int> rest;
        std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(),
                            std::back_inserter(rest));
        for (int v : rest)
            if (remap[std::size_t(v)] < 0) {
                remap[std::size_t(v)] = -2;  // mark; ids assigned in K's vertex order below
            }
        fs.push_back(std::move(rest));
    }
    for (int v = 0; v < K.n(); ++v)
        if (remap[std::size_t(v)] == -2) {
            remap[std::size_t(v)] = int(labels.size());
            labels.push_back(K.labels()[std::size_t(v)]);
        }
    for (auto& f : fs)
        for (auto& v : f) v = remap[std::size_t(v)];
    return explicit_complex_ids(std::move(labels), std::move(fs));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, const BitVec& W) {
    if (K.mode == SimplicialComplex::Mode::flag)
        return flag_complex(K.skeleton.induced(W));
    std::vector<std::string> labels;
    std::vector<int> old_ids(std::size_t(K.n()), -1);
    int m = 0;
    for (int v = 0; v < K.n(); ++v)
        if (W.get(std::size_t(v))) { labels.push_back(K.labels()[std::size_t(v)]); old_ids[std::size_t(v)] = m++; }
    std::vector<std::vector<int>> fs;
    for (const auto& f : K.facets) {
        std::vector<int> r;
        for (int v : f)
            if (old_ids[std::size_t(v)] >= 0) r.push_back(old_ids[std::size_t(v)]);
        if (!r.empty()) fs.push_back(std::move(r));
    }
    return explicit_complex_ids(std::move(labels), std::move(fs));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, const std::vector<int>& W) {
    return full_subcomplex(K, set_of(W, K.n()));
}

SimplicialComplex combinatorial_sphere(const SimplicialComplex& K, const Simplex& sigma) {
    require_flag(K, "combinatorial_sphere");
    if (sigma.empty()) throw std::invalid_argument("combinatorial_sphere: empty simplex");
    if (!K.contains(sigma)) throw std::invalid_argument("combinatorial_sphere: simplex not in complex");
    BitVec keep(std::size_t(K.n()));
    for (int s : sigma) keep |= K.skeleton.adj[s];
    for (int s : sigma) keep.set(std::size_t(s), false);
    return flag_complex(K.skeleton.induced(keep));
}

SimplicialComplex combinatorial_ball(const SimplicialComplex& K, const Simplex& sigma) {
    require_flag(K, "combinatorial_ball");
    if (sigma.empty()) throw std::invalid_argument("combinatorial_ball: empty simplex");
    if (!K.contains(sigma)) throw std::invalid_argument("combinatorial_ball: simplex not in complex");
    BitVec sig = set_of(sigma, K.n());
    BitVec verts(std::size_t(K.n()));
    std::vector<std::vector<int>> keep_facets;
    for (const auto& f : K.maximal_simplices()) {
        bool meets = false;
        for (int v : f) if (sig.get(std::size_t(v))) { meets = true; break; }
        if (!meets) continue;
        keep_facets.push_back(f);
        for (int v : f) verts.set(std::size_t(v));
    }
    std::vector<std::string> labels;
    std::vector<int> remap(std::size_t(K.n()), -1);
    int m = 0;
    for (int v = 0; v < K.n(); ++v)
        if (verts.get(std::size_t(v))) { labels.push_back(K.labels()[std::size_t(v)]); remap[std::size_t(v)] = m++; }
    for (auto& f : keep_facets)
        for (auto& v : f) v = remap[std::size_t(v)];
    return explicit_complex_ids(std::move(labels), std::move(keep_facets));
}

bool complexes_equal_labeled(const SimplicialComplex& A, const SimplicialComplex& B) {
    std::set<std::string> va(A.labels().begin(), A.labels().end());
    std::set<std::string> vb(B.labels().begin(), B.labels().end());
    if (va != vb) return false;
    std::set<std::vector<std::string>> fa, fb;
    for (const auto& f : A.maximal_simplices()) {
        auto l = A.labels_of(f);
        std::sort(l.begin(), l.end());
        fa.insert(l);
    }
    for (const auto& f : B.maximal_simplices()) {
        auto l = B.labels_of(f);
        std::sort(l.begin(), l.end());
        fb.insert(l);
    }
    return fa == fb;
}

bool link_iteration_check(const SimplicialComplex& K, const Simplex& sigma, const Simplex& tau) {
    if (!subset_of(tau, sigma)) throw std::invalid_argument("link_iteration_check: tau is not a face of sigma");
    SimplicialComplex lhs = link(K, sigma);
    SimplicialComplex inner = link(K, tau);
    Simplex residual;
    for (int v : sigma)
        if (!std::binary_search(tau.begin(), tau.end(), v)) residual.push_back(v);
    Simplex residual_in_inner;
    for (int v : residual) residual_in_inner.push_back(inner.skeleton.index(K.labels()[std::size_t(v)]));
    std::sort(residual_in_inner.begin(), residual_in_inner.end());
    SimplicialComplex rhs = link(inner, residual_in_inner);
    return complexes_equal_labeled(lhs, rhs);
}

ClosestFaceMap closest_face_map(const SimplicialComplex& K, const Simplex& sigma) {
    require_flag(K, "closest_face_map");
    if (sigma.empty()) throw std::invalid_argument("closest_face_map: empty simplex");
    if (!K.contains(sigma)) throw std::invalid_argument("closest_face_map: simplex not in complex");
    ClosestFaceMap out;
    BitVec sig = set_of(sigma, K.n());
    for (int v = 0; v < K.n(); ++v) {
        if (sig.get(std::size_t(v))) continue;
        Simplex f;
        for (int s : sigma)
            if (K.skeleton.adjacent(v, s)) f.push_back(s);
        if (!f.empty()) {
            out.sphere_vertices.push_back(v);
            out.face.push_back(std::move(f));
        }
    }
    return out;
}

Filtration sphere_filtration(const SimplicialComplex& K, const Simplex& sigma) {
    Filtration F;
    F.sigma = sigma;
    F.sphere = combinatorial_sphere(K, sigma);
    F.pi = closest_face_map(K, sigma);
    int k = int(sigma.size()) - 1;  // dim σ = max codimension
    // faces of σ by codimension; τ runs over nonempty faces
    std::vector<std::vector<Simplex>> faces_by_codim(std::size_t(k) + 1);
    std::uint32_t m = std::uint32_t(1) << sigma.size();
    for (std::uint32_t mask = 1; mask < m; ++mask) {
        Simplex t;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            if (mask & (1u << i)) t.push_back(sigma[i]);
        int codim = int(sigma.size() - t.size());
        faces_by_codim[std::size_t(codim)].push_back(std::move(t));
    }
    for (auto& fl : faces_by_codim) std::sort(fl.begin(), fl.end());

    std::vector<int> stage;  // accumulating vertex ids of S_i
    std::vector<char> in_stage(std::size_t(K.n()), 0);
    for (int i = 0; i <= k; ++i) {
        std::vector<FiltrationClass> classes;
        for (const auto& tau : faces_by_codim[std::size_t(i)]) {
            FiltrationClass cls;
            cls.tau = tau;
            for (std::size_t j = 0; j < F.pi.sphere_vertices.size(); ++j)
                if (F.pi.face[j] == tau) cls.L.push_back(F.pi.sphere_vertices[j]);
            // ∂L_τ = V(lk(τ,K)) ∩ V(S_{i-1})
            SimplicialComplex lk_tau = link(K, tau);
            for (const auto& lbl : lk_tau.labels()) {
                int v = K.skeleton.index(lbl);
                if (in_stage[std::size_t(v)]) cls.boundary.push_back(v);
            }
            std::sort(cls.boundary.begin(), cls.boundary.end());
            classes.push_back(std::move(cls));
        }
        for (const auto& cls : classes)
            for (int v : cls.L)
                if (!in_stage[std::size_t(v)]) { in_stage[std::size_t(v)] = 1; stage.push_back(v); }
        std::sort(stage.begin(), stage.end());
        F.stage_vertices.push_back(stage);
        F.classes_by_codim.push_back(std::move(classes));
    }
    return F;
}

} // namespace fibercox
