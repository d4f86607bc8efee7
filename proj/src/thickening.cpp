#include "fibercox/thickening.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fibercox {

bool Thickening::adjacent(int y1, int y2) const {
    if (y1 == y2) return false;
    int a = base_of(y1), b = base_of(y2);
    return a == b || base.share_adj[std::size_t(a)].get(std::size_t(b));
}

bool Thickening::contains(const std::vector<int>& ys) const {
    if (ys.empty()) return true;
    std::vector<int> image;
    for (int y : ys) {
        if (y < 0 || y >= n()) return false;
        image.push_back(base_of(y));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image.size() == 1) return true;
    const auto& cubes0 = base.vert_cubes[std::size_t(image[0])];
    for (int id : cubes0) {
        auto verts = base.cube(id).sorted();
        if (std::includes(verts.begin(), verts.end(), image.begin(), image.end())) return true;
    }
    return false;
}

std::vector<int> Thickening::neighbors(int y) const {
    std::vector<int> out;
    int b = base_of(y);
    for (int u : fibers[std::size_t(b)])
        if (u != y) out.push_back(u);
    const BitVec& nb = base.share_adj[std::size_t(b)];
    for (std::size_t u = nb.first(); u < nb.size(); u = nb.next(u))
        for (int z : fibers[u]) out.push_back(z);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void finish_thickening(Thickening& th, std::size_t implicit_threshold) {
    int nb = th.base.n();
    if (int(th.alpha.to_base.size()) != int(th.alpha.domain.size()))
        throw std::invalid_argument("alpha map is not total");
    {
        auto chk = th.alpha.domain;
        std::sort(chk.begin(), chk.end());
        if (std::adjacent_find(chk.begin(), chk.end()) != chk.end())
            throw std::invalid_argument("alpha map domain has duplicate labels");
    }
    th.fibers.assign(std::size_t(nb), {});
    for (int y = 0; y < th.n(); ++y) {
        int v = th.alpha.to_base[std::size_t(y)];
        if (v < 0 || v >= nb) throw std::invalid_argument("alpha map hits an unknown base vertex");
        th.fibers[std::size_t(v)].push_back(y);
    }
    for (int v = 0; v < nb; ++v)
        if (th.fibers[std::size_t(v)].empty())
            throw std::invalid_argument("alpha map is not surjective: vertex " +
                                        th.base.vertices[std::size_t(v)] + " has empty fiber");

    th.implicit_mode = std::size_t(th.n()) > implicit_threshold;
    if (th.implicit_mode) return;
    std::vector<std::vector<int>> facets;
    for (const auto& c : th.base.maximal) {
        std::vector<int> f;
        for (int v : c.sorted())
            for (int y : th.fibers[std::size_t(v)]) f.push_back(y);
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
    }
    th.complex = explicit_complex_ids(th.alpha.domain, std::move(facets));
}

} // namespace

Thickening build_th1(const CubeComplex& X, std::size_t implicit_threshold) {
    Thickening th;
    th.base = X;
    th.alpha.domain = X.vertices;
    for (int v = 0; v < X.n(); ++v) th.alpha.to_base.push_back(v);
    finish_thickening(th, implicit_threshold);
    return th;
}

Thickening build_th_alpha(const CubeComplex& X, AlphaMap alpha, std::size_t implicit_threshold) {
    Thickening th;
    th.base = X;
    th.alpha = std::move(alpha);
    finish_thickening(th, implicit_threshold);
    return th;
}

Thickening build_pair_thickening(const CubeComplex& X, std::size_t implicit_threshold) {
    Thickening th;
    th.base = X;
    std::map<std::pair<int, int>, int> index;
    for (int v = 0; v < X.n(); ++v) {
        auto dist = cubical_distances_from(X, v);
        for (int w = 0; w < X.n(); ++w) {
            if (w == v) continue;
            if (dist[std::size_t(w)] < 0 || dist[std::size_t(w)] >= 2) {
                index[{v, w}] = int(th.pairs.size());
                th.pairs.emplace_back(v, w);
                th.alpha.domain.push_back(X.vertices[std::size_t(v)] + "|" +
                                          X.vertices[std::size_t(w)]);
                th.alpha.to_base.push_back(v);
            }
        }
    }
    if (th.pairs.empty())
        throw std::runtime_error("thickening empty: every two vertices share a cube");
    for (int v = 0; v < X.n(); ++v) {
        bool covered = false;
        for (const auto& [a, b] : th.pairs)
            if (a == v) { covered = true; break; }
        if (!covered)
            throw std::runtime_error("pair thickening is not surjective: vertex " +
                                     X.vertices[std::size_t(v)] +
                                     " is within cubical distance 1 of every vertex");
    }
    th.partner.resize(th.pairs.size());
    for (std::size_t y = 0; y < th.pairs.size(); ++y)
        th.partner[y] = index.at({th.pairs[y].second, th.pairs[y].first});
    finish_thickening(th, implicit_threshold);
    return th;
}

namespace {

struct ReducedSummary {
    std::vector<long long> betti;          // degree 0.. (trailing zeros trimmed)
    long long minus_one = 0;
    std::vector<std::vector<Int>> torsion;  // Z only

    bool operator==(const ReducedSummary& o) const = default;
};

ReducedSummary reduced_summary(const ChainComplex& C, Coeffs coeffs) {
    HomologyResult h = homology(C, coeffs, true);
    ReducedSummary s;
    s.minus_one = h.minus_one.betti;
    for (const auto& g : h.groups) {
        s.betti.push_back(g.betti);
        s.torsion.push_back(g.torsion);
    }
    while (!s.betti.empty() && s.betti.back() == 0 && s.torsion.back().empty()) {
        s.betti.pop_back();
        s.torsion.pop_back();
    }
    return s;
}

const char* coeff_name(Coeffs c) {
    switch (c) {
        case Coeffs::Z: return "Z";
        case Coeffs::Q: return "Q";
        case Coeffs::GF2: return "GF(2)";
    }
    return "?";
}

} // namespace

HomotopyAudit homotopy_audit(const Thickening& th, std::size_t budget) {
    if (th.implicit_mode)
        throw std::runtime_error("homotopy audit requires an explicit thickening");
    HomotopyAudit audit;
    ChainComplex ct = chain_complex(th.complex, budget);
    ChainComplex cb = chain_complex(th.base);
    for (Coeffs coeffs : {Coeffs::Z, Coeffs::Q, Coeffs::GF2}) {
        if (reduced_summary(ct, coeffs) != reduced_summary(cb, coeffs)) {
            audit.ok = false;
            audit.detail = std::string("reduced homology differs from the base over ") +
                           coeff_name(coeffs);
            return audit;
        }
    }
    return audit;
}

bool section_retraction_check(const Thickening& th, const std::vector<int>& section,
                              std::size_t budget) {
    if (th.implicit_mode)
        throw std::runtime_error("section check requires an explicit thickening");
    if (int(section.size()) != th.base.n())
        throw std::invalid_argument("section must assign one thickening vertex per base vertex");
    for (int v = 0; v < th.base.n(); ++v) {
        int y = section[std::size_t(v)];
        if (y < 0 || y >= th.n() || th.base_of(y) != v)
            throw std::invalid_argument("not a section: alpha(s(" +
                                        th.base.vertices[std::size_t(v)] + ")) differs");
    }
    // image subcomplex with vertices renamed to their base labels
    std::vector<int> image = section;
    std::sort(image.begin(), image.end());
    std::vector<int> remap(std::size_t(th.n()), -1);
    std::vector<std::string> labels;
    for (int y : image) {
        remap[std::size_t(y)] = int(labels.size());
        labels.push_back(th.base.vertices[std::size_t(th.base_of(y))]);
    }
    std::vector<std::vector<int>> facets;
    for (const auto& f : th.complex.facets) {
        std::vector<int> r;
        for (int y : f)
            if (remap[std::size_t(y)] >= 0) r.push_back(remap[std::size_t(y)]);
        if (!r.empty()) facets.push_back(std::move(r));
    }
    SimplicialComplex image_complex = explicit_complex_ids(std::move(labels), std::move(facets));

    Thickening th1 = build_th1(th.base);
    if (!complexes_equal_labeled(image_complex, th1.complex)) return false;

    ChainComplex ct = chain_complex(th.complex, budget);
    ChainComplex ci = chain_complex(image_complex, budget);
    for (Coeffs coeffs : {Coeffs::Z, Coeffs::Q, Coeffs::GF2})
        if (reduced_summary(ct, coeffs) != reduced_summary(ci, coeffs)) return false;
    return true;
}

JoinDecomposition link_join_decomposition(const Thickening& th, const std::vector<int>& sigma,
                                          std::size_t budget) {
    if (th.implicit_mode)
        throw std::runtime_error("join decomposition requires an explicit thickening");
    if (sigma.empty()) throw std::invalid_argument("join decomposition needs a nonempty simplex");
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!th.contains(s)) throw std::invalid_argument("simplex not in thickening");

    JoinDecomposition out;
    std::vector<int> image;
    for (int y : s) image.push_back(th.base_of(y));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    out.box = minimal_cube(th.base, image);
    auto box_verts = out.box.sorted();
    std::set<int> box_set(box_verts.begin(), box_verts.end());

    std::set<int> sigma_set(s.begin(), s.end());
    for (int v : box_verts)
        for (int y : th.fibers[std::size_t(v)])
            if (!sigma_set.count(y)) out.lk_prime.push_back(y);
    std::sort(out.lk_prime.begin(), out.lk_prime.end());

    // link vertices: y outside σ with σ ∪ {y} a simplex
    SimplicialComplex link_complex = link(th.complex, s);
    std::vector<int> link_ids;  // thickening ids of link vertices, in link order
    for (const auto& lbl : link_complex.labels())
        link_ids.push_back(th.complex.skeleton.index(lbl));
    for (int y : link_ids)
        if (!box_set.count(th.base_of(y))) out.lk_second.push_back(y);
    std::sort(out.lk_second.begin(), out.lk_second.end());

    // lk' must sit inside the link and span a single simplex with σ
    {
        std::set<int> link_set(link_ids.begin(), link_ids.end());
        bool prime_inside = std::all_of(out.lk_prime.begin(), out.lk_prime.end(),
                                        [&](int y) { return link_set.count(y) > 0; });
        std::vector<int> with_sigma = s;
        with_sigma.insert(with_sigma.end(), out.lk_prime.begin(), out.lk_prime.end());
        out.prime_simplex_ok = prime_inside && th.contains(with_sigma);
        if (link_set.size() != out.lk_prime.size() + out.lk_second.size())
            out.prime_simplex_ok = false;  // some link vertex escaped both parts
    }

    // join structure: link == (simplex on lk') * (full subcomplex on lk'')
    {
        std::vector<int> prime_local, second_local;
        std::map<std::string, int> local_of;
        for (int i = 0; i < link_complex.n(); ++i) local_of[link_complex.labels()[std::size_t(i)]] = i;
        for (int y : out.lk_prime)
            prime_local.push_back(local_of.at(th.alpha.domain[std::size_t(y)]));
        for (int y : out.lk_second)
            second_local.push_back(local_of.at(th.alpha.domain[std::size_t(y)]));
        std::sort(prime_local.begin(), prime_local.end());
        std::sort(second_local.begin(), second_local.end());

        SimplicialComplex second_complex = full_subcomplex(link_complex, second_local);
        std::vector<std::vector<std::string>> join_facets;
        auto prime_labels = link_complex.labels_of(prime_local);
        if (second_complex.n() == 0) {
            if (!prime_labels.empty()) join_facets.push_back(prime_labels);
        } else {
            for (const auto& g : second_complex.maximal_simplices()) {
                auto f = prime_labels;
                for (const auto& lbl : second_complex.labels_of(g)) f.push_back(lbl);
                join_facets.push_back(std::move(f));
            }
        }
        std::vector<std::string> join_labels;
        for (int y : out.lk_prime) join_labels.push_back(th.alpha.domain[std::size_t(y)]);
        for (int y : out.lk_second) join_labels.push_back(th.alpha.domain[std::size_t(y)]);
        std::sort(join_labels.begin(), join_labels.end());
        SimplicialComplex join_complex = explicit_complex(join_labels, join_facets);
        out.join_ok = complexes_equal_labeled(link_complex, join_complex);

        // reduced homology of lk'' against the abstract link of the box
        int box_id = th.base.id_of(box_verts);
        SimplicialComplex abstract = cube_link(th.base, box_id);
        ChainComplex cs = chain_complex(second_complex, budget);
        ChainComplex ca = chain_complex(abstract, budget);
        out.homology_ok = true;
        for (Coeffs coeffs : {Coeffs::Z, Coeffs::Q, Coeffs::GF2})
            if (reduced_summary(cs, coeffs) != reduced_summary(ca, coeffs)) {
                out.homology_ok = false;
                break;
            }
    }
    return out;
}

std::optional<std::array<int, 4>> base_square_witness(const CubeComplex& X, int u) {
    if (u < 0 || u >= X.n()) throw std::invalid_argument("base_square_witness: vertex out of range");
    const BitVec& nu = X.share_adj[std::size_t(u)];
    auto nbrs = nu.ones();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            int v = int(nbrs[i]), z = int(nbrs[j]);
            if (X.share_adj[std::size_t(v)].get(std::size_t(z))) continue;  // diagonal too close
            BitVec common = X.share_adj[std::size_t(v)] & X.share_adj[std::size_t(z)];
            for (std::size_t w = common.first(); w < common.size(); w = common.next(w)) {
                if (int(w) == u || nu.get(w)) continue;
                return std::array<int, 4>{u, v, int(w), z};
            }
        }
    return std::nullopt;
}

} // namespace fibercox
