#include "fibercox/davis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibercox {

namespace {

std::string vector_label(std::uint64_t g, int n) {
    std::string s(std::size_t(n), '0');
    for (int i = 0; i < n; ++i)
        if ((g >> i) & 1) s[std::size_t(i)] = '1';
    return s;
}

} // namespace

std::vector<long long> quotient_f_vector(const RACG& G) {
    int n = G.gamma.n();
    if (n >= 62) throw std::invalid_argument("defining graph too large for 2^|V| vertices");
    int top = 0;
    std::vector<long long> clique_count;  // index = size
    clique_count.assign(1, 1);            // the empty clique
    for (const auto& c : G.cliques) {
        int d = int(c.size());
        if (d >= int(clique_count.size())) clique_count.resize(std::size_t(d) + 1, 0);
        ++clique_count[std::size_t(d)];
        top = std::max(top, d);
    }
    std::vector<long long> f(std::size_t(top) + 1, 0);
    f[0] = 1LL << n;
    for (int d = 1; d <= top; ++d)
        f[std::size_t(d)] = clique_count[std::size_t(d)] << (n - d);
    return f;
}

DavisQuotient level2_quotient(const RACG& G, std::size_t budget) {
    int n = G.gamma.n();
    std::vector<long long> expected = quotient_f_vector(G);
    long long cells = std::accumulate(expected.begin(), expected.end(), 0LL);
    if (cells < 0 || std::size_t(cells) > budget) {
        std::ostringstream os;
        os << "level-2 quotient has " << cells << " cells, over the budget of " << budget;
        throw std::runtime_error(os.str());
    }

    DavisQuotient X;
    X.gamma = G.gamma;
    std::uint64_t order = std::uint64_t(1) << n;
    std::vector<std::string> labels;
    labels.reserve(order);
    for (std::uint64_t g = 0; g < order; ++g) labels.push_back(vector_label(g, n));

    std::vector<std::vector<int>> maximal_cliques_of;  // only maximal cliques spawn cubes
    {
        for (const auto& c : G.cliques) {
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v) {
                if (std::binary_search(c.begin(), c.end(), v)) continue;
                bool joins = true;
                for (int u : c)
                    if (!G.gamma.adjacent(u, v)) { joins = false; break; }
                if (joins) maximal = false;
            }
            if (maximal) maximal_cliques_of.push_back(c);
        }
    }

    std::vector<Cube> cubes;
    for (const auto& T : maximal_cliques_of) {
        int d = int(T.size());
        std::uint64_t span = 0;
        for (int s : T) span |= std::uint64_t(1) << s;
        // coset representatives: vectors with zero coordinates along T
        for (std::uint64_t g = 0; g < order; ++g) {
            if (g & span) continue;
            Cube c;
            c.dim = d;
            c.verts.resize(std::size_t(1) << d);
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << d); ++mask) {
                std::uint64_t v = g;
                for (int i = 0; i < d; ++i)
                    if ((mask >> i) & 1) v ^= std::uint64_t(1) << T[std::size_t(i)];
                c.verts[std::size_t(mask)] = int(v);
            }
            cubes.push_back(std::move(c));
        }
    }

    X.complex = make_cube_complex(std::move(labels), cubes);
    X.f_vector.assign(std::size_t(X.complex.dim()) + 1, 0);
    for (const auto& c : X.complex.closure) ++X.f_vector[std::size_t(c.dim)];
    return X;
}

EmbeddingCheck two_neighborhood_embedding_check(const RACG& G, const DavisQuotient& X) {
    if (X.complex.n() != (1 << G.gamma.n()))
        throw std::invalid_argument("quotient does not match the group's level-2 vertex count");
    // elements of the finite clique subgroups: products over subsets of cliques,
    // i.e. the vertices at cubical distance <= 1 from the identity
    std::set<GroupWord> ball1;
    ball1.insert({});
    for (const auto& T : G.cliques) {
        int d = int(T.size());
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << d); ++mask) {
            GroupWord w;
            for (int i = 0; i < d; ++i)
                if ((mask >> i) & 1) w.push_back(T[std::size_t(i)]);
            ball1.insert(racg_normal_form(G, w));
        }
    }
    EmbeddingCheck out;
    std::set<GroupWord> ball2;
    std::map<BitVec, GroupWord> image_of;
    for (const auto& u : ball1)
        for (const auto& v : ball1) {
            GroupWord uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            GroupWord nf = racg_normal_form(G, uv);
            if (!ball2.insert(nf).second) continue;
            BitVec img = abelianization(G, nf);
            auto [it, fresh] = image_of.emplace(img, nf);
            if (!fresh) {
                out.injective = false;
                out.elements = ball2.size();
                out.witness_a = word_labels(G, it->second);
                out.witness_b = word_labels(G, nf);
                return out;
            }
        }
    out.injective = true;
    out.elements = ball2.size();
    return out;
}

OneEndedCheck check_one_ended(const SimplicialComplex& L, std::size_t budget) {
    auto connected_complement = [&](const Simplex& s) {
        BitVec keep{std::size_t(L.n())};
        for (int v = 0; v < L.n(); ++v) keep.set(std::size_t(v));
        for (int v : s) keep.set(std::size_t(v), false);
        return connected_within(L.skeleton, keep);
    };
    if (!connected_complement({})) return {false, {}};
    for (const auto& s : L.all_simplices(budget))
        if (!connected_complement(s)) return {false, s};
    return {true, {}};
}

QuotientReport verify_quotient_properties(const DavisQuotient& X, int expected_cd,
                                          int restarts, std::uint64_t seed) {
    QuotientReport rep;
    rep.expected_cd = expected_cd;
    rep.f_vector = X.f_vector;
    rep.expected_f = quotient_f_vector(racg_from_graph(X.gamma));
    rep.f_vector_ok = rep.f_vector == rep.expected_f;
    if (!rep.f_vector_ok) rep.detail = "constructed f-vector differs from the closed form";

    // every vertex link, relabeled by the generator flipped toward each
    // neighbor, must equal the flag complex of the defining graph
    SimplicialComplex flag_gamma = flag_complex(X.gamma);
    rep.links_ok = true;
    for (int v = 0; v < X.complex.n() && rep.links_ok; ++v) {
        SimplicialComplex lk = vertex_link(X.complex, v);
        const std::string& base = X.complex.vertices[std::size_t(v)];
        std::vector<std::string> relabeled;
        bool shape_ok = true;
        for (const auto& lbl : lk.labels()) {
            int diff = -1;
            for (std::size_t i = 0; i < base.size() && shape_ok; ++i)
                if (lbl[i] != base[i]) {
                    if (diff >= 0) shape_ok = false;
                    diff = int(i);
                }
            if (!shape_ok || diff < 0) { shape_ok = false; break; }
            relabeled.push_back(X.gamma.vertices[std::size_t(diff)]);
        }
        if (shape_ok) {
            std::vector<std::vector<std::string>> facet_labels;
            for (const auto& f : lk.maximal_simplices()) {
                std::vector<std::string> fl;
                for (int u : f) fl.push_back(relabeled[std::size_t(u)]);
                facet_labels.push_back(std::move(fl));
            }
            std::vector<std::string> sorted_labels = relabeled;
            std::sort(sorted_labels.begin(), sorted_labels.end());
            if (std::adjacent_find(sorted_labels.begin(), sorted_labels.end()) !=
                sorted_labels.end())
                shape_ok = false;
            else
                shape_ok = complexes_equal_labeled(
                    explicit_complex(sorted_labels, facet_labels), flag_gamma);
        }
        if (!shape_ok) {
            rep.links_ok = false;
            rep.link_failure = base;
            if (rep.detail.empty())
                rep.detail = "link of " + base + " is not the defining flag complex";
        }
    }

    rep.five_large = check_5_large(X.complex, restarts, seed);
    rep.neighborhoods_certified = rep.five_large.certified;
    if (!rep.five_large.locally_5_large && rep.detail.empty())
        rep.detail = "a vertex link is not 5-large";
    if (rep.five_large.locally_5_large && !rep.five_large.certified)
        rep.note =
            "2-neighborhood contractibility not certified: neighborhoods of the closed "
            "quotient wrap around the compact complex instead of lifting; recorded, not "
            "treated as a property failure";
    rep.corners = check_no_isolated_corners(X.complex);
    if (!rep.corners.ok && rep.detail.empty())
        rep.detail = "isolated corner at vertex " +
                     X.complex.vertices[std::size_t(rep.corners.vertex)];
    rep.disconnection = check_no_disconnecting_cubes(X.complex);
    if (!rep.disconnection.ok && rep.detail.empty())
        rep.detail = "a cube disconnects the complex";

    rep.cd = cohomological_dimension(X.complex);
    rep.cd_ok = rep.cd == expected_cd;
    if (!rep.cd_ok && rep.detail.empty()) {
        std::ostringstream os;
        os << "cohomological dimension " << rep.cd << " differs from expected " << expected_cd;
        rep.detail = os.str();
    }

    rep.ok = rep.f_vector_ok && rep.links_ok && rep.five_large.locally_5_large &&
             rep.corners.ok && rep.disconnection.ok && rep.cd_ok;
    return rep;
}

} // namespace fibercox
