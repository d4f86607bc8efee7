#include "fibercox/racg.hpp"

#include <stdexcept>

namespace fibercox {

RACG racg_from_graph(Graph gamma, std::size_t budget) {
    RACG G;
    G.cliques = all_cliques(gamma, budget);
    G.gamma = std::move(gamma);
    return G;
}

RACG racg_from_complex(const SimplicialComplex& L, std::size_t budget) {
    FlagCheck fc = is_flag(L, budget);
    if (!fc.flag) {
        std::string msg = "defining complex is not flag; missing simplex on {";
        for (std::size_t i = 0; i < fc.witness.size(); ++i) {
            if (i) msg += ", ";
            msg += L.labels()[std::size_t(fc.witness[i])];
        }
        throw std::invalid_argument(msg + "}");
    }
    return racg_from_graph(L.skeleton, budget);
}

HyperbolicityCheck is_hyperbolic_racg(const Graph& gamma) {
    LargenessCheck lc = is_k_large(flag_complex(gamma), 5);
    return {lc.large, lc.witness_cycle};
}

GroupWord word_from_labels(const RACG& G, const std::vector<std::string>& letters) {
    GroupWord w;
    for (const auto& l : letters) w.push_back(G.gamma.index(l));
    return w;
}

std::vector<std::string> word_labels(const RACG& G, const GroupWord& w) {
    std::vector<std::string> out;
    for (int g : w) out.push_back(G.gamma.vertices.at(std::size_t(g)));
    return out;
}

GroupWord racg_normal_form(const RACG& G, GroupWord w) {
    for (int g : w)
        if (g < 0 || g >= G.gamma.n()) throw std::invalid_argument("unknown generator");
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size();) {
            if (w[i] == w[i + 1]) {
                w.erase(w.begin() + long(i), w.begin() + long(i) + 2);
                changed = true;
                if (i > 0) --i;
                continue;
            }
            if (w[i] > w[i + 1] && G.gamma.adjacent(w[i], w[i + 1])) {
                std::swap(w[i], w[i + 1]);
                changed = true;
                if (i > 0) --i;
                continue;
            }
            ++i;
        }
    }
    return w;
}

BitVec abelianization(const RACG& G, const GroupWord& w) {
    BitVec img{std::size_t(G.gamma.n())};
    for (int g : w) img.flip(std::size_t(g));
    return img;
}

} // namespace fibercox
