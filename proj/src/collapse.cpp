#include "fibercox/collapse.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace fibercox {

void CellPoset::validate() const {
    if (faces.size() != dims.size())
        throw std::invalid_argument("cell poset: faces/dims size mismatch");
    if (!labels.empty() && labels.size() != dims.size())
        throw std::invalid_argument("cell poset: labels size mismatch");
    for (std::size_t i = 0; i < size(); ++i) {
        if (dims[i] < 0) throw std::invalid_argument("cell poset: negative dimension");
        if (dims[i] == 0 && !faces[i].empty())
            throw std::invalid_argument("cell poset: vertex with faces");
        for (int f : faces[i]) {
            if (f < 0 || std::size_t(f) >= size())
                throw std::invalid_argument("cell poset: face id out of range");
            if (dims[std::size_t(f)] != dims[i] - 1)
                throw std::invalid_argument("cell poset: face not of codimension one");
        }
    }
}

namespace {

struct Attempt {
    CollapseVerdict verdict = CollapseVerdict::inconclusive;
    std::vector<int> residual;
    std::vector<std::pair<int, int>> log;
};

Attempt run_attempt(const CellPoset& poset,
                    const std::vector<std::vector<int>>& cofaces,
                    std::mt19937_64* rng) {
    std::size_t m = poset.size();
    std::vector<char> living(m, 1);
    std::vector<int> coface_count(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (int f : poset.faces[i]) ++coface_count[std::size_t(f)];

    std::vector<int> cands;
    for (std::size_t i = 0; i < m; ++i)
        if (coface_count[i] == 1) cands.push_back(int(i));

    Attempt att;
    std::size_t live_count = m;
    auto remove_cell = [&](int x) {
        living[std::size_t(x)] = 0;
        --live_count;
        for (int f : poset.faces[std::size_t(x)]) {
            if (!living[std::size_t(f)]) continue;
            if (--coface_count[std::size_t(f)] == 1) cands.push_back(f);
        }
    };
    while (!cands.empty()) {
        std::size_t idx = cands.size() - 1;
        if (rng) idx = std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(*rng);
        int c = cands[idx];
        cands[idx] = cands.back();
        cands.pop_back();
        if (!living[std::size_t(c)] || coface_count[std::size_t(c)] != 1) continue;
        int d = -1;
        for (int cf : cofaces[std::size_t(c)])
            if (living[std::size_t(cf)]) { d = cf; break; }
        if (d < 0) continue;  // stale candidate
        remove_cell(d);
        remove_cell(c);
        att.log.emplace_back(c, d);
    }
    for (std::size_t i = 0; i < m; ++i)
        if (living[i]) att.residual.push_back(int(i));
    if (live_count == 1 && poset.dims[std::size_t(att.residual.front())] == 0)
        att.verdict = CollapseVerdict::yes;
    return att;
}

} // namespace

CollapseReport collapse_poset(const CellPoset& poset, int restarts, std::uint64_t seed) {
    poset.validate();
    CollapseReport report;
    report.seed = seed;
    if (poset.size() == 0) return report;  // nothing cannot collapse to a point

    std::vector<std::vector<int>> cofaces(poset.size());
    for (std::size_t i = 0; i < poset.size(); ++i)
        for (int f : poset.faces[i]) cofaces[std::size_t(f)].push_back(int(i));

    for (int attempt = 0; attempt < std::max(restarts, 1); ++attempt) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + std::uint64_t(attempt));
        Attempt att = run_attempt(poset, cofaces, attempt == 0 ? nullptr : &rng);
        ++report.attempts;
        if (report.residual.empty() || att.residual.size() < report.residual.size()) {
            report.residual = att.residual;
            report.log = att.log;
        }
        if (att.verdict == CollapseVerdict::yes) {
            report.verdict = CollapseVerdict::yes;
            report.residual = att.residual;
            report.log = att.log;
            break;
        }
    }
    if (report.verdict != CollapseVerdict::yes) report.log.clear();
    return report;
}

CellPoset cell_poset_from_simplicial(const SimplicialComplex& K, std::size_t budget) {
    auto cells = K.all_simplices(budget);
    std::map<Simplex, int> id_of;
    for (std::size_t i = 0; i < cells.size(); ++i) id_of[cells[i]] = int(i);
    CellPoset poset;
    poset.dims.reserve(cells.size());
    poset.faces.reserve(cells.size());
    poset.labels.reserve(cells.size());
    for (const auto& c : cells) {
        poset.dims.push_back(int(c.size()) - 1);
        std::vector<int> fs;
        if (c.size() > 1) {
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                Simplex f;
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (j != drop) f.push_back(c[j]);
                fs.push_back(id_of.at(f));
            }
        }
        std::sort(fs.begin(), fs.end());
        poset.faces.push_back(std::move(fs));
        auto ls = K.labels_of(c);
        std::string lbl;
        for (std::size_t j = 0; j < ls.size(); ++j) {
            if (j) lbl += ',';
            lbl += ls[j];
        }
        poset.labels.push_back(std::move(lbl));
    }
    return poset;
}

CollapseReport collapse(const SimplicialComplex& K, int restarts, std::uint64_t seed,
                        std::size_t budget) {
    return collapse_poset(cell_poset_from_simplicial(K, budget), restarts, seed);
}

} // namespace fibercox
