#include "fibercox/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fibercox {

namespace mp = boost::multiprecision;

std::vector<Int> SmithResult::torsion() const {
    std::vector<Int> t;
    for (const Int& d : invariant_factors)
        if (d > 1) t.push_back(d);
    return t;
}

SmithResult smith_normal_form(const SparseIntMatrix& M) {
    std::vector<std::map<int, Int>> row(std::size_t(M.rows));
    std::vector<std::set<int>> col_rows(std::size_t(M.cols));
    for (int j = 0; j < M.cols; ++j)
        for (const auto& [r, v] : M.col_entries[std::size_t(j)]) {
            if (v == 0) continue;
            row[std::size_t(r)][j] += v;
            if (row[std::size_t(r)][j] == 0) row[std::size_t(r)].erase(j);
        }
    for (int r = 0; r < M.rows; ++r)
        for (const auto& [j, v] : row[std::size_t(r)]) col_rows[std::size_t(j)].insert(r);

    auto row_axpy = [&](int k, int i, const Int& q) {
        if (q == 0) return;
        for (const auto& [j, v] : row[std::size_t(i)]) {
            auto& dst = row[std::size_t(k)];
            auto it = dst.find(j);
            if (it == dst.end()) {
                Int nv = -q * v;
                if (nv != 0) {
                    dst.emplace(j, std::move(nv));
                    col_rows[std::size_t(j)].insert(k);
                }
            } else {
                it->second -= q * v;
                if (it->second == 0) {
                    dst.erase(it);
                    col_rows[std::size_t(j)].erase(k);
                }
            }
        }
    };
    // subtract q * (column j) from column l; column j must be {pivot row} only
    auto col_axpy_from_pivot = [&](int l, int j, int i, const Int& q) {
        if (q == 0) return;
        const Int& pv = row[std::size_t(i)].at(j);
        auto& dst = row[std::size_t(i)];
        auto it = dst.find(l);
        if (it == dst.end()) {
            Int nv = -q * pv;
            if (nv != 0) {
                dst.emplace(l, std::move(nv));
                col_rows[std::size_t(l)].insert(i);
            }
        } else {
            it->second -= q * pv;
            if (it->second == 0) {
                dst.erase(it);
                col_rows[std::size_t(l)].erase(i);
            }
        }
    };

    std::vector<char> col_done(std::size_t(M.cols), 0);
    std::vector<Int> diag;
    while (true) {
        // pivot column: fewest entries, strongly preferring one holding a unit
        int best_col = -1;
        bool best_unit = false;
        std::size_t best_nnz = 0;
        for (int j = 0; j < M.cols; ++j) {
            if (col_done[std::size_t(j)] || col_rows[std::size_t(j)].empty()) continue;
            std::size_t nnz = col_rows[std::size_t(j)].size();
            bool unit = false;
            for (int r : col_rows[std::size_t(j)]) {
                const Int& v = row[std::size_t(r)].at(j);
                if (v == 1 || v == -1) { unit = true; break; }
            }
            if (best_col < 0 || std::pair(!unit, nnz) < std::pair(!best_unit, best_nnz)) {
                best_col = j;
                best_unit = unit;
                best_nnz = nnz;
            }
        }
        if (best_col < 0) break;
        int j = best_col;
        int i = -1;
        {
            std::size_t best_row_nnz = 0;
            Int best_abs = 0;
            for (int r : col_rows[std::size_t(j)]) {
                Int a = mp::abs(row[std::size_t(r)].at(j));
                std::size_t rn = row[std::size_t(r)].size();
                bool better;
                if (i < 0) better = true;
                else if ((a == 1) != (best_abs == 1)) better = (a == 1);
                else if (a == 1) better = rn < best_row_nnz;
                else better = a < best_abs || (a == best_abs && rn < best_row_nnz);
                if (better) { i = r; best_abs = a; best_row_nnz = rn; }
            }
        }
        while (true) {
            bool restart = false;
            std::vector<int> others(col_rows[std::size_t(j)].begin(), col_rows[std::size_t(j)].end());
            for (int k : others) {
                if (k == i) continue;
                Int a = row[std::size_t(k)].at(j);
                Int b = row[std::size_t(i)].at(j);
                Int q = a / b;  // truncated: remainder strictly smaller in magnitude
                row_axpy(k, i, q);
                if (row[std::size_t(k)].count(j)) { i = k; restart = true; break; }
            }
            if (restart) continue;
            std::vector<std::pair<int, Int>> row_entries(row[std::size_t(i)].begin(),
                                                         row[std::size_t(i)].end());
            for (const auto& [l, v] : row_entries) {
                if (l == j) continue;
                Int b = row[std::size_t(i)].at(j);
                Int q = v / b;
                col_axpy_from_pivot(l, j, i, q);
                if (row[std::size_t(i)].count(l)) { j = l; restart = true; break; }
            }
            if (restart) continue;
            break;
        }
        diag.push_back(mp::abs(row[std::size_t(i)].at(j)));
        for (const auto& [l, v] : row[std::size_t(i)]) col_rows[std::size_t(l)].erase(i);
        row[std::size_t(i)].clear();
        col_done[std::size_t(j)] = 1;
    }

    for (std::size_t a = 0; a < diag.size(); ++a)
        for (std::size_t b = a + 1; b < diag.size(); ++b)
            if (diag[b] % diag[a] != 0) {
                Int g = mp::gcd(diag[a], diag[b]);
                Int l = diag[a] / g * diag[b];
                diag[a] = g;
                diag[b] = l;
            }
    std::sort(diag.begin(), diag.end());
    SmithResult out;
    out.rank = int(diag.size());
    out.invariant_factors = std::move(diag);
    return out;
}

int rank_gf2(const SparseIntMatrix& M) {
    std::vector<BitVec> rows(std::size_t(M.rows), BitVec(std::size_t(M.cols)));
    for (int j = 0; j < M.cols; ++j)
        for (const auto& [r, v] : M.col_entries[std::size_t(j)])
            if (v % 2 != 0) rows[std::size_t(r)].flip(std::size_t(j));
    auto basis = gf2_row_reduce(rows);
    return int(basis.size());
}

int rank_rational(const SparseIntMatrix& M, std::size_t dense_budget) {
    if (std::size_t(M.rows) * std::size_t(M.cols) > dense_budget)
        throw std::runtime_error("rational rank: dense budget exceeded");
    std::vector<std::vector<Rat>> a(std::size_t(M.rows), std::vector<Rat>(std::size_t(M.cols)));
    for (int j = 0; j < M.cols; ++j)
        for (const auto& [r, v] : M.col_entries[std::size_t(j)]) a[std::size_t(r)][std::size_t(j)] += v;
    int rank = 0;
    int r = 0;
    for (int j = 0; j < M.cols && r < M.rows; ++j) {
        int p = -1;
        for (int k = r; k < M.rows; ++k)
            if (a[std::size_t(k)][std::size_t(j)] != 0) { p = k; break; }
        if (p < 0) continue;
        std::swap(a[std::size_t(p)], a[std::size_t(r)]);
        for (int k = r + 1; k < M.rows; ++k) {
            if (a[std::size_t(k)][std::size_t(j)] == 0) continue;
            Rat f = a[std::size_t(k)][std::size_t(j)] / a[std::size_t(r)][std::size_t(j)];
            for (int l = j; l < M.cols; ++l)
                a[std::size_t(k)][std::size_t(l)] -= f * a[std::size_t(r)][std::size_t(l)];
        }
        ++r;
        ++rank;
    }
    return rank;
}

long long ChainComplex::euler() const {
    long long chi = 0;
    for (std::size_t d = 0; d < cells.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * (long long)(cells[d].size());
    return chi;
}

namespace {

std::string label_join(const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += parts[i];
    }
    return s;
}

} // namespace

ChainComplex chain_complex(const SimplicialComplex& K, std::size_t budget) {
    ChainComplex C;
    auto cells = K.all_simplices(budget);
    if (cells.empty()) return C;
    int top = int(cells.back().size()) - 1;
    C.cells.resize(std::size_t(top) + 1);
    C.boundary.resize(std::size_t(top) + 1);
    std::vector<std::map<Simplex, int>> index(std::size_t(top) + 1);
    for (const auto& s : cells) {
        int d = int(s.size()) - 1;
        index[std::size_t(d)].emplace(s, int(C.cells[std::size_t(d)].size()));
        C.cells[std::size_t(d)].push_back(label_join(K.labels_of(s)));
    }
    for (int d = 1; d <= top; ++d) {
        auto& B = C.boundary[std::size_t(d)];
        B.rows = int(C.cells[std::size_t(d) - 1].size());
        B.cols = int(C.cells[std::size_t(d)].size());
        B.col_entries.resize(std::size_t(B.cols));
    }
    for (const auto& s : cells) {
        int d = int(s.size()) - 1;
        if (d == 0) continue;
        int col = index[std::size_t(d)].at(s);
        auto& entries = C.boundary[std::size_t(d)].col_entries[std::size_t(col)];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex f;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != drop) f.push_back(s[k]);
            int sign = (drop % 2 == 0) ? 1 : -1;
            entries.emplace_back(index[std::size_t(d) - 1].at(f), sign);
        }
    }
    return C;
}

ChainComplex chain_complex(const CubeComplex& X) {
    ChainComplex C;
    if (X.closure.empty()) return C;
    int top = X.closure.back().dim;
    C.cells.resize(std::size_t(top) + 1);
    C.boundary.resize(std::size_t(top) + 1);
    std::vector<int> deg_index(X.closure.size());
    for (std::size_t id = 0; id < X.closure.size(); ++id) {
        const Cube& c = X.closure[id];
        deg_index[id] = int(C.cells[std::size_t(c.dim)].size());
        std::vector<std::string> ls;
        for (int v : c.sorted()) ls.push_back(X.vertices[std::size_t(v)]);
        C.cells[std::size_t(c.dim)].push_back(label_join(ls));
    }
    for (int d = 1; d <= top; ++d) {
        auto& B = C.boundary[std::size_t(d)];
        B.rows = int(C.cells[std::size_t(d) - 1].size());
        B.cols = int(C.cells[std::size_t(d)].size());
        B.col_entries.resize(std::size_t(B.cols));
    }
    for (std::size_t id = 0; id < X.closure.size(); ++id) {
        const Cube& c = X.closure[id];
        if (c.dim == 0) continue;
        auto& entries = C.boundary[std::size_t(c.dim)].col_entries[std::size_t(deg_index[id])];
        for (int axis = 0; axis < c.dim; ++axis) {
            int axis_sign = (axis % 2 == 0) ? 1 : -1;
            for (int value = 0; value < 2; ++value) {
                Cube face = cube_face(c, axis, value);
                int fid = X.id_of(face.sorted());
                if (fid < 0) throw std::logic_error("closure is not face-closed");
                int orient = labeling_sign(face, X.closure[std::size_t(fid)]);
                int coeff = axis_sign * (value == 1 ? 1 : -1) * orient;
                entries.emplace_back(deg_index[std::size_t(fid)], coeff);
            }
        }
    }
    return C;
}

namespace {

struct RankData {
    std::vector<int> rank;                       // rank[d] = rank of boundary[d], d in 1..top; rank[top+1] = 0
    std::vector<std::vector<Int>> torsion;       // torsion[d] = torsion of H_d (Z only)
};

RankData boundary_ranks(const ChainComplex& C, Coeffs coeffs) {
    RankData out;
    int top = C.top();
    out.rank.assign(std::size_t(top) + 2, 0);
    out.torsion.assign(std::size_t(top) + 1, {});
    for (int d = 1; d <= top; ++d) {
        const auto& B = C.boundary[std::size_t(d)];
        switch (coeffs) {
            case Coeffs::Z: {
                auto snf = smith_normal_form(B);
                out.rank[std::size_t(d)] = snf.rank;
                out.torsion[std::size_t(d) - 1] = snf.torsion();
                break;
            }
            case Coeffs::Q:
                out.rank[std::size_t(d)] = rank_rational(B);
                break;
            case Coeffs::GF2:
                out.rank[std::size_t(d)] = rank_gf2(B);
                break;
        }
    }
    return out;
}

} // namespace

HomologyResult homology(const ChainComplex& C, Coeffs coeffs, bool reduced) {
    HomologyResult res;
    res.coeffs = coeffs;
    res.reduced = reduced;
    int top = C.top();
    if (top < 0) {
        if (reduced) res.minus_one.betti = 1;  // reduced homology of the empty complex
        return res;
    }
    RankData rd = boundary_ranks(C, coeffs);
    res.groups.resize(std::size_t(top) + 1);
    for (int d = 0; d <= top; ++d) {
        long long n = (long long)(C.cells[std::size_t(d)].size());
        res.groups[std::size_t(d)].betti =
            n - rd.rank[std::size_t(d)] - rd.rank[std::size_t(d) + 1];
        if (coeffs == Coeffs::Z) res.groups[std::size_t(d)].torsion = rd.torsion[std::size_t(d)];
    }
    if (reduced) {
        // augmentation to the empty cell has rank 1 on a nonempty complex
        res.groups[0].betti -= 1;
        res.minus_one.betti = 0;
    }
    return res;
}

HomologyResult cohomology(const ChainComplex& C, Coeffs coeffs, bool reduced) {
    HomologyResult h = homology(C, coeffs, reduced);
    HomologyResult res;
    res.coeffs = coeffs;
    res.reduced = reduced;
    res.groups.resize(h.groups.size());
    for (std::size_t d = 0; d < h.groups.size(); ++d) {
        res.groups[d].betti = h.groups[d].betti;
        if (coeffs == Coeffs::Z && d > 0) res.groups[d].torsion = h.groups[d - 1].torsion;
    }
    res.minus_one.betti = h.minus_one.betti;  // free part only; no Ext below degree -1
    return res;
}

int cohomological_dimension(const ChainComplex& C, Coeffs coeffs) {
    if (C.top() < 0)
        throw std::invalid_argument(
            "cohomological dimension of the empty complex is undefined by convention");
    HomologyResult co = cohomology(C, coeffs, false);
    int cd = 0;  // degree 0 never vanishes on a nonempty complex
    for (int d = int(co.groups.size()) - 1; d >= 0; --d)
        if (co.groups[std::size_t(d)].nontrivial()) { cd = d; break; }
    return cd;
}

int cohomological_dimension(const SimplicialComplex& K, Coeffs coeffs, std::size_t budget) {
    return cohomological_dimension(chain_complex(K, budget), coeffs);
}

int cohomological_dimension(const CubeComplex& X, Coeffs coeffs) {
    return cohomological_dimension(chain_complex(X), coeffs);
}

std::optional<int> reduced_cohomology_top_shift(const ChainComplex& C, Coeffs coeffs) {
    HomologyResult co = cohomology(C, coeffs, true);
    for (int d = int(co.groups.size()) - 1; d >= 0; --d)
        if (co.groups[std::size_t(d)].nontrivial()) return d + 1;
    if (co.minus_one.nontrivial()) return 0;  // empty complex: reduced H^{-1} ≅ Z
    return std::nullopt;
}

VcdResult vcd_racg(const SimplicialComplex& L, Coeffs coeffs, std::size_t budget) {
    std::vector<Simplex> sigmas;
    sigmas.push_back({});  // the empty simplex participates in the sweep
    for (auto& s : L.all_simplices(budget)) sigmas.push_back(std::move(s));

    VcdResult res;
    bool found = false;
    std::map<BitVec, std::optional<int>> memo;
    for (const auto& sigma : sigmas) {
        BitVec keep{std::size_t(L.n())};
        for (int v = 0; v < L.n(); ++v) keep.set(std::size_t(v));
        for (int v : sigma) keep.set(std::size_t(v), false);

        auto it = memo.find(keep);
        std::optional<int> shift;
        if (it != memo.end()) {
            shift = it->second;
        } else {
            SimplicialComplex complement = full_subcomplex(L, keep);
            shift = reduced_cohomology_top_shift(chain_complex(complement, budget), coeffs);
            memo.emplace(keep, shift);
        }
        VcdRow row;
        row.sigma = sigma;
        row.complement_size = int(keep.count());
        row.contributes = shift.has_value();
        row.n = shift.value_or(0);
        if (shift && (!found || *shift > res.vcd)) {
            found = true;
            res.vcd = *shift;
            res.witness = sigma;
        }
        res.table.push_back(std::move(row));
    }
    if (!found) {
        res.vcd = 0;
        res.witness = {};
    }
    return res;
}

bool sphere_cd_check(const SimplicialComplex& T, const Simplex& sigma, int n, Coeffs coeffs) {
    SimplicialComplex S = combinatorial_sphere(T, sigma);
    if (S.n() == 0) return true;
    return cohomological_dimension(chain_complex(S), coeffs) <= n - 1;
}

bool link_cd_check(const SimplicialComplex& T, const Simplex& sigma, int n, Coeffs coeffs) {
    if (sigma.empty()) throw std::invalid_argument("link_cd_check: sigma must be nonempty");
    SimplicialComplex lk = link(T, sigma);
    if (lk.n() == 0) return true;
    return cohomological_dimension(chain_complex(lk), coeffs) <= n - 1;
}

namespace {

std::set<std::vector<std::string>> facet_label_sets(const SimplicialComplex& K) {
    std::set<std::vector<std::string>> out;
    for (const auto& f : K.maximal_simplices()) {
        auto l = K.labels_of(f);
        std::sort(l.begin(), l.end());
        out.insert(std::move(l));
    }
    return out;
}

bool label_subset(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

MvReport mayer_vietoris_check(const SimplicialComplex& A, const SimplicialComplex& B,
                              const SimplicialComplex& C, const SimplicialComplex& Z,
                              Coeffs field) {
    if (field == Coeffs::Z)
        throw std::invalid_argument("mayer_vietoris_check: field coefficients required");
    auto fa = facet_label_sets(A);
    auto fb = facet_label_sets(B);
    auto fz = facet_label_sets(Z);
    // subcomplex checks: every facet of A and B is a simplex of Z
    for (const auto& f : fa)
        if (!Z.contains(Z.simplex_from_labels(f)))
            throw std::invalid_argument("mayer_vietoris_check: A is not a subcomplex of Z");
    for (const auto& f : fb)
        if (!Z.contains(Z.simplex_from_labels(f)))
            throw std::invalid_argument("mayer_vietoris_check: B is not a subcomplex of Z");
    // union: every facet of Z lies in A or in B
    for (const auto& f : fz) {
        bool in_a = std::any_of(fa.begin(), fa.end(),
                                [&](const auto& g) { return label_subset(f, g); });
        bool in_b = std::any_of(fb.begin(), fb.end(),
                                [&](const auto& g) { return label_subset(f, g); });
        if (!in_a && !in_b)
            throw std::invalid_argument("mayer_vietoris_check: A ∪ B does not cover Z");
    }
    // intersection: maximal pairwise facet intersections must reproduce C
    std::set<std::vector<std::string>> inter;
    for (const auto& f : fa)
        for (const auto& g : fb) {
            std::vector<std::string> common;
            std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                                  std::back_inserter(common));
            if (!common.empty()) inter.insert(std::move(common));
        }
    std::set<std::vector<std::string>> inter_max;
    for (const auto& f : inter) {
        bool dominated = std::any_of(inter.begin(), inter.end(), [&](const auto& g) {
            return g.size() > f.size() && label_subset(f, g);
        });
        if (!dominated) inter_max.insert(f);
    }
    if (inter_max != facet_label_sets(C))
        throw std::invalid_argument("mayer_vietoris_check: A ∩ B differs from C");

    auto betti = [&](const SimplicialComplex& K) {
        HomologyResult h = homology(chain_complex(K), field, false);
        std::vector<long long> b;
        for (const auto& g : h.groups) b.push_back(g.betti);
        return b;
    };
    auto bz = betti(Z), ba = betti(A), bb = betti(B), bc = betti(C);
    std::size_t degs = std::max({bz.size(), ba.size(), bb.size(), bc.size()});
    auto at = [](const std::vector<long long>& v, std::size_t d) {
        return d < v.size() ? v[d] : 0LL;
    };

    MvReport rep;
    long long t_prev = 0;
    for (std::size_t d = 0; d < degs; ++d) {
        MvRow row;
        row.degree = int(d);
        row.z = at(bz, d);
        row.m = at(ba, d) + at(bb, d);
        row.c = at(bc, d);
        row.rk_f = row.z - t_prev;
        if (row.rk_f < 0 || row.rk_f > row.m) {
            rep.failure = "rank of restriction map out of range in degree " + std::to_string(d);
            rep.rows.push_back(row);
            return rep;
        }
        row.rk_g = row.m - row.rk_f;
        if (row.rk_g > row.c) {
            rep.failure = "rank of difference map exceeds H(C) in degree " + std::to_string(d);
            rep.rows.push_back(row);
            return rep;
        }
        row.t = row.c - row.rk_g;
        t_prev = row.t;
        rep.rows.push_back(row);
    }
    if (t_prev != 0) {
        rep.failure = "connecting map has nonzero rank past the top degree";
        return rep;
    }
    rep.exact = true;
    return rep;
}

} // namespace fibercox
