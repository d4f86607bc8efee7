#include "fibercox/structure_checks.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibercox {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += parts[i];
    }
    return s;
}

std::string simplex_label(const SimplicialComplex& K, const Simplex& s) {
    return "{" + join(K.labels_of(s)) + "}";
}

std::string cube_label(const CubeComplex& X, const Cube& c) {
    std::vector<std::string> ls;
    for (int v : c.sorted()) ls.push_back(X.vertices[std::size_t(v)]);
    return "{" + join(ls) + "}";
}

Simplex set_difference(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

// localize a simplex of K (given by ids in K) inside a subcomplex that kept
// K's labels
Simplex localize(const SimplicialComplex& sub, const SimplicialComplex& K, const Simplex& s) {
    return sub.simplex_from_labels(K.labels_of(s));
}

} // namespace

bool cube_link_iteration_check(const CubeComplex& X, int cube_id, int v) {
    const Cube& box = X.cube(cube_id);
    int pos = -1;
    for (int m = 0; m < int(box.verts.size()); ++m)
        if (box.verts[std::size_t(m)] == v) pos = m;
    if (pos < 0)
        throw std::invalid_argument("cube_link_iteration_check: vertex not in the cube");

    SimplicialComplex lv = vertex_link(X, v);
    std::vector<std::string> tau_labels;
    for (int a = 0; a < box.dim; ++a)
        tau_labels.push_back(X.vertices[std::size_t(box.verts[std::size_t(pos ^ (1 << a))])]);
    Simplex tau = lv.simplex_from_labels(tau_labels);
    if (!lv.contains(tau)) return false;  // the edges of the box at v must span a simplex

    SimplicialComplex iterated = link(lv, tau);
    SimplicialComplex direct = cube_link(X, cube_id);
    if (iterated.n() != direct.n()) return false;

    // relabel each vertex w of the iterated link by the codimension-1 coface
    // of the box spanned together with the edge (v, w)
    auto base_verts = box.sorted();
    std::vector<std::string> relabels(std::size_t(iterated.n()));
    for (int r = 0; r < iterated.n(); ++r) {
        int w = X.index(iterated.labels()[std::size_t(r)]);
        int found = -1;
        for (int c : X.vert_cubes[std::size_t(w)]) {
            if (X.cube(c).dim != box.dim + 1) continue;
            if (!X.is_face_of(cube_id, c)) continue;
            if (found >= 0) return false;  // coface ambiguous
            found = c;
        }
        if (found < 0) return false;  // no coface spans the box and the edge
        auto verts = X.cube(found).sorted();
        std::vector<int> extra;
        std::set_difference(verts.begin(), verts.end(), base_verts.begin(), base_verts.end(),
                            std::back_inserter(extra));
        std::vector<std::string> ls;
        for (int u : extra) ls.push_back(X.vertices[std::size_t(u)]);
        relabels[std::size_t(r)] = join(ls);
    }
    {
        auto sorted = relabels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    SimplicialComplex renamed = explicit_complex_ids(relabels, iterated.maximal_simplices());
    return complexes_equal_labeled(renamed, direct);
}

bool ball_fullness_check(const SimplicialComplex& K, const Simplex& sigma) {
    if (sigma.empty())
        throw std::invalid_argument("ball_fullness_check: sigma must be nonempty");
    SimplicialComplex ball = combinatorial_ball(K, sigma);
    std::vector<int> W(sigma);
    for (int u = 0; u < K.n(); ++u) {
        if (std::binary_search(sigma.begin(), sigma.end(), u)) continue;
        for (int s : sigma)
            if (K.skeleton.adjacent(u, s)) {
                W.push_back(u);
                break;
            }
    }
    std::sort(W.begin(), W.end());
    return complexes_equal_labeled(ball, full_subcomplex(K, W));
}

bool ball_collapse_check(const SimplicialComplex& K, const Simplex& sigma, int restarts,
                         std::uint64_t seed) {
    if (sigma.empty())
        throw std::invalid_argument("ball_collapse_check: sigma must be nonempty");
    return collapse(combinatorial_ball(K, sigma), restarts, seed).collapsible();
}

bool minimal_cube_oracle_check(const CubeComplex& X, const std::vector<int>& S_in) {
    std::vector<int> S(S_in);
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    if (S.empty()) throw std::invalid_argument("minimal_cube_oracle_check: empty vertex set");

    std::vector<int> common;
    bool any = false;
    for (const Cube& c : X.closure) {
        auto cv = c.sorted();
        if (!std::includes(cv.begin(), cv.end(), S.begin(), S.end())) continue;
        if (!any) {
            common = cv;
            any = true;
        } else {
            std::vector<int> tmp;
            std::set_intersection(common.begin(), common.end(), cv.begin(), cv.end(),
                                  std::back_inserter(tmp));
            common = std::move(tmp);
        }
    }
    if (!any) {
        try {
            minimal_cube(X, S);
            return false;  // the oracle found nothing but minimal_cube answered
        } catch (const std::exception&) {
            return true;
        }
    }
    Cube m;
    try {
        m = minimal_cube(X, S);
    } catch (const std::exception&) {
        return false;
    }
    return m.sorted() == common && X.id_of(common) >= 0;
}

FiltrationReport sphere_filtration_report(const SimplicialComplex& K, const Simplex& sigma,
                                          int n, int restarts, std::uint64_t seed) {
    if (sigma.empty())
        throw std::invalid_argument("sphere_filtration_report: sigma must be nonempty");
    FiltrationReport rep;
    rep.sigma = sigma;
    Filtration F = sphere_filtration(K, sigma);
    auto fail = [&rep](const std::string& msg) {
        if (rep.failure.empty()) rep.failure = msg;
    };

    // class separation: distinct same-codimension classes span no edge
    for (const auto& classes : F.classes_by_codim)
        for (std::size_t a = 0; a + 1 < classes.size(); ++a)
            for (std::size_t b = a + 1; b < classes.size(); ++b)
                for (int u : classes[a].L)
                    for (int v : classes[b].L)
                        if (K.skeleton.adjacent(u, v)) {
                            rep.separation = false;
                            fail("edge " + K.labels()[std::size_t(u)] + "-" +
                                 K.labels()[std::size_t(v)] + " joins the classes of " +
                                 simplex_label(K, classes[a].tau) + " and " +
                                 simplex_label(K, classes[b].tau));
                        }

    // class identification against the link minus the opposite simplex
    for (std::size_t i = 1; i < F.classes_by_codim.size(); ++i) {
        for (const FiltrationClass& cl : F.classes_by_codim[i]) {
            Simplex sig_hat = set_difference(sigma, cl.tau);
            SimplicialComplex Z = link(K, cl.tau);
            std::set<std::string> hat_labels;
            for (int u : sig_hat) hat_labels.insert(K.labels()[std::size_t(u)]);

            std::vector<int> off_hat;  // ids in K of link vertices outside σ̂
            for (const auto& lbl : Z.labels())
                if (!hat_labels.count(lbl)) off_hat.push_back(K.skeleton.index(lbl));
            std::sort(off_hat.begin(), off_hat.end());

            SimplicialComplex lhs = full_subcomplex(K, sorted_union(cl.L, cl.boundary));
            SimplicialComplex rhs = full_subcomplex(K, off_hat);
            if (!complexes_equal_labeled(lhs, rhs)) {
                rep.identification = false;
                fail("class of " + simplex_label(K, cl.tau) +
                     " does not match the link minus " + simplex_label(K, sig_hat));
            }

            // ∂L must be exactly the link vertices at distance one from σ̂
            std::vector<int> expect;
            for (int u : off_hat)
                for (int w : sig_hat)
                    if (K.skeleton.adjacent(u, w)) {
                        expect.push_back(u);
                        break;
                    }
            if (expect != cl.boundary) {
                rep.boundary_ok = false;
                fail("recorded boundary of " + simplex_label(K, cl.tau) +
                     " differs from the distance-one vertices of its link");
            }

            // containment: stage vertices adjacent to the class stay inside it
            std::set<int> allowed(cl.L.begin(), cl.L.end());
            allowed.insert(cl.boundary.begin(), cl.boundary.end());
            for (int u : F.stage_vertices[i]) {
                if (allowed.count(u)) continue;
                for (int v : cl.L)
                    if (K.skeleton.adjacent(u, v)) {
                        rep.identification = false;
                        fail("stage vertex " + K.labels()[std::size_t(u)] +
                             " touches the class of " + simplex_label(K, cl.tau) +
                             " from outside");
                        break;
                    }
            }
        }
    }

    // base stage: S₀ is the link of σ
    const std::vector<int>& s0 = F.stage_vertices[0];
    if (!s0.empty()) {
        int cd = cohomological_dimension(full_subcomplex(K, s0));
        if (cd > n - 1) {
            rep.base_cd = false;
            fail("cd(S_0) = " + std::to_string(cd) + " exceeds " + std::to_string(n - 1));
        }
    }

    // gluing steps, one class at a time in filtration order
    std::vector<int> W(s0);
    for (std::size_t i = 1; i < F.classes_by_codim.size(); ++i) {
        for (const FiltrationClass& cl : F.classes_by_codim[i]) {
            GluingStep step;
            step.tau = cl.tau;
            if (cl.L.empty()) {
                step.vacuous = true;
                step.hypotheses = step.exact = step.bound = true;
                rep.steps.push_back(std::move(step));
                continue;
            }
            Simplex sig_hat = set_difference(sigma, cl.tau);
            SimplicialComplex Z = link(K, cl.tau);
            Simplex hat_local = localize(Z, K, sig_hat);
            std::vector<int> comp;
            for (int zi = 0; zi < Z.n(); ++zi)
                if (!std::binary_search(hat_local.begin(), hat_local.end(), zi))
                    comp.push_back(zi);
            SimplicialComplex A = full_subcomplex(Z, comp);
            SimplicialComplex B = combinatorial_ball(Z, hat_local);
            SimplicialComplex C = combinatorial_sphere(Z, hat_local);

            step.hypotheses = true;
            int cd_z = cohomological_dimension(Z);
            if (cd_z > n - 1) {
                step.hypotheses = false;
                step.note = "cd(link) = " + std::to_string(cd_z);
            }
            if (!collapse(B, restarts, seed).collapsible()) {
                step.hypotheses = false;
                step.note = "ball around " + simplex_label(K, sig_hat) + " did not collapse";
            }
            if (!W.empty()) {
                int cd_w = cohomological_dimension(full_subcomplex(K, W));
                if (cd_w > n - 1) {
                    step.hypotheses = false;
                    step.note = "cd(carried union) = " + std::to_string(cd_w);
                }
            }

            step.exact = true;
            try {
                MvReport mv = mayer_vietoris_check(A, B, C, Z);
                if (!mv.exact) {
                    step.exact = false;
                    step.note = "link gluing not exact: " + mv.failure;
                }
            } catch (const std::exception& e) {
                step.exact = false;
                step.note = std::string("link gluing rejected: ") + e.what();
            }

            std::vector<int> WU = sorted_union(W, cl.L);
            SimplicialComplex U = full_subcomplex(K, WU);
            if (!W.empty()) {
                try {
                    MvReport mv = mayer_vietoris_check(A, full_subcomplex(K, W),
                                                       full_subcomplex(K, cl.boundary), U);
                    if (!mv.exact) {
                        step.exact = false;
                        step.note = "stage gluing not exact: " + mv.failure;
                    }
                } catch (const std::exception& e) {
                    step.exact = false;
                    step.note = std::string("stage gluing rejected: ") + e.what();
                }
            }

            int cd_u = cohomological_dimension(U);
            step.bound = cd_u <= n - 1;
            if (!step.bound)
                step.note = "cd after gluing = " + std::to_string(cd_u);
            if (!step.hypotheses || !step.exact || !step.bound)
                fail("gluing step at " + simplex_label(K, cl.tau) + ": " + step.note);
            rep.steps.push_back(std::move(step));
            W = std::move(WU);
        }
    }

    if (W != F.stage_vertices.back()) fail("filtration stages do not exhaust the sphere");

    rep.ok = rep.separation && rep.identification && rep.boundary_ok && rep.base_cd &&
             rep.failure.empty() &&
             std::all_of(rep.steps.begin(), rep.steps.end(), [](const GluingStep& s) {
                 return s.vacuous || (s.hypotheses && s.exact && s.bound);
             });
    return rep;
}

SuiteReport structure_suite(const Thickening& th, const SuiteOptions& opts) {
    if (th.implicit_mode)
        throw std::invalid_argument("structure_suite requires an explicit thickening");
    const SimplicialComplex& K = th.complex;
    const CubeComplex& X = th.base;

    SuiteReport rep;
    auto add = [&rep](SuiteCheck c) {
        rep.cases += c.cases;
        rep.counterexamples += c.failures;
        if (c.failures) rep.ok = false;
        rep.checks.push_back(std::move(c));
    };

    {
        SuiteCheck c;
        c.name = "cube-link-iteration";
        for (int id = 0; id < int(X.closure.size()); ++id) {
            const Cube& box = X.cube(id);
            for (int v : box.verts) {
                ++c.cases;
                if (!cube_link_iteration_check(X, id, v)) {
                    ++c.failures;
                    if (c.witness.empty())
                        c.witness = cube_label(X, box) + " at " + X.vertices[std::size_t(v)];
                }
            }
        }
        add(c);
    }

    auto sims = K.all_simplices(opts.budget);

    {
        SuiteCheck c;
        c.name = "link-iteration";
        for (const Simplex& s : sims) {
            std::uint32_t m = std::uint32_t(1) << s.size();
            for (std::uint32_t mask = 0; mask < m; ++mask) {
                Simplex tau;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (mask & (1u << i)) tau.push_back(s[i]);
                ++c.cases;
                if (!link_iteration_check(K, s, tau)) {
                    ++c.failures;
                    if (c.witness.empty())
                        c.witness = simplex_label(K, s) + " over " + simplex_label(K, tau);
                }
            }
        }
        add(c);
    }

    {
        SuiteCheck full, col;
        full.name = "ball-fullness";
        col.name = "ball-collapse";
        for (const Simplex& s : sims) {
            ++full.cases;
            if (!ball_fullness_check(K, s)) {
                ++full.failures;
                if (full.witness.empty()) full.witness = simplex_label(K, s);
            }
            ++col.cases;
            if (!ball_collapse_check(K, s, opts.restarts, opts.seed)) {
                ++col.failures;
                if (col.witness.empty()) col.witness = simplex_label(K, s);
            }
        }
        add(full);
        add(col);
    }

    {
        SuiteCheck c;
        c.name = "minimal-cube-oracle";
        for (const Simplex& s : sims) {
            std::vector<int> S;
            for (int y : s) S.push_back(th.base_of(y));
            ++c.cases;
            if (!minimal_cube_oracle_check(X, S)) {
                ++c.failures;
                if (c.witness.empty()) c.witness = simplex_label(K, s);
            }
        }
        add(c);
    }

    {
        SuiteCheck c;
        c.name = "join-decomposition";
        for (const Simplex& s : sims) {
            ++c.cases;
            JoinDecomposition jd = link_join_decomposition(th, s, opts.budget);
            if (!(jd.join_ok && jd.prime_simplex_ok && jd.homology_ok)) {
                ++c.failures;
                if (c.witness.empty()) {
                    std::string what = !jd.join_ok           ? "join"
                                       : !jd.prime_simplex_ok ? "inner simplex"
                                                              : "homology";
                    c.witness = simplex_label(K, s) + " (" + what + ")";
                }
            }
        }
        add(c);
    }

    {
        SuiteCheck sep, ident, glue;
        sep.name = "class-separation";
        ident.name = "class-identification";
        glue.name = "gluing-bound";
        for (const Simplex& s : sims) {
            FiltrationReport fr = sphere_filtration_report(K, s, opts.level, opts.restarts,
                                                           opts.seed);
            ++sep.cases;
            if (!fr.separation) {
                ++sep.failures;
                if (sep.witness.empty()) sep.witness = simplex_label(K, s) + ": " + fr.failure;
            }
            ++ident.cases;
            if (!fr.identification || !fr.boundary_ok) {
                ++ident.failures;
                if (ident.witness.empty())
                    ident.witness = simplex_label(K, s) + ": " + fr.failure;
            }
            ++glue.cases;
            bool steps_ok = fr.base_cd &&
                            std::all_of(fr.steps.begin(), fr.steps.end(), [](const GluingStep& g) {
                                return g.vacuous || (g.hypotheses && g.exact && g.bound);
                            });
            if (!steps_ok) {
                ++glue.failures;
                if (glue.witness.empty()) glue.witness = simplex_label(K, s) + ": " + fr.failure;
            }
        }
        add(sep);
        add(ident);
        add(glue);
    }

    {
        SuiteCheck sph, lnk;
        sph.name = "sphere-cd-bound";
        lnk.name = "link-cd-bound";
        for (const Simplex& s : sims) {
            ++sph.cases;
            if (!sphere_cd_check(K, s, opts.level)) {
                ++sph.failures;
                if (sph.witness.empty()) sph.witness = simplex_label(K, s);
            }
            ++lnk.cases;
            if (!link_cd_check(K, s, opts.level)) {
                ++lnk.failures;
                if (lnk.witness.empty()) lnk.witness = simplex_label(K, s);
            }
        }
        add(sph);
        add(lnk);
    }

    return rep;
}

} // namespace fibercox
