#include "fibercox/moves.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibercox {

namespace {

std::string join_labels(const std::vector<std::string>& all, const std::vector<int>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ", ";
        out += all[std::size_t(ids[i])];
    }
    return out;
}

} // namespace

LegalState is_legal_state(const Graph& g, const State& phi) {
    if (phi.size() != std::size_t(g.n()))
        throw std::invalid_argument("state length differs from the vertex count");
    const BitVec& ones = phi;
    BitVec zeros{std::size_t(g.n())};
    for (std::size_t i = 0; i < zeros.size(); ++i)
        if (!phi.get(i)) zeros.set(i);
    for (int side = 0; side < 2; ++side) {
        const BitVec& keep = side == 0 ? zeros : ones;
        const char* name = side == 0 ? "zeros" : "ones";
        auto comps = components_within(g, keep);
        if (comps.empty())
            return {false, std::string(name) + " side is empty"};
        if (comps.size() > 1) {
            std::ostringstream os;
            os << name << " side is disconnected into " << comps.size() << " components";
            return {false, os.str()};
        }
    }
    return {true, ""};
}

bool is_move(const Graph& g, int v, const State& m) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("unknown vertex");
    if (m.size() != std::size_t(g.n()))
        throw std::invalid_argument("move length differs from the vertex count");
    if (!m.get(std::size_t(v))) return false;
    const BitVec& nb = g.adj[std::size_t(v)];
    for (std::size_t u = nb.first(); u < nb.size(); u = nb.next(u))
        if (m.get(u)) return false;
    return true;
}

bool is_move(const Graph& g, const std::string& v, const State& m) {
    return is_move(g, g.index(v), m);
}

State MoveSystem::move_state(int v) const {
    State s{std::size_t(n)};
    for (int i : moves.at(std::size_t(v))) s.set(std::size_t(i));
    return s;
}

State canonical_state(const Thickening& th) {
    if (th.pairs.empty())
        throw std::invalid_argument("canonical state requires a pair thickening");
    State s{std::size_t(th.n())};
    for (int y = 0; y < th.n(); ++y)
        if (th.pairs[std::size_t(y)].first < th.pairs[std::size_t(y)].second)
            s.set(std::size_t(y));
    return s;
}

MoveSystem canonical_moves(const Thickening& th) {
    if (th.pairs.empty())
        throw std::invalid_argument("canonical moves require a pair thickening");
    MoveSystem sys;
    sys.n = th.n();
    sys.moves.resize(std::size_t(th.n()));
    for (int y = 0; y < th.n(); ++y) {
        int p = th.partner[std::size_t(y)];
        sys.moves[std::size_t(y)] = {std::min(y, p), std::max(y, p)};
    }
    sys.basis = move_group_basis(sys.n, sys.moves);
    return sys;
}

std::vector<std::vector<int>> move_group_basis(int n, std::vector<std::vector<int>> moves) {
    for (auto& m : moves) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    moves.erase(std::remove_if(moves.begin(), moves.end(),
                               [](const std::vector<int>& m) { return m.empty(); }),
                moves.end());

    // disjoint supports are independent outright; the canonical pair systems
    // always land here, which keeps million-bit vertex sets tractable
    {
        std::vector<char> seen(std::size_t(n), 0);
        bool disjoint = true;
        for (const auto& m : moves) {
            for (int i : m) {
                if (seen[std::size_t(i)]) { disjoint = false; break; }
                seen[std::size_t(i)] = 1;
            }
            if (!disjoint) break;
        }
        if (disjoint) return moves;
    }

    constexpr std::size_t kDenseBudget = 200'000'000;  // total bits
    if (std::size_t(n) * moves.size() > kDenseBudget)
        throw std::runtime_error("move system too large for dense GF(2) reduction");
    std::vector<BitVec> rows;
    rows.reserve(moves.size());
    for (const auto& m : moves) {
        BitVec r{std::size_t(n)};
        for (int i : m) r.set(std::size_t(i));
        rows.push_back(std::move(r));
    }
    std::vector<std::vector<int>> basis;
    for (const auto& r : gf2_row_reduce(rows)) {
        std::vector<int> support;
        for (std::size_t i : r.ones()) support.push_back(int(i));
        basis.push_back(std::move(support));
    }
    return basis;
}

namespace {

template <typename Legal>
LegalityReport run_orbit(int n_bits, const MoveSystem& sys, const State& S,
                         const OrbitOptions& opts, Legal&& legal_of) {
    if (S.size() != std::size_t(n_bits))
        throw std::invalid_argument("state length differs from the vertex count");
    LegalityReport rep;
    rep.rank = sys.rank();
    rep.seed = opts.seed;

    auto record = [&](const State& st, const LegalState& ls) {
        StateCheck sc;
        sc.state = st;
        sc.witness = ls.witness;
        sc.zeros_ok = ls.legal || ls.witness.rfind("zeros", 0) != 0;
        sc.ones_ok = ls.legal || ls.witness.rfind("ones", 0) != 0;
        if (!ls.legal) {
            rep.all_legal = false;
            rep.witnesses.push_back(sc);
        }
        if (rep.orbit <= opts.record_cap) rep.states.push_back(std::move(sc));
    };

    if (opts.exhaustive) {
        if (rep.rank >= 63 || (std::uint64_t(1) << rep.rank) > opts.budget) {
            std::ostringstream os;
            os << "exhaustive orbit of 2^" << rep.rank << " states exceeds the budget of "
               << opts.budget;
            throw std::runtime_error(os.str());
        }
        rep.mode = "exhaustive";
        rep.orbit = std::uint64_t(1) << rep.rank;
        State cur = S;
        record(cur, legal_of(cur));
        for (std::uint64_t i = 1; i < rep.orbit; ++i) {
            int flip = 0;
            while (!((i >> flip) & 1)) ++flip;  // Gray code: one basis row per step
            for (int b : sys.basis[std::size_t(flip)]) cur.flip(std::size_t(b));
            record(cur, legal_of(cur));
        }
        rep.verdict = rep.all_legal
                          ? "all states legal"
                          : std::to_string(rep.witnesses.size()) + " illegal state(s) found";
    } else {
        rep.mode = "sampled";
        rep.orbit = std::uint64_t(std::max(opts.samples, 0));
        std::mt19937_64 rng(opts.seed);
        for (int d = 0; d < opts.samples; ++d) {
            State cur = S;
            for (const auto& row : sys.basis)
                if (rng() & 1)
                    for (int b : row) cur.flip(std::size_t(b));
            record(cur, legal_of(cur));
        }
        rep.verdict = rep.all_legal
                          ? "no counterexample in " + std::to_string(opts.samples) + " draws"
                          : std::to_string(rep.witnesses.size()) + " illegal state(s) found";
    }
    return rep;
}

} // namespace

LegalityReport check_legal_orbit(const Graph& g, const MoveSystem& sys, const State& S,
                                 const OrbitOptions& opts) {
    return run_orbit(g.n(), sys, S, opts,
                     [&](const State& st) { return is_legal_state(g, st); });
}

LegalState is_legal_state_lazy(const Thickening& th, const State& phi) {
    if (phi.size() != std::size_t(th.n()))
        throw std::invalid_argument("state length differs from the thickening vertex count");
    int nb = th.base.n();
    for (int eps = 0; eps < 2; ++eps) {
        BitVec detected{std::size_t(nb)};
        for (int v = 0; v < nb; ++v)
            for (int y : th.fibers[std::size_t(v)])
                if (int(phi.get(std::size_t(y))) == eps) {
                    detected.set(std::size_t(v));
                    break;
                }
        const char* name = eps == 0 ? "zeros" : "ones";
        if (!detected.any()) return {false, std::string(name) + " side is empty"};
        // BFS in the share graph restricted to detected vertices
        std::size_t start = detected.first();
        BitVec seen{std::size_t(nb)};
        seen.set(start);
        std::queue<std::size_t> q;
        q.push(start);
        std::size_t reached = 1;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            const BitVec& nbR = th.base.share_adj[u];
            for (std::size_t w = nbR.first(); w < nbR.size(); w = nbR.next(w))
                if (detected.get(w) && !seen.get(w)) {
                    seen.set(w);
                    ++reached;
                    q.push(w);
                }
        }
        if (reached != detected.count())
            return {false, std::string(name) + " side is disconnected over the base"};
    }
    return {true, ""};
}

LegalityReport check_legal_orbit_lazy(const Thickening& th, const MoveSystem& sys,
                                      const State& S, const OrbitOptions& opts) {
    return run_orbit(th.n(), sys, S, opts,
                     [&](const State& st) { return is_legal_state_lazy(th, st); });
}

DetectionTable detection_function(const Thickening& th, const State& s, int eps) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("epsilon must be 0 or 1");
    if (s.size() != std::size_t(th.n()))
        throw std::invalid_argument("state length differs from the thickening vertex count");
    DetectionTable table;
    table.eps = eps;
    table.yes = BitVec{std::size_t(th.base.n())};
    for (int v = 0; v < th.base.n(); ++v)
        for (int y : th.fibers[std::size_t(v)])
            if (int(s.get(std::size_t(y))) == eps) {
                table.yes.set(std::size_t(v));
                break;
            }
    return table;
}

BlockadeResult blockade_cube(const CubeComplex& X, const Thickening& th, const State& s,
                             int eps) {
    if (X.vertices != th.base.vertices)
        throw std::invalid_argument("blockade cube: base complex mismatch");
    DetectionTable table = detection_function(th, s, eps);
    BlockadeResult out;
    for (int v = 0; v < X.n(); ++v)
        if (!table.yes.get(std::size_t(v))) out.n_set.push_back(v);
    if (out.n_set.empty()) {
        out.vacuous = true;
        out.cube = X.cube(X.id_of({0}));
        return out;
    }
    for (std::size_t i = 0; i < out.n_set.size(); ++i)
        for (std::size_t j = i + 1; j < out.n_set.size(); ++j)
            if (!X.share_adj[std::size_t(out.n_set[i])].get(std::size_t(out.n_set[j])))
                throw std::runtime_error(
                    "hypothesis violation: undetected vertices " +
                    join_labels(X.vertices, out.n_set) +
                    " are not pairwise at cubical distance 1 (non-orbit state or base not "
                    "5-large)");
    try {
        out.cube = minimal_cube(X, out.n_set);
    } catch (const std::exception& e) {
        throw std::runtime_error("hypothesis violation: undetected vertices " +
                                 join_labels(X.vertices, out.n_set) +
                                 " are not contained in a cube (" + e.what() + ")");
    }
    // coverage: everything outside the returned cube must be detected
    auto cv = out.cube.sorted();
    std::set<int> inside(cv.begin(), cv.end());
    for (int v = 0; v < X.n(); ++v)
        if (!inside.count(v) && !table.yes.get(std::size_t(v)))
            throw std::logic_error("blockade coverage failed at vertex " +
                                   X.vertices[std::size_t(v)]);
    return out;
}

LegalityCertificate certify_legal_by_hypotheses(const CubeComplex& X, int restarts,
                                                std::uint64_t seed) {
    LegalityCertificate cert;
    cert.note = "the per-pair toggle is assigned as the move of both orientations of the pair";
    cert.five_large = check_5_large(X, restarts, seed);
    if (!cert.five_large.certified) {
        std::ostringstream os;
        if (!cert.five_large.locally_5_large) {
            os << "refused: not 5-large; link of "
               << X.vertices[std::size_t(cert.five_large.link_failure_vertex)];
            if (cert.five_large.link_failure.flag_failure)
                os << " is not flag";
            else
                os << " has a chordless short cycle";
        } else {
            os << "refused: inconclusive; a cubical 2-neighborhood did not collapse";
            for (std::size_t v = 0; v < cert.five_large.neighborhoods.size(); ++v)
                if (cert.five_large.neighborhoods[v] != NeighborhoodVerdict::contractible) {
                    os << " (vertex " << X.vertices[v] << ")";
                    break;
                }
        }
        cert.refusal = os.str();
        return cert;
    }
    cert.corners = check_no_isolated_corners(X);
    if (!cert.corners.ok) {
        cert.refusal = "refused: vertex " + X.vertices[std::size_t(cert.corners.vertex)] +
                       " is an isolated corner of the cube {" +
                       join_labels(X.vertices, X.cube(cert.corners.cube).sorted()) + "}";
        return cert;
    }
    cert.disconnection = check_no_disconnecting_cubes(X);
    if (!cert.disconnection.ok) {
        cert.refusal = "refused: removing the cube {" +
                       join_labels(X.vertices, X.cube(cert.disconnection.cube).sorted()) +
                       "} disconnects the complex";
        return cert;
    }
    cert.granted = true;
    return cert;
}

} // namespace fibercox
