#include "fibercox/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fibercox {

namespace {

std::string state_string(const BitVec& b) {
    std::string s(b.size(), '0');
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b.get(i)) s[i] = '1';
    return s;
}

std::vector<std::string> labels_of_ids(const std::vector<std::string>& labels,
                                       const std::vector<int>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int v : ids) out.push_back(labels.at(std::size_t(v)));
    return out;
}

// vertex reference: accept a label string or a 0-based index
int vertex_id(const Json& entry, const std::vector<std::string>& labels,
              const std::unordered_map<std::string, int>& index, const char* what) {
    if (entry.is_string()) {
        auto it = index.find(entry.get<std::string>());
        if (it == index.end())
            throw std::runtime_error(std::string(what) + ": unknown vertex label \"" +
                                     entry.get<std::string>() + "\"");
        return it->second;
    }
    if (entry.is_number_integer()) {
        int v = entry.get<int>();
        if (v < 0 || std::size_t(v) >= labels.size())
            throw std::runtime_error(std::string(what) + ": vertex index " + std::to_string(v) +
                                     " out of range");
        return v;
    }
    throw std::runtime_error(std::string(what) + ": vertex entries must be labels or indices");
}

std::vector<std::string> read_labels(const Json& j, const char* what) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::runtime_error(std::string(what) + ": missing \"vertices\" array");
    std::vector<std::string> labels;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string())
            throw std::runtime_error(std::string(what) + ": vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    return labels;
}

std::unordered_map<std::string, int> index_labels(const std::vector<std::string>& labels,
                                                  const char* what) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], int(i)).second)
            throw std::runtime_error(std::string(what) + ": duplicate vertex label \"" +
                                     labels[i] + "\"");
    return index;
}

} // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertices;
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges)
        edges.push_back({g.vertices[std::size_t(a)], g.vertices[std::size_t(b)]});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    auto labels = read_labels(j, "graph");
    auto index = index_labels(labels, "graph");
    Graph g = Graph::from_labels(labels);
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::runtime_error("graph: missing \"edges\" array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("graph: each edge must be a pair");
        g.add_edge(vertex_id(e[0], labels, index, "graph"),
                   vertex_id(e[1], labels, index, "graph"));
    }
    return g;
}

Json complex_to_json(const SimplicialComplex& K) {
    Json j;
    j["vertices"] = K.labels();
    auto facets = K.maximal_simplices();
    std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    Json fj = Json::array();
    for (const auto& f : facets) fj.push_back(labels_of_ids(K.labels(), f));
    j["facets"] = std::move(fj);
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    auto labels = read_labels(j, "complex");
    auto index = index_labels(labels, "complex");
    if (!j.contains("facets") || !j["facets"].is_array())
        throw std::runtime_error("complex: missing \"facets\" array");
    std::vector<std::vector<int>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw std::runtime_error("complex: each facet must be an array");
        std::vector<int> ids;
        for (const auto& v : f) ids.push_back(vertex_id(v, labels, index, "complex"));
        facets.push_back(std::move(ids));
    }
    return explicit_complex_ids(std::move(labels), std::move(facets));
}

Json cube_complex_to_json(const CubeComplex& X) {
    Json j;
    j["vertices"] = X.vertices;
    Json cubes = Json::array();
    for (const Cube& c : X.maximal) {
        Json cj;
        cj["dim"] = c.dim;
        cj["verts"] = labels_of_ids(X.vertices, c.verts);
        cubes.push_back(std::move(cj));
    }
    j["cubes"] = std::move(cubes);
    return j;
}

CubeComplex cube_complex_from_json(const Json& j) {
    auto labels = read_labels(j, "cube complex");
    auto index = index_labels(labels, "cube complex");
    if (!j.contains("cubes") || !j["cubes"].is_array())
        throw std::runtime_error("cube complex: missing \"cubes\" array");
    std::vector<Cube> cubes;
    for (const auto& cj : j["cubes"]) {
        if (!cj.contains("dim") || !cj.contains("verts"))
            throw std::runtime_error("cube complex: each cube needs \"dim\" and \"verts\"");
        Cube c;
        c.dim = cj["dim"].get<int>();
        if (c.dim < 0 || c.dim > 30 ||
            cj["verts"].size() != (std::size_t(1) << c.dim))
            throw std::runtime_error("cube complex: cube of dimension " +
                                     cj["dim"].dump() + " needs 2^dim vertices");
        for (const auto& v : cj["verts"])
            c.verts.push_back(vertex_id(v, labels, index, "cube complex"));
        cubes.push_back(std::move(c));
    }
    return make_cube_complex(std::move(labels), std::move(cubes));
}

Json alpha_to_json(const AlphaMap& a, const CubeComplex& base) {
    Json j;
    j["domain"] = a.domain;
    Json m = Json::object();
    for (std::size_t i = 0; i < a.domain.size(); ++i)
        m[a.domain[i]] = base.vertices[std::size_t(a.to_base[i])];
    j["map"] = std::move(m);
    return j;
}

AlphaMap alpha_from_json(const Json& j, const CubeComplex& base) {
    if (!j.contains("domain") || !j.contains("map"))
        throw std::runtime_error("alpha map: needs \"domain\" and \"map\"");
    AlphaMap a;
    for (const auto& d : j["domain"]) a.domain.push_back(d.get<std::string>());
    for (const auto& y : a.domain) {
        if (!j["map"].contains(y))
            throw std::runtime_error("alpha map: domain vertex \"" + y + "\" has no image");
        a.to_base.push_back(base.index(j["map"][y].get<std::string>()));
    }
    return a;
}

Json thickening_to_json(const Thickening& th) {
    Json j;
    j["base"] = cube_complex_to_json(th.base);
    j["alpha"] = alpha_to_json(th.alpha, th.base);
    j["complex"] = th.implicit_mode ? Json(nullptr) : complex_to_json(th.complex);
    return j;
}

Thickening thickening_from_json(const Json& j) {
    if (!j.contains("base") || !j.contains("alpha"))
        throw std::runtime_error("thickening: needs \"base\" and \"alpha\"");
    CubeComplex base = cube_complex_from_json(j["base"]);
    AlphaMap alpha = alpha_from_json(j["alpha"], base);
    Thickening th = build_th_alpha(base, std::move(alpha));

    // restore ordered-pair records when every label splits as "v|w" with the
    // first component equal to the alpha image
    std::unordered_map<std::string, int> domain_index;
    for (int y = 0; y < th.n(); ++y) domain_index.emplace(th.alpha.domain[std::size_t(y)], y);
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> partner;
    for (int y = 0; y < th.n(); ++y) {
        const std::string& lbl = th.alpha.domain[std::size_t(y)];
        const std::string& first = th.base.vertices[std::size_t(th.base_of(y))];
        if (lbl.size() <= first.size() + 1 || lbl.compare(0, first.size(), first) != 0 ||
            lbl[first.size()] != '|')
            return th;
        std::string second = lbl.substr(first.size() + 1);
        auto rev = domain_index.find(second + "|" + first);
        if (rev == domain_index.end()) return th;
        int w;
        try {
            w = th.base.index(second);
        } catch (const std::exception&) {
            return th;
        }
        pairs.emplace_back(th.base_of(y), w);
        partner.push_back(rev->second);
    }
    th.pairs = std::move(pairs);
    th.partner = std::move(partner);
    return th;
}

Json legality_report_to_json(const LegalityReport& rep) {
    Json j;
    j["mode"] = rep.mode;
    j["rank"] = rep.rank;
    j["orbit"] = rep.orbit;
    j["verdict"] = rep.verdict;
    Json w = Json::array();
    for (const auto& s : rep.witnesses) {
        Json sj;
        sj["state"] = state_string(s.state);
        sj["witness"] = s.witness;
        w.push_back(std::move(sj));
    }
    j["witnesses"] = std::move(w);
    j["seed"] = rep.seed;
    return j;
}

Json five_large_to_json(const FiveLargeCertificate& c, const CubeComplex& X) {
    Json j;
    j["locally_5_large"] = c.locally_5_large;
    j["certified"] = c.certified;
    if (c.link_failure_vertex >= 0) {
        j["link_failure_vertex"] = X.vertices[std::size_t(c.link_failure_vertex)];
        j["link_failure_cycle"] = labels_of_ids(X.vertices, c.link_failure.witness_cycle);
    }
    std::size_t contractible = 0, inconclusive = 0;
    int first_inconclusive = -1;
    for (std::size_t v = 0; v < c.neighborhoods.size(); ++v) {
        if (c.neighborhoods[v] == NeighborhoodVerdict::contractible)
            ++contractible;
        else {
            ++inconclusive;
            if (first_inconclusive < 0) first_inconclusive = int(v);
        }
    }
    j["neighborhoods"] = {{"contractible", contractible}, {"inconclusive", inconclusive}};
    if (first_inconclusive >= 0)
        j["first_inconclusive_neighborhood"] = X.vertices[std::size_t(first_inconclusive)];
    return j;
}

Json corner_check_to_json(const CornerCheck& c, const CubeComplex& X) {
    Json j;
    j["ok"] = c.ok;
    if (!c.ok) {
        j["cube"] = labels_of_ids(X.vertices, X.cube(c.cube).sorted());
        j["vertex"] = X.vertices[std::size_t(c.vertex)];
    }
    return j;
}

Json disconnection_check_to_json(const DisconnectionCheck& c, const CubeComplex& X) {
    Json j;
    j["ok"] = c.ok;
    if (!c.ok) {
        j["cube"] = labels_of_ids(X.vertices, X.cube(c.cube).sorted());
        j["parts"] = c.parts.size();
    }
    return j;
}

Json legality_certificate_to_json(const LegalityCertificate& c, const CubeComplex& X) {
    Json j;
    j["granted"] = c.granted;
    j["five_large"] = five_large_to_json(c.five_large, X);
    j["no_disconnecting_cubes"] = disconnection_check_to_json(c.disconnection, X);
    j["no_isolated_corners"] = corner_check_to_json(c.corners, X);
    if (!c.refusal.empty()) j["refusal"] = c.refusal;
    j["note"] = c.note;
    return j;
}

Json quotient_report_to_json(const QuotientReport& rep, const CubeComplex& X) {
    Json j;
    j["ok"] = rep.ok;
    j["f_vector"] = rep.f_vector;
    j["expected_f_vector"] = rep.expected_f;
    j["f_vector_ok"] = rep.f_vector_ok;
    j["five_large"] = five_large_to_json(rep.five_large, X);
    j["neighborhoods_certified"] = rep.neighborhoods_certified;
    j["no_isolated_corners"] = corner_check_to_json(rep.corners, X);
    j["no_disconnecting_cubes"] = disconnection_check_to_json(rep.disconnection, X);
    j["cd"] = rep.cd;
    j["expected_cd"] = rep.expected_cd;
    j["cd_ok"] = rep.cd_ok;
    j["links_ok"] = rep.links_ok;
    if (!rep.link_failure.empty()) j["link_failure"] = rep.link_failure;
    if (!rep.note.empty()) j["note"] = rep.note;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j;
}

Json vcd_result_to_json(const VcdResult& r, const SimplicialComplex& L) {
    Json j;
    j["vcd"] = r.vcd;
    j["witness"] = labels_of_ids(L.labels(), r.witness);
    Json table = Json::array();
    for (const auto& row : r.table) {
        Json rj;
        rj["simplex"] = labels_of_ids(L.labels(), row.sigma);
        rj["n"] = row.n;
        rj["contributes"] = row.contributes;
        rj["complement_size"] = row.complement_size;
        table.push_back(std::move(rj));
    }
    j["table"] = std::move(table);
    return j;
}

Json suite_report_to_json(const SuiteReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["cases"] = r.cases;
    j["counterexamples"] = r.counterexamples;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["cases"] = c.cases;
        cj["failures"] = c.failures;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

JsonKind detect_kind(const Json& j) {
    if (!j.is_object()) return JsonKind::unknown;
    if (j.contains("base") && j.contains("alpha")) return JsonKind::thickening;
    if (j.contains("cubes")) return JsonKind::cube;
    if (j.contains("facets")) return JsonKind::simplicial;
    if (j.contains("edges")) return JsonKind::graph;
    if (j.contains("domain") && j.contains("map")) return JsonKind::alpha;
    return JsonKind::unknown;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump_json(j);
    if (!out) throw std::runtime_error("write failed on " + path);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace fibercox
