#pragma once

// JSON input/output for every artifact the CLI reads or writes: graphs,
// explicit simplicial complexes, cube complexes, alpha maps, thickenings and
// the report types. Emission uses insertion-ordered keys and canonical array
// orders, so identical inputs serialize byte-identically. Loaders validate
// through the same constructors the library uses internally.

#include "fibercox/cube_complex.hpp"
#include "fibercox/davis.hpp"
#include "fibercox/graph.hpp"
#include "fibercox/homology.hpp"
#include "fibercox/moves.hpp"
#include "fibercox/simplicial.hpp"
#include "fibercox/structure_checks.hpp"
#include "fibercox/thickening.hpp"

#include "json.hpp"

#include <string>

namespace fibercox {

using Json = nlohmann::ordered_json;

// core objects
Json graph_to_json(const Graph& g);
Json complex_to_json(const SimplicialComplex& K);
Json cube_complex_to_json(const CubeComplex& X);
Json alpha_to_json(const AlphaMap& a, const CubeComplex& base);
// composite record {"base":…, "alpha":…, "complex":…}; the complex is null in
// implicit mode
Json thickening_to_json(const Thickening& th);

Graph graph_from_json(const Json& j);
SimplicialComplex complex_from_json(const Json& j);
CubeComplex cube_complex_from_json(const Json& j);
AlphaMap alpha_from_json(const Json& j, const CubeComplex& base);
// rebuilds the thickening from base + alpha and restores the ordered-pair
// records when every domain label has the "v|w" shape
Thickening thickening_from_json(const Json& j);

// reports
Json legality_report_to_json(const LegalityReport& rep);
Json five_large_to_json(const FiveLargeCertificate& c, const CubeComplex& X);
Json corner_check_to_json(const CornerCheck& c, const CubeComplex& X);
Json disconnection_check_to_json(const DisconnectionCheck& c, const CubeComplex& X);
Json legality_certificate_to_json(const LegalityCertificate& c, const CubeComplex& X);
Json quotient_report_to_json(const QuotientReport& rep, const CubeComplex& X);
Json vcd_result_to_json(const VcdResult& r, const SimplicialComplex& L);
Json suite_report_to_json(const SuiteReport& r);

enum class JsonKind { graph, simplicial, cube, alpha, thickening, unknown };
JsonKind detect_kind(const Json& j);

// file helpers; failures throw std::runtime_error naming the path
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string dump_json(const Json& j);  // 2-space indent plus trailing newline

} // namespace fibercox
