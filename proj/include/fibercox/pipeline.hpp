#pragma once

// Iterated construction driver. Each round takes the current cube complex,
// verifies its inductive properties, builds the pair thickening, audits the
// thickened 1-skeleton, certifies the canonical move system, computes or
// asserts the virtual cohomological dimension of the associated group, and
// builds the level-2 quotient that seeds the next round. Budget-driven
// substitutions — sampled scans, sampled orbits, asserted vcd, a skipped
// quotient — are always recorded in the certificate chain as degradation
// labels, never presented as certificates. Runs are deterministic: the same
// configuration and seed produce a byte-identical chain serialization.

#include "fibercox/cube_complex.hpp"
#include "fibercox/davis.hpp"
#include "fibercox/homology.hpp"
#include "fibercox/json_io.hpp"
#include "fibercox/moves.hpp"
#include "fibercox/thickening.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fibercox {

struct PipelineConfig {
    int cycle = 5;             // starting cycle length when no file is given
    std::string complex_path;  // optional starting complex (overrides cycle)
    int iterations = 1;
    std::size_t cell_budget = kDefaultCellBudget;        // homology / vcd sweeps
    std::uint64_t orbit_budget = kDefaultOrbitBudget;    // exhaustive-orbit cap
    std::size_t quotient_budget = kDefaultQuotientBudget;  // quotient closure cells
    int samples = 256;              // orbit draws when exhaustive is out of budget
    int neighborhood_samples = 64;  // local scans over share neighborhoods
    int restarts = kDefaultCollapseRestarts;
    std::uint64_t seed = 0;

    // throws std::invalid_argument on cycle < 5, iterations < 1, or a
    // nonpositive budget or sample count
    void validate() const;
};

// boundary of the k-gon as a 1-dimensional cube complex; throws on k < 5
// (shorter cycles are square boundaries or degenerate and never 5-large)
CubeComplex cycle_complex(int k);

// step 1: the four inductive properties of the round's input complex
struct StepOneReport {
    FiveLargeCertificate five_large;
    bool neighborhoods_sampled = false;  // verdicts drawn on a sample only
    int neighborhoods_checked = 0;       // how many verdicts were attempted
    CornerCheck corners;
    DisconnectionCheck disconnection;
    bool connected = false;
    bool ok = false;             // links 5-large, no corners/disconnection, connected
    bool authoritative = false;  // ok and every checked 2-neighborhood collapsed
    std::string note;            // assertion note when not authoritative
};

// step 3 in implicit mode: per sampled base vertex u, the links of all
// thickening vertices in the fiber over u are certified 5-large through the
// star complex at u (those links are its fiber inflations, and inflation
// preserves flagness and chordless squares in both directions). This is
// link-level evidence only: it cannot certify global square-freeness of the
// thickened skeleton, which stays a recorded degradation
struct LocalScanReport {
    int samples = 0;          // fiber neighborhoods scanned
    bool exhaustive = false;  // every base vertex was scanned
    int violations = 0;
    std::string witness;      // first offending pattern, if any
    std::uint64_t seed = 0;
};

struct VcdRecord {
    std::string status;  // "computed" or "asserted, not computed"
    int value = 0;
    std::vector<std::string> witness;  // labels of the witness simplex (computed)
    std::size_t simplices = 0;         // sweep size (computed)
};

struct IterationRecord {
    int level = 1;      // this round verifies X_level and builds X_{level+1}
    CubeComplex input;  // X_level
    StepOneReport step1;

    std::size_t thickening_vertices = 0;
    bool implicit = false;

    std::string skeleton_audit;     // step 3 outcome summary
    bool skeleton_5_large = false;  // exact verdict (explicit or exhaustive scan)
    LocalScanReport scan;           // sampled evidence (implicit mode)

    LegalityCertificate hypothesis;
    LegalityReport orbit;

    VcdRecord vcd;

    bool quotient_constructed = false;
    std::optional<DavisQuotient> quotient;
    QuotientReport quotient_report;  // meaningful when constructed
    EmbeddingCheck embedding;        // meaningful when constructed
    std::string quotient_note;       // reason when skipped

    std::vector<std::string> degradations;
    bool fully_certified = false;  // every sub-certificate authoritative
    std::string halt;              // failing-step message when the round halted
};

struct CertificateChain {
    PipelineConfig config;
    std::string origin;  // "cycle C_k" or the input path
    std::vector<IterationRecord> iterations;
    bool ok = false;  // no round halted on a failed property or certificate
};

// one round on X_level; never throws on a property failure (that becomes a
// halt record), only on malformed configuration or an internal error
IterationRecord run_iteration(const CubeComplex& X, int level, const PipelineConfig& cfg);

// validates the configuration, resolves the starting complex, and chains
// rounds until the requested count, a halt, or a missing next complex
CertificateChain run_pipeline(const PipelineConfig& cfg);

// deterministic serialization of the chain (no timestamps, fixed key order)
Json chain_to_json(const CertificateChain& chain);

// the k(k-3)-generator family: vertex counts and abelianization orders of the
// groups associated to the pair thickenings of the cycles C_k
struct FamilyRow {
    int k = 0;
    std::size_t vertices = 0;  // built thickening size
    bool vertices_ok = false;  // equals k(k-3)
    Int abelianization_order;  // 2^{k(k-3)}
    std::string order_text;    // "2^m" rendering
};
struct FamilyReport {
    std::vector<FamilyRow> rows;
    bool distinct = false;  // abelianization orders pairwise distinct
    bool ok = false;        // distinct and every vertex count matches
};
FamilyReport distinct_family_report(const std::vector<int>& ks);
Json family_report_to_json(const FamilyReport& rep);

} // namespace fibercox
