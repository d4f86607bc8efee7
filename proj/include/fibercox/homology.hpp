#pragma once

// Exact (co)homology of finite simplicial and cubical complexes. Integer
// coefficients go through a sparse Smith normal form over arbitrary-precision
// integers (torsion-correct); GF(2) uses dense bitset elimination and ℚ uses
// dense rational elimination, kept as independent cross-check paths. On top:
// cohomological dimension (max degree with nonvanishing unreduced
// cohomology), the vcd sweep over all simplices of a flag complex (reduced
// cohomology of vertex-complement subcomplexes, empty simplex included), and
// Mayer–Vietoris rank bookkeeping for gluings.

#include "fibercox/cube_complex.hpp"
#include "fibercox/simplicial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace fibercox {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> col_entries;  // per column: (row, coeff)
};

struct SmithResult {
    int rank = 0;
    std::vector<Int> invariant_factors;  // nonzero, |d_1| | |d_2| | …, rank of them
    std::vector<Int> torsion() const;    // the factors exceeding 1
};
SmithResult smith_normal_form(const SparseIntMatrix& M);

int rank_gf2(const SparseIntMatrix& M);
// dense rational rank; throws when rows*cols exceeds the guard
int rank_rational(const SparseIntMatrix& M, std::size_t dense_budget = 4'000'000);

struct ChainComplex {
    std::vector<std::vector<std::string>> cells;  // labels per degree 0..top
    std::vector<SparseIntMatrix> boundary;        // boundary[d]: C_d -> C_{d-1}; boundary[0] empty

    int top() const { return int(cells.size()) - 1; }
    long long euler() const;
};

ChainComplex chain_complex(const SimplicialComplex& K, std::size_t budget = kDefaultCellBudget);
ChainComplex chain_complex(const CubeComplex& X);

enum class Coeffs { Z, Q, GF2 };

struct DegreeGroup {
    long long betti = 0;
    std::vector<Int> torsion;  // integer coefficients only
    bool nontrivial() const { return betti > 0 || !torsion.empty(); }
};

struct HomologyResult {
    Coeffs coeffs = Coeffs::Z;
    bool reduced = false;
    std::vector<DegreeGroup> groups;  // degree 0..top of the chain complex
    DegreeGroup minus_one;            // reduced mode: degree -1 (rank 1 for the empty complex)
};

HomologyResult homology(const ChainComplex& C, Coeffs coeffs, bool reduced);
// cohomology via universal coefficients: over ℤ the degree-d torsion is the
// Ext part contributed by degree d-1 homology; over a field it mirrors homology
HomologyResult cohomology(const ChainComplex& C, Coeffs coeffs, bool reduced);

// max degree with nonvanishing unreduced cohomology; throws on the empty
// complex (the convention is undefined there and deliberately surfaced)
int cohomological_dimension(const ChainComplex& C, Coeffs coeffs = Coeffs::Z);
int cohomological_dimension(const SimplicialComplex& K, Coeffs coeffs = Coeffs::Z,
                            std::size_t budget = kDefaultCellBudget);
int cohomological_dimension(const CubeComplex& X, Coeffs coeffs = Coeffs::Z);

// 1 + max{k : reduced H^k nonzero}, or nullopt when every degree vanishes
// (the empty complex gives 0 via reduced H^{-1} ≅ ℤ)
std::optional<int> reduced_cohomology_top_shift(const ChainComplex& C, Coeffs coeffs);

struct VcdRow {
    Simplex sigma;         // ids in L; empty = ∅
    bool contributes = false;
    int n = 0;             // 1 + max nonvanishing reduced-cohomology degree of the complement
    int complement_size = 0;
};
struct VcdResult {
    int vcd = 0;
    Simplex witness;
    std::vector<VcdRow> table;
};
// Sweeps every simplex σ of L (including ∅); the complement of σ is realized
// as the full subcomplex on the vertices outside σ.
VcdResult vcd_racg(const SimplicialComplex& L, Coeffs coeffs = Coeffs::Z,
                   std::size_t budget = kDefaultCellBudget);

// cd(Ŝ(σ,T)) <= n-1, vacuously true for an empty sphere
bool sphere_cd_check(const SimplicialComplex& T, const Simplex& sigma, int n,
                     Coeffs coeffs = Coeffs::Z);
// cd(lk(σ,T)) <= n-1, vacuously true for an empty link
bool link_cd_check(const SimplicialComplex& T, const Simplex& sigma, int n,
                   Coeffs coeffs = Coeffs::Z);

struct MvRow {
    int degree = 0;
    long long z = 0, m = 0, c = 0;      // dims of H^i(Z), H^i(A)⊕H^i(B), H^i(C)
    long long rk_f = 0, rk_g = 0, t = 0;  // ranks forced by exactness; t feeds degree+1
};
struct MvReport {
    bool exact = false;
    std::vector<MvRow> rows;
    std::string failure;  // first violated constraint, empty when exact
};
// Field-coefficient Mayer–Vietoris rank bookkeeping for Z = A ∪_C B; the
// subcomplex hypotheses (A ∪ B = Z as complexes, A ∩ B = C) are verified
// label-wise and violations throw.
MvReport mayer_vietoris_check(const SimplicialComplex& A, const SimplicialComplex& B,
                              const SimplicialComplex& C, const SimplicialComplex& Z,
                              Coeffs field = Coeffs::GF2);

} // namespace fibercox
