#pragma once

#include "idealarr/bases.hpp"
#include "idealarr/derivation.hpp"
#include "idealarr/ideals.hpp"
#include "idealarr/polymatrix.hpp"
#include "idealarr/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace idealarr {

// Partition of I' by the hyperplanes of ker(beta) that its roots cut out.
// Classes and their members are sorted; the representative of a class is
// its lexicographically least (i,j).
struct RestrictionChoice {
  RootIndex target;
  std::vector<std::vector<int>> classes;  // global root indices
  std::vector<int> representatives;       // one per class, same order
};

// Requires beta not in I' and I' + {beta} downward closed.
RestrictionChoice restriction_choice(const RootSystem& rs, const LowerIdeal& Iprime, RootIndex beta);

// Product of the non-representative roots of I'.
Polynomial b_nu(const RootSystem& rs, const LowerIdeal& Iprime, RootIndex beta, const RestrictionChoice& choice);

// C_m with rows over Lambda_m and columns over Lambda_{m+1}; theta[r] is
// the derivation for the r-th member of Lambda_m. Throws std::runtime_error
// ("Proposition 2.3 violated") when a remainder is not a constant multiple
// of b_nu modulo beta, and when the rank is not |Lambda_{m+1}|.
RatMatrix c_matrix(const RootSystem& rs, const std::vector<Derivation>& theta, int m);

// Invertible P with P*C = delta. Rows in Lambda_{m+1} are particular
// solutions, the others a reduced-echelon basis of the left kernel of C.
// Throws std::invalid_argument when C is rank deficient.
RatMatrix solve_P(const RatMatrix& C, const std::vector<int>& lam_m, const std::vector<int>& lam_m1);

// Q*P^{-1} restricted to the Lambda_{m+1} columns is diagonal with nonzero
// entries, i.e. Q arises from P by row scalings and by adding multiples of
// rows outside Lambda_{m+1}. Throws for singular input.
bool equivalent(const RatMatrix& P, const RatMatrix& Q, const std::vector<int>& lam_m, const std::vector<int>& lam_m1);

struct SolverLevel {
  int m = 0;
  std::vector<int> lam_m;
  std::vector<int> lam_m1;
  RatMatrix C;  // empty at the top level
  RatMatrix P;
  std::vector<int> b_degrees;  // one per column of C
  std::size_t rank = 0;
  std::optional<bool> equivalent_to_reference;
};

struct SolverResult {
  MatrixFamily matrices;
  std::vector<SolverLevel> levels;  // levels[m]; levels[0] only records P_0
};

// Runs the construction from P_0. With a reference family, each level is
// solved against the reference layer below it (so both sides share
// P_0..P_{m-1}) and compared with the reference P_m.
SolverResult solve_chain(const RootSystemPtr& rs, const RatMatrix& P0, const MatrixFamily* reference = nullptr);

// The anchored comparison for bases whose entries are too large to expand:
// psi must come from `reference` (it supplies the layer below each level).
// C_m is read off at `points` random points of every ker(beta); an entry is
// accepted only when theta(beta) / b_nu takes the same value at all of them,
// otherwise std::runtime_error("Proposition 2.3 violated") is thrown. The
// b_nu degrees are the exact factor counts.
SolverResult solve_chain_pointwise(const UniformBasis& psi, const MatrixFamily& reference, std::uint64_t seed,
                                   int points = 3);

}  // namespace idealarr
