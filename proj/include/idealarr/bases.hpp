#pragma once

#include "idealarr/derivation.hpp"
#include "idealarr/ideals.hpp"
#include "idealarr/polymatrix.hpp"
#include "idealarr/rootsys.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace idealarr {

// P_0, ..., P_ht; P[m] is square with rows and columns indexed by Lambda_m
// in increasing order.
struct MatrixFamily {
  std::vector<RatMatrix> P;
};

// Checks sizes against Lambda_m and invertibility; throws on violation.
void check_matrix_family(const RootSystem& rs, const MatrixFamily& M);

// The matrix tables of the published construction for every type.
MatrixFamily paper_matrices(const RootSystem& rs);

// Inputs of the recursion psi_{i,i+m} = sum_j p_ij alpha_{j,j+m} psi_{j,j+m-1}
// run on the grid of `grid` inside the ring `ring`. `base[p]` is the ambient
// vector of psi_{i,i} for grid position p (already multiplied by p_i).
struct RecursionPlan {
  RootSystemPtr grid;
  MatrixFamily matrices;
  std::vector<std::vector<Rational>> base;
  QuotientPtr ring;
};

// Ambient coefficient vectors of every psi_{i,j} at one point, indexed
// [position][j - i].
using PointTable = std::vector<std::vector<std::vector<Rational>>>;

class UniformBasis {
 public:
  UniformBasis(RootSystemPtr rs, std::string source, int degree_cap);

  const RootSystemPtr& system() const { return rs_; }
  const std::string& source() const { return source_; }
  // Entries of degree above the cap are not materialized symbolically.
  int degree_cap() const { return cap_; }
  bool complete() const;

  bool has(RootIndex r) const;
  const Derivation& at(RootIndex r) const;  // throws std::out_of_range
  void set(RootIndex r, Derivation d);

  // Values at a point of t; uses the recursion plan when there is one so
  // entries above the degree cap are available too.
  PointTable evaluate(const std::vector<Rational>& point) const;
  const std::shared_ptr<const RecursionPlan>& plan() const { return plan_; }
  void set_plan(std::shared_ptr<const RecursionPlan> plan) { plan_ = std::move(plan); }

 private:
  RootSystemPtr rs_;
  std::string source_;
  int cap_;
  std::vector<std::vector<std::optional<Derivation>>> entries_;
  std::shared_ptr<const RecursionPlan> plan_;
};

inline constexpr int kNoDegreeCap = 1 << 20;

// Runs the matrix recursion with psi_{i,i} = p_i alpha_i^*.
UniformBasis build_from_matrices(const RootSystemPtr& rs, const MatrixFamily& M, int degree_cap = kNoDegreeCap);

// Explicit formulas for types A, B, C, D and G2; throws for other families.
UniformBasis closed_form(const RootSystemPtr& rs);

// Restriction from a larger system to the subsystem on rows S. Only the
// E8 -> E7 (S = {1,3,...,8}) and E8 -> E6 (S = {1,4,...,8}) cases are
// supported; anything else throws std::invalid_argument("unsupported restriction").
UniformBasis restrict_basis(const RootSystemPtr& rs, const std::vector<int>& S, const MatrixFamily& M,
                            int degree_cap = kNoDegreeCap);

// (psi_{1,h(1)}, ..., psi_{n,h(n)}).
std::vector<Derivation> basis_for_ideal(const UniformBasis& psi, const HessenbergFunction& h);

// The basis used by default for each type: closed forms for A, B, C, D, G2,
// the recursion for F4 and E8, restriction from E8 for E7 and E6.
UniformBasis default_basis(const RootSystemPtr& rs, int degree_cap = kNoDegreeCap);

// Degree caps used by the command line and the acceptance suite.
int default_degree_cap(const LieType& t);

// ---- type D internals ----
// psi_{0,j} for 0 <= j <= 2n-3.
Derivation psi_zero_D(const RootSystem& rs, int j);
// xi_i for 0 <= i <= n-1 (xi_0 = psi_{0,n-1}).
Derivation xi_D(const RootSystem& rs, int i);
// The auxiliary family psi~ built by its own recursion.
UniformBasis psi_tilde_D(const RootSystemPtr& rs);

// Every grid entry of a recursion plan: symbolically up to `cap`
// ([grid position][j - i], empty above the cap) and at one point.
std::vector<std::vector<std::optional<Derivation>>> plan_symbolic(const RecursionPlan& plan, int cap);
PointTable plan_evaluate(const RecursionPlan& plan, const std::vector<Rational>& point);

// Ambient vector of psi'_{i,i} = gamma_i on the E8 grid for the subsystem S
// (zero outside S).
std::vector<std::vector<Rational>> restriction_base(const RootSystem& sub, const RootSystem& grid);

}  // namespace idealarr
