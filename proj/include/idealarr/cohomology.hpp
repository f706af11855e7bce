#pragma once

#include "idealarr/bases.hpp"
#include "idealarr/ideals.hpp"

#include <vector>

namespace idealarr {

// sum_k theta_k x_k, i.e. the derivation read as a polynomial through the
// standard inner product on ambient coordinates, normalized in the ring.
Polynomial q_map(const Derivation& theta);

// Coefficients of prod_i (1 + t + ... + t^{h(i)-i}).
std::vector<Integer> poincare_polynomial(const RootSystem& rs, const HessenbergFunction& h);

struct Presentation {
  LieType type;
  HessenbergFunction h;
  std::vector<Polynomial> generators;  // f_{i,h(i)} = q(psi_{i,h(i)}) by position
  std::vector<Integer> poincare;
};

Presentation generators(const UniformBasis& psi, const HessenbergFunction& h);

// The explicit type D generators g_{i,j}; throws outside the D_n grid.
Polynomial g_closed_form_D(const RootSystem& rs, int i, int j);

// ||alpha||^2 for the simple root at `pos`, computed from its orthogonal
// projection onto t.
Rational simple_root_norm2(const RootSystem& rs, int pos);
// varpi_i = (||alpha_i||^2 / 2) q(alpha_i^*).
Polynomial fundamental_weight(const RootSystem& rs, int pos);

// dim of R_d / (ideal cap R_d) for d = 0..up_to_degree, by exact rank of the
// multiplication map on monomial bases. Throws std::invalid_argument when
// the ring has more than 3 free variables or up_to_degree exceeds 8.
std::vector<Integer> graded_rank_oracle(const QuotientPtr& ring, const std::vector<Polynomial>& gens,
                                        int up_to_degree);

}  // namespace idealarr
