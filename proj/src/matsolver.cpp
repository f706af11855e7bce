#include "idealarr/matsolver.hpp"

#include "idealarr/parallel.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace idealarr {

RestrictionChoice restriction_choice(const RootSystem& rs, const LowerIdeal& Iprime, RootIndex beta) {
  const int bidx = rs.index_of(beta);
  if (std::binary_search(Iprime.members.begin(), Iprime.members.end(), bidx)) {
    throw std::invalid_argument("beta already belongs to I'");
  }
  std::vector<int> extended = Iprime.members;
  extended.push_back(bidx);
  std::sort(extended.begin(), extended.end());
  if (!is_downward_closed(rs, extended)) throw std::invalid_argument("I' + beta is not downward closed");

  RestrictionChoice out;
  out.target = beta;
  std::vector<Polynomial> reduced;  // restriction of each class's first member
  for (int idx : Iprime.members) {
    Polynomial r = restrict_to_hyperplane(rs.roots()[idx].form, rs, bidx);
    if (r.is_zero()) throw std::logic_error("root proportional to beta inside I'");
    bool placed = false;
    for (std::size_t c = 0; c < reduced.size(); ++c) {
      if (proportionality(r, reduced[c])) {
        out.classes[c].push_back(idx);
        placed = true;
        break;
      }
    }
    if (!placed) {
      reduced.push_back(std::move(r));
      out.classes.push_back({idx});
    }
  }
  for (const auto& cls : out.classes) {
    int best = cls.front();
    for (int idx : cls) {
      if (rs.roots()[idx].index < rs.roots()[best].index) best = idx;
    }
    out.representatives.push_back(best);
  }
  return out;
}

Polynomial b_nu(const RootSystem& rs, const LowerIdeal& Iprime, RootIndex beta, const RestrictionChoice& choice) {
  if (!(choice.target == beta)) throw std::invalid_argument("restriction choice made for another root");
  Polynomial b = Polynomial::constant(rs.quotient(), 1);
  for (int idx : Iprime.members) {
    if (std::find(choice.representatives.begin(), choice.representatives.end(), idx) == choice.representatives.end()) {
      b = b * rs.roots()[idx].form;
    }
  }
  return b;
}

RatMatrix c_matrix(const RootSystem& rs, const std::vector<Derivation>& theta, int m) {
  const auto lam_m = rs.lambda_set(m);
  const auto lam_m1 = rs.lambda_set(m + 1);
  if (theta.size() != lam_m.size()) throw std::invalid_argument("one derivation per member of Lambda_m expected");
  const LowerIdeal Im = height_ideal(rs, m);
  RatMatrix C(lam_m.size(), std::vector<Rational>(lam_m1.size()));
  parallel_for(lam_m1.size(), [&](std::size_t col) {
    const int j = lam_m1[col];
    const RootIndex beta{j, j + m + 1};
    const int bidx = rs.index_of(beta);
    const auto choice = restriction_choice(rs, Im, beta);
    const Polynomial bmod = restrict_to_hyperplane(b_nu(rs, Im, beta, choice), rs, bidx);
    for (std::size_t r = 0; r < lam_m.size(); ++r) {
      Polynomial rem = restrict_to_hyperplane(theta[r].apply(rs.roots()[bidx].coeffs), rs, bidx);
      if (rem.is_zero()) continue;
      auto c = proportionality(rem, bmod);
      if (!c) throw std::runtime_error("Proposition 2.3 violated");
      C[r][col] = *c;
    }
  });
  if (rank(C) != lam_m1.size()) throw std::runtime_error("Proposition 2.3 violated: C_m is rank deficient");
  return C;
}

namespace {

RatMatrix transpose(const RatMatrix& a, std::size_t rows, std::size_t cols) {
  RatMatrix t(cols, std::vector<Rational>(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  }
  return t;
}

}  // namespace

RatMatrix solve_P(const RatMatrix& C, const std::vector<int>& lam_m, const std::vector<int>& lam_m1) {
  const std::size_t n = lam_m.size();
  const std::size_t q = lam_m1.size();
  if (C.size() != n) throw std::invalid_argument("C has the wrong number of rows");
  if (rank(C) != q) throw std::invalid_argument("C is rank deficient");
  const RatMatrix Ct = transpose(C, n, q);
  const auto left_kernel = kernel(Ct, n);

  RatMatrix P(n, std::vector<Rational>(n));
  std::size_t next_kernel = 0;
  for (std::size_t r = 0; r < n; ++r) {
    auto it = std::find(lam_m1.begin(), lam_m1.end(), lam_m[r]);
    if (it == lam_m1.end()) {
      P[r] = left_kernel.at(next_kernel++);
      continue;
    }
    // Solve C^T x = e_col.
    const auto col = static_cast<std::size_t>(it - lam_m1.begin());
    RatMatrix aug = Ct;
    for (std::size_t i = 0; i < q; ++i) aug[i].push_back(i == col ? Rational(1) : Rational(0));
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == n) throw std::logic_error("inconsistent system in solve_P");
    for (std::size_t k = 0; k < pivots.size(); ++k) P[r][pivots[k]] = aug[k][n];
  }
  return P;
}

bool equivalent(const RatMatrix& P, const RatMatrix& Q, const std::vector<int>& lam_m, const std::vector<int>& lam_m1) {
  auto Pinv = inverse(P);
  if (!Pinv || !inverse(Q)) throw std::invalid_argument("equivalence test needs invertible matrices");
  const RatMatrix E = multiply(Q, *Pinv);
  for (std::size_t c = 0; c < lam_m.size(); ++c) {
    if (std::find(lam_m1.begin(), lam_m1.end(), lam_m[c]) == lam_m1.end()) continue;
    for (std::size_t r = 0; r < lam_m.size(); ++r) {
      if ((r == c) != (E[r][c] != 0)) return false;
    }
  }
  return true;
}

SolverResult solve_chain(const RootSystemPtr& rs, const RatMatrix& P0, const MatrixFamily* reference) {
  const int n = rs->rank();
  const int ht = rs->height();
  const QuotientPtr& q = rs->quotient();
  if (P0.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("P_0 has the wrong size");
  if (reference) check_matrix_family(*rs, *reference);

  SolverResult out;
  out.matrices.P.push_back(P0);
  SolverLevel base;
  base.lam_m = rs->lambda_set(0);
  base.lam_m1 = rs->lambda_set(std::min(1, ht));
  base.P = P0;
  if (reference) base.equivalent_to_reference = (reference->P[0] == P0);
  out.levels.push_back(std::move(base));

  // layer[p] = psi_{i,i+m-1} for the row at position p.
  std::vector<Derivation> layer;
  for (int p = 0; p < n; ++p) {
    auto v = rs->coweight(p);
    for (auto& x : v) x *= P0[p][p];
    layer.push_back(Derivation::constant(q, v));
  }
  for (int m = 1; m <= ht; ++m) {
    SolverLevel level;
    level.m = m;
    level.lam_m = rs->lambda_set(m);
    std::vector<Derivation> theta;
    for (int i : level.lam_m) theta.push_back(rs->root({i, i + m}).form * layer[rs->position(i)]);

    if (m < ht) {
      level.lam_m1 = rs->lambda_set(m + 1);
      level.C = c_matrix(*rs, theta, m);
      level.rank = rank(level.C);
      const LowerIdeal Im = height_ideal(*rs, m);
      for (int j : level.lam_m1) {
        const RootIndex beta{j, j + m + 1};
        level.b_degrees.push_back(b_nu(*rs, Im, beta, restriction_choice(*rs, Im, beta)).degree());
      }
      level.P = solve_P(level.C, level.lam_m, level.lam_m1);
    } else {
      level.P = identity_matrix(level.lam_m.size());
    }
    const RatMatrix& advance = reference ? reference->P[m] : level.P;
    if (reference) level.equivalent_to_reference = equivalent(level.P, reference->P[m], level.lam_m, level.lam_m1);

    for (std::size_t r = 0; r < level.lam_m.size(); ++r) {
      Derivation acc = Derivation::zero(q);
      for (std::size_t c = 0; c < level.lam_m.size(); ++c) {
        if (advance[r][c] != 0) acc += advance[r][c] * theta[c];
      }
      layer[rs->position(level.lam_m[r])] = std::move(acc);
    }
    out.matrices.P.push_back(level.P);
    out.levels.push_back(std::move(level));
  }
  return out;
}

SolverResult solve_chain_pointwise(const UniformBasis& psi, const MatrixFamily& reference, std::uint64_t seed,
                                   int points) {
  const RootSystem& rs = *psi.system();
  const int ht = rs.height();
  check_matrix_family(rs, reference);
  if (points < 2) throw std::invalid_argument("at least two points per column are needed");

  SolverResult out;
  out.matrices.P.push_back(reference.P[0]);
  SolverLevel base;
  base.lam_m = rs.lambda_set(0);
  base.lam_m1 = rs.lambda_set(std::min(1, ht));
  base.P = reference.P[0];
  base.equivalent_to_reference = true;
  out.levels.push_back(std::move(base));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-(1L << 20), 1L << 20);
  auto draw = [&] { return Rational(dist(rng)); };

  for (int m = 1; m <= ht; ++m) {
    SolverLevel level;
    level.m = m;
    level.lam_m = rs.lambda_set(m);
    if (m == ht) {
      level.P = identity_matrix(level.lam_m.size());
      level.equivalent_to_reference = equivalent(level.P, reference.P[m], level.lam_m, level.lam_m1);
      out.matrices.P.push_back(level.P);
      out.levels.push_back(std::move(level));
      break;
    }
    level.lam_m1 = rs.lambda_set(m + 1);
    const LowerIdeal Im = height_ideal(rs, m);
    level.C.assign(level.lam_m.size(), std::vector<Rational>(level.lam_m1.size()));

    for (std::size_t col = 0; col < level.lam_m1.size(); ++col) {
      const int j = level.lam_m1[col];
      const RootIndex beta{j, j + m + 1};
      const int bidx = rs.index_of(beta);
      const auto choice = restriction_choice(rs, Im, beta);
      std::vector<int> factors;
      for (int idx : Im.members) {
        if (std::find(choice.representatives.begin(), choice.representatives.end(), idx) ==
            choice.representatives.end()) {
          factors.push_back(idx);
        }
      }
      level.b_degrees.push_back(static_cast<int>(factors.size()));
      const QuotientPtr on_beta = hyperplane_quotient(rs, bidx);
      const auto& bc = rs.roots()[bidx].coeffs;

      for (int t = 0; t < points; ++t) {
        std::vector<Rational> pt;
        Rational b = 0;
        while (b == 0) {
          pt = point_on_quotient(*on_beta, draw);
          b = 1;
          for (int idx : factors) b *= rs.roots()[idx].form.evaluate(pt);
        }
        const PointTable table = psi.evaluate(pt);
        for (std::size_t r = 0; r < level.lam_m.size(); ++r) {
          const int i = level.lam_m[r];
          const auto& layer = table[rs.position(i)][m - 1];
          Rational value = 0;
          for (std::size_t k = 0; k < bc.size(); ++k) value += layer[k] * bc[k];
          value *= rs.root({i, i + m}).form.evaluate(pt);
          const Rational c = value / b;
          if (t == 0) {
            level.C[r][col] = c;
          } else if (c != level.C[r][col]) {
            throw std::runtime_error("Proposition 2.3 violated");
          }
        }
      }
    }
    level.rank = rank(level.C);
    if (level.rank != level.lam_m1.size()) throw std::runtime_error("Proposition 2.3 violated: C_m is rank deficient");
    level.P = solve_P(level.C, level.lam_m, level.lam_m1);
    level.equivalent_to_reference = equivalent(level.P, reference.P[m], level.lam_m, level.lam_m1);
    out.matrices.P.push_back(level.P);
    out.levels.push_back(std::move(level));
  }
  return out;
}

}  // namespace idealarr
