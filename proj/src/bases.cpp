#include "idealarr/bases.hpp"

#include "data/tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealarr {

// ------------------------------------------------------------ UniformBasis

UniformBasis::UniformBasis(RootSystemPtr rs, std::string source, int degree_cap)
    : rs_(std::move(rs)), source_(std::move(source)), cap_(degree_cap) {
  entries_.resize(static_cast<std::size_t>(rs_->rank()));
  for (int p = 0; p < rs_->rank(); ++p) entries_[p].resize(static_cast<std::size_t>(rs_->exponents()[p]) + 1);
}

bool UniformBasis::complete() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (!e) return false;
    }
  }
  return true;
}

bool UniformBasis::has(RootIndex r) const {
  auto it = std::find(rs_->labels().begin(), rs_->labels().end(), r.i);
  if (it == rs_->labels().end()) return false;
  const auto& row = entries_[static_cast<std::size_t>(it - rs_->labels().begin())];
  const int k = r.j - r.i;
  return k >= 0 && k < static_cast<int>(row.size()) && row[k].has_value();
}

const Derivation& UniformBasis::at(RootIndex r) const {
  if (!has(r)) {
    throw std::out_of_range(rs_->name() + ": basis entry psi_{" + std::to_string(r.i) + "," + std::to_string(r.j) +
                            "} is not available symbolically");
  }
  return *entries_[rs_->position(r.i)][r.j - r.i];
}

void UniformBasis::set(RootIndex r, Derivation d) {
  const int p = rs_->position(r.i);
  const int k = r.j - r.i;
  if (k < 0 || k > rs_->exponents()[p]) throw std::out_of_range("basis slot out of range");
  entries_[p][k] = std::move(d);
}

namespace {

PointTable run_numeric(const RecursionPlan& plan, const std::vector<Rational>& pt) {
  const RootSystem& g = *plan.grid;
  const int n = g.rank();
  PointTable vals(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    vals[p].resize(static_cast<std::size_t>(g.exponents()[p]) + 1);
    vals[p][0] = plan.base[p];
  }
  const std::size_t N = pt.size();
  std::vector<Rational> alpha(static_cast<std::size_t>(g.root_count()));
  for (int idx = 0; idx < g.root_count(); ++idx) {
    const auto& c = g.roots()[static_cast<std::size_t>(idx)].coeffs;
    Rational v = 0;
    for (std::size_t k = 0; k < N; ++k) {
      if (c[k] != 0) v += c[k] * pt[k];
    }
    alpha[idx] = v;
  }
  for (int m = 1; m <= g.height(); ++m) {
    const auto lam = g.lambda_set(m);
    std::vector<std::vector<Rational>> terms;
    for (int j : lam) {
      const int pj = g.position(j);
      const Rational a = alpha[g.index_of({j, j + m})];
      std::vector<Rational> t = vals[pj][m - 1];
      for (auto& x : t) x *= a;
      terms.push_back(std::move(t));
    }
    const RatMatrix& P = plan.matrices.P[m];
    for (std::size_t r = 0; r < lam.size(); ++r) {
      std::vector<Rational> acc(N);
      for (std::size_t c = 0; c < lam.size(); ++c) {
        if (P[r][c] == 0) continue;
        for (std::size_t k = 0; k < N; ++k) acc[k] += P[r][c] * terms[c][k];
      }
      vals[g.position(lam[r])][m] = std::move(acc);
    }
  }
  return vals;
}

}  // namespace

PointTable UniformBasis::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != rs_->ambient_dim()) throw std::invalid_argument("point has the wrong length");
  PointTable out(static_cast<std::size_t>(rs_->rank()));
  if (plan_) {
    PointTable grid_vals = run_numeric(*plan_, point);
    for (int p = 0; p < rs_->rank(); ++p) {
      const auto& src = grid_vals[plan_->grid->position(rs_->label(p))];
      out[p].assign(src.begin(), src.begin() + rs_->exponents()[p] + 1);
    }
    return out;
  }
  for (int p = 0; p < rs_->rank(); ++p) {
    for (const auto& e : entries_[p]) {
      if (!e) throw std::logic_error("incomplete basis without a recursion plan");
      out[p].push_back(e->evaluate(point));
    }
  }
  return out;
}

// ------------------------------------------------------------ matrices

namespace {

RatMatrix lower_ones(std::size_t n) {
  RatMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m[i][j] = 1;
  }
  return m;
}

RatMatrix from_table(const data::StringRows& rows) {
  RatMatrix m;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (auto s : row) r.push_back(parse_rational(s));
    m.push_back(std::move(r));
  }
  return m;
}

// Type D, 1 <= m <= n-1. Rows and columns run over Lambda_m, whose members
// are 1..n-k-1 followed by n.
RatMatrix d_matrix(int n, int m, const std::vector<int>& lam) {
  const std::size_t sz = lam.size();
  RatMatrix P(sz, std::vector<Rational>(sz));
  auto col = [&](int label) {
    auto it = std::find(lam.begin(), lam.end(), label);
    if (it == lam.end()) throw std::logic_error("type D matrix column outside Lambda_m");
    return static_cast<std::size_t>(it - lam.begin());
  };
  const int c = n - m;
  const Rational half(1, 2);
  const Rational s = (m % 2 == 1) ? Rational(1) : Rational(-1);  // (-1)^{m+1}
  const Rational sign_m = (m % 2 == 0) ? Rational(1) : Rational(-1);
  for (std::size_t r = 0; r < sz; ++r) {
    const int i = lam[r];
    if (i < n - m - 1) {
      for (int j = 1; j <= i; ++j) P[r][col(j)] = 1;
    } else if (i == n - m - 1) {
      for (int j = 1; j <= i; ++j) P[r][col(j)] = 1;
      P[r][col(c)] = -half;
      P[r][col(n)] = s * half;
    } else if (i < n) {
      for (int j = 1; j <= i; ++j) P[r][col(j)] = 1;
      P[r][col(c)] = half;
      P[r][col(n)] = s * half;
    } else {
      for (int j = 1; j <= n - m - 1; ++j) P[r][col(j)] = sign_m;
      P[r][col(c)] = sign_m * half;
      P[r][col(n)] = half;
    }
  }
  return P;
}

}  // namespace

void check_matrix_family(const RootSystem& rs, const MatrixFamily& M) {
  if (static_cast<int>(M.P.size()) != rs.height() + 1) {
    throw std::invalid_argument(rs.name() + ": matrix family needs " + std::to_string(rs.height() + 1) + " levels");
  }
  for (int m = 0; m <= rs.height(); ++m) {
    const std::size_t sz = rs.lambda_set(m).size();
    const RatMatrix& P = M.P[m];
    if (P.size() != sz) throw std::invalid_argument(rs.name() + ": P_" + std::to_string(m) + " has the wrong size");
    for (const auto& row : P) {
      if (row.size() != sz) throw std::invalid_argument(rs.name() + ": P_" + std::to_string(m) + " is not square");
    }
    if (determinant(P) == 0) throw std::invalid_argument(rs.name() + ": P_" + std::to_string(m) + " is singular");
  }
  for (std::size_t r = 0; r < M.P[0].size(); ++r) {
    for (std::size_t c = 0; c < M.P[0].size(); ++c) {
      if (r != c && M.P[0][r][c] != 0) throw std::invalid_argument(rs.name() + ": P_0 is not diagonal");
    }
  }
}

MatrixFamily paper_matrices(const RootSystem& rs) {
  MatrixFamily M;
  const int n = rs.type().rank;
  const int ht = rs.height();
  auto size_of = [&](int m) { return rs.lambda_set(m).size(); };
  auto load = [&](const data::MatrixTable& table) {
    for (const auto& rows : table) M.P.push_back(from_table(rows));
  };
  switch (rs.type().family) {
    case Family::A:
    case Family::B:
      for (int m = 0; m <= ht; ++m) M.P.push_back(m == 0 ? identity_matrix(size_of(0)) : lower_ones(size_of(m)));
      break;
    case Family::C:
      for (int m = 0; m <= ht; ++m) {
        RatMatrix P = m == 0 ? identity_matrix(size_of(0)) : lower_ones(size_of(m));
        auto& last = P.back();
        // The doubled entries come from psi_{i,2n+1-i} = 2 psi_{i-1,2n-i} + ...,
        // which only occurs at odd m; even levels keep an all-ones last row.
        if (m == 0) {
          last.back() = 2;
        } else if (m % 2 == 1) {
          for (std::size_t j = 0; j + 1 < last.size(); ++j) last[j] = 2;
        }
        M.P.push_back(std::move(P));
      }
      break;
    case Family::D:
      for (int m = 0; m <= ht; ++m) {
        if (m == 0) {
          RatMatrix P = identity_matrix(size_of(0));
          P[n - 2][n - 2] = 2;
          P[n - 1][n - 1] = 2;
          M.P.push_back(std::move(P));
        } else if (m <= n - 1) {
          M.P.push_back(d_matrix(n, m, rs.lambda_set(m)));
        } else {
          M.P.push_back(lower_ones(size_of(m)));
        }
      }
      break;
    case Family::G:
      for (int m = 0; m <= ht; ++m) M.P.push_back(identity_matrix(size_of(m)));
      M.P[1] = RatMatrix{{1, 0}, {1, 1}};
      break;
    case Family::F:
      load(data::f4_matrices());
      break;
    case Family::E:
      load(n == 8 ? data::e8_matrices() : n == 7 ? data::e7_matrices() : data::e6_matrices());
      break;
  }
  check_matrix_family(rs, M);
  return M;
}

// ------------------------------------------------------------ recursion

namespace {

void run_symbolic(const RecursionPlan& plan, int cap, const std::function<void(int, int, const Derivation&)>& emit) {
  const RootSystem& g = *plan.grid;
  const QuotientPtr& q = plan.ring;
  const int n = g.rank();
  // prev[p] holds psi_{i,i+m-1} for grid position p.
  std::vector<std::optional<Derivation>> prev(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    prev[p] = Derivation::constant(q, plan.base[p]);
    emit(p, 0, *prev[p]);
  }
  for (int m = 1; m <= std::min(cap, g.height()); ++m) {
    const auto lam = g.lambda_set(m);
    std::vector<Derivation> terms;
    for (int j : lam) {
      const int pj = g.position(j);
      Polynomial a = Polynomial::linear(q, g.root({j, j + m}).coeffs);
      terms.push_back(a * *prev[pj]);
    }
    const RatMatrix& P = plan.matrices.P[m];
    std::vector<std::optional<Derivation>> next(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < lam.size(); ++r) {
      Derivation acc = Derivation::zero(q);
      for (std::size_t c = 0; c < lam.size(); ++c) {
        if (P[r][c] != 0) acc += P[r][c] * terms[c];
      }
      const int pr = g.position(lam[r]);
      emit(pr, m, acc);
      next[pr] = std::move(acc);
    }
    prev = std::move(next);
  }
}

UniformBasis basis_from_plan(const RootSystemPtr& rs, std::shared_ptr<const RecursionPlan> plan, int cap,
                             const std::string& source) {
  UniformBasis basis(rs, source, cap);
  const int top = *std::max_element(rs->exponents().begin(), rs->exponents().end());
  run_symbolic(*plan, std::min(cap, top), [&](int grid_pos, int m, const Derivation& d) {
    const int label = plan->grid->label(grid_pos);
    auto it = std::find(rs->labels().begin(), rs->labels().end(), label);
    if (it == rs->labels().end()) return;
    const int p = static_cast<int>(it - rs->labels().begin());
    if (m <= rs->exponents()[p]) basis.set({label, label + m}, d);
  });
  basis.set_plan(std::move(plan));
  return basis;
}

}  // namespace

UniformBasis build_from_matrices(const RootSystemPtr& rs, const MatrixFamily& M, int degree_cap) {
  check_matrix_family(*rs, M);
  auto plan = std::make_shared<RecursionPlan>();
  plan->grid = rs;
  plan->matrices = M;
  plan->ring = rs->quotient();
  for (int p = 0; p < rs->rank(); ++p) {
    auto v = rs->coweight(p);
    for (auto& x : v) x *= M.P[0][p][p];
    plan->base.push_back(std::move(v));
  }
  return basis_from_plan(rs, std::move(plan), degree_cap, "recursion");
}

std::vector<std::vector<Rational>> restriction_base(const RootSystem& sub, const RootSystem& grid) {
  std::vector<std::vector<Rational>> base;
  for (int p = 0; p < grid.rank(); ++p) {
    const int label = grid.label(p);
    auto it = std::find(sub.labels().begin(), sub.labels().end(), label);
    if (it == sub.labels().end()) {
      base.emplace_back(static_cast<std::size_t>(grid.ambient_dim()));
    } else {
      base.push_back(sub.coweight(static_cast<int>(it - sub.labels().begin())));
    }
  }
  return base;
}

UniformBasis restrict_basis(const RootSystemPtr& rs, const std::vector<int>& S, const MatrixFamily& M,
                            int degree_cap) {
  std::vector<int> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  if (sorted == rs->labels()) return build_from_matrices(rs, M, degree_cap);
  int target_rank = 0;
  if (rs->type() == LieType{Family::E, 8}) {
    if (sorted == std::vector<int>{1, 3, 4, 5, 6, 7, 8}) target_rank = 7;
    if (sorted == std::vector<int>{1, 4, 5, 6, 7, 8}) target_rank = 6;
  }
  if (target_rank == 0) throw std::invalid_argument("unsupported restriction");
  check_matrix_family(*rs, M);
  RootSystemPtr sub = RootSystem::build(LieType{Family::E, target_rank});
  auto plan = std::make_shared<RecursionPlan>();
  plan->grid = rs;
  plan->matrices = M;
  plan->ring = sub->quotient();
  plan->base = restriction_base(*sub, *rs);
  for (int p = 0; p < rs->rank(); ++p) {
    for (auto& x : plan->base[p]) x *= M.P[0][p][p];
  }
  return basis_from_plan(sub, std::move(plan), degree_cap, "restriction");
}

std::vector<Derivation> basis_for_ideal(const UniformBasis& psi, const HessenbergFunction& h) {
  const RootSystem& rs = *psi.system();
  if (!within_bounds(rs, h)) throw std::invalid_argument("invalid Hessenberg function");
  std::vector<Derivation> out;
  for (int p = 0; p < rs.rank(); ++p) out.push_back(psi.at({rs.label(p), h.values[p]}));
  return out;
}

// ------------------------------------------------------------ closed forms

namespace {

Polynomial xv(const QuotientPtr& q, int k) { return Polynomial::variable(q, k - 1); }

// x_a * ... * x_b, skipping x_skip; empty products are 1.
Polynomial prodx(const QuotientPtr& q, int a, int b, int skip = 0) {
  Polynomial r = Polynomial::constant(q, 1);
  for (int l = a; l <= b; ++l) {
    if (l != skip) r = r * xv(q, l);
  }
  return r;
}

Rational sign(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Polynomial div_x(const Polynomial& p, const QuotientPtr& q, int k) {
  auto r = divide_exact(p, xv(q, k));
  if (!r) throw std::logic_error("closed form numerator not divisible by x_" + std::to_string(k));
  return *r;
}

void closed_form_a(const RootSystem& rs, UniformBasis& basis) {
  const QuotientPtr& q = rs.quotient();
  const int n = rs.ambient_dim();
  for (int i = 1; i <= rs.rank(); ++i) {
    std::vector<Polynomial> prods;
    for (int k = 1; k <= i; ++k) prods.push_back(Polynomial::constant(q, 1));
    for (int j = i; j <= n; ++j) {
      if (j > i) {
        for (int k = 1; k <= i; ++k) prods[k - 1] = prods[k - 1] * (xv(q, k) - xv(q, j));
      }
      std::vector<Polynomial> c(static_cast<std::size_t>(n), Polynomial(q));
      for (int k = 1; k <= i; ++k) {
        c[k - 1] += prods[k - 1];
        for (int l = 1; l <= n; ++l) c[l - 1] -= Rational(1, n) * prods[k - 1];
      }
      basis.set({i, j}, Derivation(q, std::move(c)));
    }
  }
}

void closed_form_bc(const RootSystem& rs, UniformBasis& basis, bool is_c) {
  const QuotientPtr& q = rs.quotient();
  const int n = rs.rank();
  for (int i = 1; i <= n; ++i) {
    const int top = 2 * n + 1 - i;
    std::vector<Polynomial> prods(static_cast<std::size_t>(i), Polynomial::constant(q, 1));
    for (int j = i; j <= top; ++j) {
      std::vector<Polynomial> c(static_cast<std::size_t>(n), Polynomial(q));
      for (int k = 1; k <= i; ++k) {
        if (j > i) {
          // In type C the last factor is 2x_k for every k, not alpha_{k,j}.
          Polynomial f = (is_c && j == top) ? Rational(2) * xv(q, k) : rs.root({k, j}).form;
          prods[k - 1] = prods[k - 1] * f;
        }
        c[k - 1] = prods[k - 1];
      }
      basis.set({i, j}, Derivation(q, std::move(c)));
    }
  }
}

void closed_form_g2(const RootSystem& rs, UniformBasis& basis) {
  const QuotientPtr& q = rs.quotient();
  const Derivation d11 = Derivation::constant(q, {0, -1, 1});
  Polynomial prod = Polynomial::constant(q, 1);
  basis.set({1, 1}, d11);
  for (int j = 2; j <= 6; ++j) {
    prod = prod * rs.root({1, j}).form;
    basis.set({1, j}, prod * d11);
  }
  const Rational third(1, 3);
  basis.set({2, 2}, Derivation::constant(q, {-third, -third, 2 * third}));
  std::vector<Polynomial> c;
  Polynomial sum = xv(q, 1) + xv(q, 2) + xv(q, 3);
  for (int k = 1; k <= 3; ++k) c.push_back(xv(q, k) - third * sum);
  basis.set({2, 3}, Derivation(q, std::move(c)));
}

// psi_{i,j} of type D from the explicit formulas.
Derivation d_entry(const RootSystem& rs, int i, int j) {
  const QuotientPtr& q = rs.quotient();
  const int n = rs.rank();
  std::vector<Polynomial> c(static_cast<std::size_t>(n), Polynomial(q));
  auto minus_prod = [&](int k, int from, int to) {  // prod_{l=from}^{to} (x_k - x_l)
    Polynomial r = Polynomial::constant(q, 1);
    for (int l = from; l <= to; ++l) r = r * (xv(q, k) - xv(q, l));
    return r;
  };
  auto plus_prod = [&](int k, int from, int to) {
    Polynomial r = Polynomial::constant(q, 1);
    for (int l = from; l <= to; ++l) r = r * (xv(q, k) + xv(q, l));
    return r;
  };
  if (i == n) {
    const int r = 2 * n - 1 - j;
    for (int k = 1; k <= n; ++k) {
      if (k <= r) {
        Polynomial num = sign(n - r + 1) * minus_prod(k, r + 1, n) + prodx(q, r + 1, n);
        c[k - 1] = div_x(num, q, k);
      } else {
        c[k - 1] = prodx(q, r + 1, n, k);
      }
    }
  } else if (j <= n - 2) {
    for (int k = 1; k <= i; ++k) c[k - 1] = minus_prod(k, i + 1, j);
  } else if (j == n - 1) {
    for (int k = 1; k <= n; ++k) {
      if (k <= i) {
        Polynomial num = minus_prod(k, i + 1, n - 1) * (xv(q, k) + xv(q, n)) + sign(n - i) * prodx(q, i + 1, n);
        c[k - 1] = div_x(num, q, k);
      } else {
        c[k - 1] = sign(n - i) * prodx(q, i + 1, n, k);
      }
    }
  } else {
    const int jp = j - n;
    const Polynomial squares = prodx(q, n - jp, n).pow(2);
    for (int k = 1; k <= n; ++k) {
      if (k <= i) {
        Polynomial num = minus_prod(k, i + 1, n) * plus_prod(k, n - jp, n) +
                         sign(n - i + 1) * prodx(q, i + 1, n - 1 - jp) * squares;
        c[k - 1] = div_x(num, q, k);
      } else {
        c[k - 1] = sign(n - i + 1) * prodx(q, n - jp, n) * prodx(q, i + 1, n, k);
      }
    }
  }
  return Derivation(q, std::move(c));
}

void closed_form_d(const RootSystem& rs, UniformBasis& basis) {
  const int n = rs.rank();
  for (int p = 0; p < n; ++p) {
    const int i = rs.label(p);
    for (int j = i; j <= i + rs.exponents()[p]; ++j) basis.set({i, j}, d_entry(rs, i, j));
  }
}

}  // namespace

UniformBasis closed_form(const RootSystemPtr& rs) {
  UniformBasis basis(rs, "closed-form", kNoDegreeCap);
  switch (rs->type().family) {
    case Family::A:
      closed_form_a(*rs, basis);
      break;
    case Family::B:
      closed_form_bc(*rs, basis, false);
      break;
    case Family::C:
      closed_form_bc(*rs, basis, true);
      break;
    case Family::D:
      closed_form_d(*rs, basis);
      break;
    case Family::G:
      closed_form_g2(*rs, basis);
      break;
    default:
      throw std::invalid_argument(rs->name() + ": no closed form for this family");
  }
  return basis;
}

Derivation psi_zero_D(const RootSystem& rs, int j) {
  const QuotientPtr& q = rs.quotient();
  const int n = rs.rank();
  if (rs.type().family != Family::D) throw std::invalid_argument("psi_{0,j} is defined for type D only");
  if (j < 0 || j > 2 * n - 3) throw std::out_of_range("psi_{0,j} needs 0 <= j <= 2n-3");
  if (j <= n - 2) return Derivation::zero(q);
  std::vector<Polynomial> c;
  for (int k = 1; k <= n; ++k) c.push_back(sign(n) * prodx(q, 1, n, k));
  Derivation base(q, std::move(c));
  if (j == n - 1) return base;
  return Rational(-1) * prodx(q, 2 * n - j, n) * base;
}

Derivation xi_D(const RootSystem& rs, int i) {
  const QuotientPtr& q = rs.quotient();
  const int n = rs.rank();
  if (rs.type().family != Family::D) throw std::invalid_argument("xi is defined for type D only");
  if (i < 0 || i > n - 1) throw std::out_of_range("xi_i needs 0 <= i <= n-1");
  std::vector<Polynomial> c(static_cast<std::size_t>(n), Polynomial(q));
  for (int k = 1; k <= n; ++k) {
    if (k <= i) {
      Polynomial prod = Polynomial::constant(q, 1);
      for (int l = i + 1; l <= n - 1; ++l) prod = prod * (xv(q, k) - xv(q, l));
      Polynomial num = prod * xv(q, n) + sign(n - i) * prodx(q, i + 1, n);
      c[k - 1] = div_x(num, q, k);
    } else {
      c[k - 1] = sign(n - i) * prodx(q, i + 1, n, k);
    }
  }
  return Derivation(q, std::move(c));
}

UniformBasis psi_tilde_D(const RootSystemPtr& rs) {
  if (rs->type().family != Family::D) throw std::invalid_argument("psi~ is defined for type D only");
  const int n = rs->rank();
  UniformBasis out(rs, "psi-tilde", kNoDegreeCap);
  for (int i = 1; i <= n; ++i) out.set({i, i}, d_entry(*rs, i, i));
  auto alpha = [&](int i, int j) { return rs->root({i, j}).form; };
  for (int m = 1; m <= rs->height(); ++m) {
    for (int i = 1; i <= n - 1; ++i) {
      const int j = i + m;
      if (j > 2 * n - 1 - i) continue;
      Derivation d = alpha(i, j) * out.at({i, j - 1});
      if (i > 1) d += out.at({i - 1, j - 1});
      if (j == n - 1) d += xi_D(*rs, i);
      if (i == 1 && j == n) d += xi_D(*rs, 0);
      out.set({i, j}, std::move(d));
    }
    const int j = n + m;
    if (j <= 2 * n - 1) {
      Derivation d = alpha(n, j) * out.at({n, j - 1}) + sign(j - n) * out.at({2 * n - j, n});
      out.set({n, j}, std::move(d));
    }
  }
  return out;
}

std::vector<std::vector<std::optional<Derivation>>> plan_symbolic(const RecursionPlan& plan, int cap) {
  std::vector<std::vector<std::optional<Derivation>>> out(static_cast<std::size_t>(plan.grid->rank()));
  for (int p = 0; p < plan.grid->rank(); ++p) out[p].resize(static_cast<std::size_t>(plan.grid->exponents()[p]) + 1);
  run_symbolic(plan, cap, [&](int p, int m, const Derivation& d) {
    if (m < static_cast<int>(out[p].size())) out[p][m] = d;
  });
  return out;
}

PointTable plan_evaluate(const RecursionPlan& plan, const std::vector<Rational>& point) {
  return run_numeric(plan, point);
}

int default_degree_cap(const LieType& t) {
  if (t.family == Family::E && t.rank == 8) return 10;
  if (t.family == Family::E && t.rank == 7) return 12;
  return kNoDegreeCap;
}

UniformBasis default_basis(const RootSystemPtr& rs, int degree_cap) {
  switch (rs->type().family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::G:
      return closed_form(rs);
    case Family::F:
      return build_from_matrices(rs, paper_matrices(*rs), degree_cap);
    case Family::E:
      if (rs->type().rank == 8) return build_from_matrices(rs, paper_matrices(*rs), degree_cap);
      {
        RootSystemPtr e8 = RootSystem::build(LieType{Family::E, 8});
        std::vector<int> S = rs->labels();
        return restrict_basis(e8, S, paper_matrices(*e8), degree_cap);
      }
  }
  throw std::invalid_argument("unsupported type");
}

}  // namespace idealarr
