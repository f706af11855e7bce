#include "idealarr/cohomology.hpp"

#include <map>
#include <stdexcept>

namespace idealarr {

Polynomial q_map(const Derivation& theta) {
  const QuotientPtr& q = theta.quotient();
  Polynomial out(q);
  for (int k = 0; k < theta.ambient_dim(); ++k) {
    if (!theta.coeff(k).is_zero()) out += theta.coeff(k) * Polynomial::variable(q, k);
  }
  return out;
}

std::vector<Integer> poincare_polynomial(const RootSystem& rs, const HessenbergFunction& h) {
  if (!within_bounds(rs, h)) throw std::invalid_argument("invalid Hessenberg function");
  std::vector<Integer> poly{1};
  for (int p = 0; p < rs.rank(); ++p) {
    const int len = h.values[p] - rs.label(p) + 1;
    std::vector<Integer> next(poly.size() + static_cast<std::size_t>(len) - 1);
    for (std::size_t a = 0; a < poly.size(); ++a) {
      for (int b = 0; b < len; ++b) next[a + static_cast<std::size_t>(b)] += poly[a];
    }
    poly = std::move(next);
  }
  return poly;
}

Presentation generators(const UniformBasis& psi, const HessenbergFunction& h) {
  const RootSystem& rs = *psi.system();
  Presentation out;
  out.type = rs.type();
  out.h = h;
  for (const Derivation& d : basis_for_ideal(psi, h)) out.generators.push_back(q_map(d));
  out.poincare = poincare_polynomial(rs, h);
  return out;
}

namespace {

Polynomial x(const QuotientPtr& q, int k) { return Polynomial::variable(q, k - 1); }

Polynomial prodx(const QuotientPtr& q, int a, int b) {
  Polynomial r = Polynomial::constant(q, 1);
  for (int l = a; l <= b; ++l) r = r * x(q, l);
  return r;
}

}  // namespace

Polynomial g_closed_form_D(const RootSystem& rs, int i, int j) {
  if (rs.type().family != Family::D) throw std::invalid_argument("g^{D_n} needs a type D system");
  const int n = rs.rank();
  if (i < 1 || i > n || j < i || j > i + rs.exponent_of_label(i)) throw std::out_of_range("(i,j) outside the D_n grid");
  const QuotientPtr& q = rs.quotient();
  const Rational nn(n);
  auto sgn = [](int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };
  Polynomial g(q);
  if (i == n) {
    const int r = 2 * n - 1 - j;
    for (int k = 1; k <= r; ++k) {
      Polynomial t = Polynomial::constant(q, sgn(n - r + 1));
      for (int l = r + 1; l <= n; ++l) t = t * (x(q, k) - x(q, l));
      g += t;
    }
    return g + nn * prodx(q, r + 1, n);
  }
  if (j <= n - 2) {
    for (int k = 1; k <= i; ++k) {
      Polynomial t = x(q, k);
      for (int l = i + 1; l <= j; ++l) t = t * (x(q, k) - x(q, l));
      g += t;
    }
    return g;
  }
  if (j == n - 1) {
    for (int k = 1; k <= i; ++k) {
      Polynomial t = x(q, k) + x(q, n);
      for (int l = i + 1; l <= n - 1; ++l) t = t * (x(q, k) - x(q, l));
      g += t;
    }
    return g + sgn(n - i) * nn * prodx(q, i + 1, n);
  }
  const int jp = j - n;
  for (int k = 1; k <= i; ++k) {
    Polynomial t = Polynomial::constant(q, 1);
    for (int l = i + 1; l <= n; ++l) t = t * (x(q, k) - x(q, l));
    for (int l = n - jp; l <= n; ++l) t = t * (x(q, k) + x(q, l));
    g += t;
  }
  return g + sgn(n - i + 1) * nn * prodx(q, i + 1, n - 1 - jp) * prodx(q, n - jp, n).pow(2);
}

Rational simple_root_norm2(const RootSystem& rs, int pos) {
  const auto& c = rs.roots()[rs.row_begin(pos)].coeffs;
  const auto& R = rs.quotient()->relations();
  const std::size_t N = c.size();
  std::vector<Rational> v = c;
  if (!R.empty()) {
    // v = c - R^T (R R^T)^{-1} R c
    RatMatrix G(R.size(), std::vector<Rational>(R.size()));
    std::vector<Rational> Rc(R.size());
    for (std::size_t a = 0; a < R.size(); ++a) {
      for (std::size_t k = 0; k < N; ++k) Rc[a] += R[a][k] * c[k];
      for (std::size_t b = 0; b < R.size(); ++b) {
        for (std::size_t k = 0; k < N; ++k) G[a][b] += R[a][k] * R[b][k];
      }
    }
    const auto Ginv = inverse(G);
    if (!Ginv) throw std::logic_error("dependent relations");
    for (std::size_t a = 0; a < R.size(); ++a) {
      Rational w = 0;
      for (std::size_t b = 0; b < R.size(); ++b) w += (*Ginv)[a][b] * Rc[b];
      for (std::size_t k = 0; k < N; ++k) v[k] -= w * R[a][k];
    }
  }
  Rational s = 0;
  for (std::size_t k = 0; k < N; ++k) s += v[k] * v[k];
  return s;
}

Polynomial fundamental_weight(const RootSystem& rs, int pos) {
  const Derivation dual = Derivation::constant(rs.quotient(), rs.coweight(pos));
  return (simple_root_norm2(rs, pos) / 2) * q_map(dual);
}

namespace {

void monomials_of_degree(const std::vector<int>& vars, std::size_t from, int d, Monomial cur,
                         std::vector<Monomial>& out) {
  if (from + 1 == vars.size() || d == 0) {
    Monomial m = cur;
    for (int t = 0; t < d; ++t) m = m * Monomial::var(vars[from]);
    out.push_back(m);
    return;
  }
  for (int a = d; a >= 0; --a) {
    Monomial m = cur;
    for (int t = 0; t < a; ++t) m = m * Monomial::var(vars[from]);
    monomials_of_degree(vars, from + 1, d - a, m, out);
  }
}

}  // namespace

std::vector<Integer> graded_rank_oracle(const QuotientPtr& ring, const std::vector<Polynomial>& gens,
                                        int up_to_degree) {
  const std::vector<int> vars = ring->free_variables();
  if (vars.size() > 3) throw std::invalid_argument("graded_rank_oracle: more than 3 variables");
  if (up_to_degree > 8 || up_to_degree < 0) throw std::invalid_argument("graded_rank_oracle: degree must be in 0..8");
  for (const auto& g : gens) {
    if (!g.is_zero() && !g.is_homogeneous()) throw std::invalid_argument("graded_rank_oracle: inhomogeneous generator");
  }
  std::vector<Integer> dims;
  for (int d = 0; d <= up_to_degree; ++d) {
    std::vector<Monomial> basis;
    if (vars.empty()) {
      if (d == 0) basis.push_back(Monomial::one());
    } else {
      monomials_of_degree(vars, 0, d, Monomial::one(), basis);
    }
    std::map<std::vector<std::uint8_t>, std::size_t> column;
    for (std::size_t c = 0; c < basis.size(); ++c) {
      column[std::vector<std::uint8_t>(basis[c].e.begin(), basis[c].e.end())] = c;
    }
    RatMatrix rows;
    for (const auto& g : gens) {
      if (g.is_zero() || g.degree() > d) continue;
      std::vector<Monomial> mult;
      if (vars.empty()) {
        mult.push_back(Monomial::one());
      } else {
        monomials_of_degree(vars, 0, d - g.degree(), Monomial::one(), mult);
      }
      for (const auto& m : mult) {
        const Polynomial prod = g.mul_term(m, 1);
        std::vector<Rational> row(basis.size());
        for (const auto& [mono, coef] : prod.terms()) {
          auto it = column.find(std::vector<std::uint8_t>(mono.e.begin(), mono.e.end()));
          if (it == column.end()) throw std::logic_error("product left the monomial basis");
          row[it->second] = coef;
        }
        rows.push_back(std::move(row));
      }
    }
    dims.emplace_back(static_cast<unsigned long>(basis.size() - (rows.empty() ? 0 : rank(rows))));
  }
  return dims;
}

}  // namespace idealarr
