#include "idealarr/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace idealarr {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(int k) {
  if (k < 0 || k >= kMaxVars) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.e[static_cast<std::size_t>(k)] = 1;
  m.deg = 1;
  return m;
}

bool Monomial::divisible_by(const Monomial& o) const {
  if (o.deg > deg) return false;
  for (int k = 0; k < kMaxVars; ++k) {
    if (e[k] < o.e[k]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) {
    unsigned s = static_cast<unsigned>(e[k]) + o.e[k];
    if (s > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.e[k] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(deg + o.deg);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<std::uint8_t>(e[k] - o.e[k]);
  r.deg = static_cast<std::uint16_t>(deg - o.deg);
  return r;
}

// ----------------------------------------------------------- QuotientSpec

QuotientSpec::QuotientSpec(int ambient_dim, const std::vector<std::vector<Rational>>& relations)
    : n_(ambient_dim), is_elim_(static_cast<std::size_t>(ambient_dim), false) {
  if (n_ < 1 || n_ > kMaxVars) throw std::invalid_argument("ambient dimension out of range");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : relations) {
    if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("relation length mismatch");
    rows.push_back(r);
  }
  // Reduced echelon form, pivots chosen from the last column backwards.
  std::size_t next = 0;
  std::vector<int> pivots;
  for (int col = n_ - 1; col >= 0 && next < rows.size(); --col) {
    std::size_t pr = next;
    while (pr < rows.size() && rows[pr][col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[next]);
    Rational inv = 1 / rows[next][col];
    for (auto& v : rows[next]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (int k = 0; k < n_; ++k) rows[r][k] -= f * rows[next][k];
    }
    pivots.push_back(col);
    ++next;
  }
  for (std::size_t r = next; r < rows.size(); ++r) {
    for (const auto& v : rows[r]) {
      if (v != 0) throw std::logic_error("inconsistent relations");
    }
  }
  rows.resize(next);
  relations_ = rows;
  eliminated_ = pivots;
  for (int p : pivots) is_elim_[static_cast<std::size_t>(p)] = true;
  subst_.assign(static_cast<std::size_t>(n_), std::vector<Rational>(static_cast<std::size_t>(n_)));
  for (int k = 0; k < n_; ++k) {
    if (!is_elim_[k]) subst_[k][k] = 1;
  }
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    int p = pivots[r];
    for (int k = 0; k < n_; ++k) {
      if (k != p) subst_[p][k] = -relations_[r][k];
    }
  }
}

QuotientPtr QuotientSpec::make(int ambient_dim, const std::vector<std::vector<Rational>>& relations) {
  return std::make_shared<const QuotientSpec>(ambient_dim, relations);
}

std::vector<int> QuotientSpec::free_variables() const {
  std::vector<int> out;
  for (int k = 0; k < n_; ++k) {
    if (!is_elim_[k]) out.push_back(k);
  }
  return out;
}

bool QuotientSpec::same_as(const QuotientSpec& o) const {
  return n_ == o.n_ && relations_ == o.relations_;
}

// ------------------------------------------------------------- Polynomial

namespace {

using Term = Polynomial::Term;

// Merge two descending term lists, adding coefficients (b scaled by sign).
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    } else if (grlex_less(b[j].first, a[i].first)) {
      out.push_back(a[i++]);
    } else {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
  return out;
}

std::vector<Term> sorted_from_map(std::unordered_map<Monomial, Rational, MonomialHash>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.emplace_back(m, std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return grlex_less(y.first, x.first); });
  return out;
}

}  // namespace

void Polynomial::check_compatible(const Polynomial& o) const {
  if (q_ && o.q_ && q_ != o.q_ && !q_->same_as(*o.q_)) {
    throw std::invalid_argument("polynomials live in different quotient rings");
  }
}

Polynomial Polynomial::constant(QuotientPtr q, const Rational& c) {
  Polynomial p(std::move(q));
  if (c != 0) p.terms_.emplace_back(Monomial::one(), c);
  return p;
}

Polynomial Polynomial::variable(QuotientPtr q, int k) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(q->ambient_dim()));
  coeffs.at(static_cast<std::size_t>(k)) = 1;
  return linear(std::move(q), coeffs);
}

Polynomial Polynomial::linear(QuotientPtr q, const std::vector<Rational>& coeffs) {
  const int n = q->ambient_dim();
  if (static_cast<int>(coeffs.size()) != n) throw std::invalid_argument("linear form length mismatch");
  std::vector<Rational> red(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    if (coeffs[k] == 0) continue;
    const auto& s = q->substitution(k);
    for (int j = 0; j < n; ++j) {
      if (s[j] != 0) red[j] += coeffs[k] * s[j];
    }
  }
  Polynomial p(std::move(q));
  for (int k = 0; k < n; ++k) {
    if (red[k] != 0) p.terms_.emplace_back(Monomial::var(k), red[k]);
  }
  return p;  // x1 > x2 > ... already descending
}

Polynomial Polynomial::from_sorted(QuotientPtr q, std::vector<Term> terms) {
  Polynomial p(std::move(q));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::normalize(QuotientPtr q, const std::vector<Term>& raw) {
  const int n = q->ambient_dim();
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& [m, c] : raw) {
    for (int k = n; k < kMaxVars; ++k) {
      if (m.e[k] != 0) throw std::invalid_argument("monomial uses a variable beyond the ambient dimension");
    }
    acc[m] += c;
  }
  return reduce_to(from_sorted(q, sorted_from_map(acc)), q);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().first.deg == terms_.back().first.deg;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grlex_less(key, t.first); });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

std::vector<Rational> Polynomial::linear_coefficients() const {
  std::vector<Rational> out(static_cast<std::size_t>(ambient_dim()));
  for (const auto& [m, c] : terms_) {
    if (m.deg > 1) throw std::invalid_argument("polynomial is not linear");
    if (m.deg == 0) continue;
    for (int k = 0; k < ambient_dim(); ++k) {
      if (m.e[k]) out[k] = c;
    }
  }
  return out;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().first.deg == 0) return terms_.back().second;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  if (!q_) q_ = o.q_;
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  terms_ = merge_add(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  if (!q_) q_ = o.q_;
  if (o.terms_.empty()) return *this;
  terms_ = merge_add(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(q_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [tm, tc] : terms_) r.terms_.emplace_back(tm * m, tc * c);
  return r;  // multiplying by a monomial preserves the order
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  QuotientPtr q = a.q_ ? a.q_ : b.q_;
  if (a.terms_.empty() || b.terms_.empty()) return Polynomial(q);
  const Polynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Polynomial& big = a.terms_.size() <= b.terms_.size() ? b : a;
  if (small.terms_.size() <= 12) {
    std::vector<Term> acc;
    for (const auto& [m, c] : small.terms_) {
      Polynomial shifted = big.mul_term(m, c);
      acc = acc.empty() ? std::move(shifted.terms_) : merge_add(acc, shifted.terms_, false);
    }
    return Polynomial::from_sorted(q, std::move(acc));
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(small.terms_.size() * big.terms_.size(), 1u << 22));
  Rational tmp;
  for (const auto& [ma, ca] : small.terms_) {
    for (const auto& [mb, cb] : big.terms_) {
      mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      acc[ma * mb] += tmp;
    }
  }
  return Polynomial::from_sorted(q, sorted_from_map(acc));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(q_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  const int n = ambient_dim();
  if (static_cast<int>(point.size()) != n) throw std::invalid_argument("evaluation point has wrong length");
  if (terms_.empty()) return 0;
  int maxdeg = terms_.front().first.deg;
  std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    powers[k].resize(static_cast<std::size_t>(maxdeg) + 1);
    powers[k][0] = 1;
    for (int d = 1; d <= maxdeg; ++d) powers[k][d] = powers[k][d - 1] * point[k];
  }
  Rational sum = 0, t;
  for (const auto& [m, c] : terms_) {
    t = c;
    for (int k = 0; k < n; ++k) {
      if (m.e[k]) t *= powers[k][m.e[k]];
    }
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || m.deg == 0) {
      os << to_display_string(a);
      if (m.deg) os << "*";
    }
    bool firstvar = true;
    for (int k = 0; k < kMaxVars; ++k) {
      if (!m.e[k]) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << "x" << (k + 1);
      if (m.e[k] > 1) os << "^" << static_cast<int>(m.e[k]);
    }
  }
  return os.str();
}

// ------------------------------------------------------------- algorithms

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  QuotientPtr q = a.quotient() ? a.quotient() : b.quotient();
  if (a.is_zero()) return Polynomial(q);
  const auto& bt = b.terms();
  const Monomial lm = bt.front().first;
  const Rational lc = bt.front().second;
  if (bt.size() == 1) {
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& [m, c] : a.terms()) {
      if (!m.divisible_by(lm)) return std::nullopt;
      out.emplace_back(m / lm, c / lc);
    }
    return Polynomial::from_sorted(q, std::move(out));
  }
  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.first, t.second);
  std::vector<Term> quot;
  Rational f;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!it->first.divisible_by(lm)) return std::nullopt;
    Monomial qm = it->first / lm;
    f = it->second / lc;
    rem.erase(it);
    for (std::size_t k = 1; k < bt.size(); ++k) {
      Monomial m = bt[k].first * qm;
      auto [pos, inserted] = rem.try_emplace(m);
      pos->second -= f * bt[k].second;
      if (pos->second == 0) rem.erase(pos);
    }
    quot.emplace_back(qm, f);
  }
  return Polynomial::from_sorted(q, std::move(quot));
}

std::optional<Polynomial> divide_by_linear(const Polynomial& p, const Polynomial& l) {
  if (l.is_zero()) throw std::invalid_argument("degenerate divisor");
  if (l.degree() != 1 || !l.is_homogeneous()) throw std::invalid_argument("divisor is not a linear form");
  return divide_exact(p, l);
}

std::optional<Rational> proportionality(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) return Rational(1);
  if (p.is_zero() || q.is_zero() || p.size() != q.size()) return std::nullopt;
  Rational c = p.terms().front().second / q.terms().front().second;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p.terms()[i].first == q.terms()[i].first)) return std::nullopt;
    if (p.terms()[i].second != c * q.terms()[i].second) return std::nullopt;
  }
  return c;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) { return p.evaluate(point); }

std::vector<Rational> point_on_quotient(const QuotientSpec& q, const std::function<Rational()>& draw) {
  const int n = q.ambient_dim();
  std::vector<Rational> pt(static_cast<std::size_t>(n));
  for (int k : q.free_variables()) pt[k] = draw();
  for (int p : q.eliminated()) {
    Rational v = 0;
    const auto& s = q.substitution(p);
    for (int k = 0; k < n; ++k) {
      if (s[k] != 0) v += s[k] * pt[k];
    }
    pt[p] = v;
  }
  return pt;
}

Polynomial product(QuotientPtr q, const std::vector<Polynomial>& factors) {
  Polynomial r = Polynomial::constant(q, 1);
  for (const auto& f : factors) r = r * f;
  return r;
}

QuotientPtr extend_quotient(const QuotientPtr& q, const std::vector<Rational>& relation) {
  auto rels = q->relations();
  rels.push_back(relation);
  return QuotientSpec::make(q->ambient_dim(), rels);
}

Polynomial reduce_to(const Polynomial& p, const QuotientPtr& target) {
  std::vector<Term> current = p.terms();
  for (int v : target->eliminated()) {
    int top = 0;
    for (const auto& t : current) top = std::max(top, static_cast<int>(t.first.e[v]));
    if (top == 0) continue;
    // Split by the power of x_v; stripping x_v^e keeps each bucket sorted.
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(top) + 1);
    for (auto& t : current) {
      const int e = t.first.e[v];
      Monomial m = t.first;
      m.e[v] = 0;
      m.deg = static_cast<std::uint16_t>(m.deg - e);
      buckets[e].emplace_back(m, std::move(t.second));
    }
    const Polynomial sub = Polynomial::variable(target, v);
    Polynomial acc = Polynomial::from_sorted(target, std::move(buckets[top]));
    for (int e = top - 1; e >= 0; --e) {
      acc = acc * sub;
      acc += Polynomial::from_sorted(target, std::move(buckets[e]));
    }
    current = acc.terms();
  }
  return Polynomial::from_sorted(target, std::move(current));
}

// ----------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(QuotientPtr q, const std::string& s) : q_(std::move(q)), s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  QuotientPtr q_;
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  Polynomial term() {
    Polynomial acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }
  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) base = base.pow(static_cast<unsigned>(std::stoul(digits())));
    return base;
  }
  Polynomial atom() {
    skip();
    if (eat('(')) {
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      int k = std::stoi(digits());
      if (k < 1 || k > q_->ambient_dim()) fail("variable index out of range");
      return Polynomial::variable(q_, k - 1);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string num = digits();
      std::size_t save = pos_;
      if (eat('/')) {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          return Polynomial::constant(q_, parse_rational(num + "/" + digits()));
        }
        pos_ = save;
      }
      return Polynomial::constant(q_, parse_rational(num));
    }
    fail("expected a number, variable or '('");
  }
};

}  // namespace

Polynomial parse_polynomial(QuotientPtr q, const std::string& text) {
  return Parser(std::move(q), text).parse();
}

}  // namespace idealarr
