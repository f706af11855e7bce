#include "idealarr/derivation.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace idealarr {

Derivation::Derivation(QuotientPtr q, std::vector<Polynomial> coeffs) : q_(std::move(q)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != q_->ambient_dim()) {
    throw std::invalid_argument("derivation has the wrong number of coefficients");
  }
  for (const auto& rel : q_->relations()) {
    if (!apply(rel).is_zero()) throw std::invalid_argument("derivation is not tangent to t");
  }
}

Derivation Derivation::zero(QuotientPtr q) {
  const auto n = static_cast<std::size_t>(q->ambient_dim());
  return Derivation(q, std::vector<Polynomial>(n, Polynomial(q)));
}

Derivation Derivation::constant(QuotientPtr q, const std::vector<Rational>& v) {
  std::vector<Polynomial> c;
  for (const auto& x : v) c.push_back(Polynomial::constant(q, x));
  return Derivation(q, std::move(c));
}

bool Derivation::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Derivation::is_homogeneous() const {
  int d = -1;
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return false;
    if (d >= 0 && c.degree() != d) return false;
    d = c.degree();
  }
  return true;
}

int Derivation::degree() const {
  if (!is_homogeneous()) throw std::invalid_argument("derivation is not homogeneous");
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return c.degree();
  }
  return -1;
}

Polynomial Derivation::apply(const std::vector<Rational>& a) const {
  if (a.size() != coeffs_.size()) throw std::invalid_argument("linear form has the wrong length");
  Polynomial out(q_);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0) out += a[k] * coeffs_[k];
  }
  return out;
}

Polynomial Derivation::apply(const Polynomial& l) const {
  if (l.degree() > 1) throw std::invalid_argument("apply expects a linear form");
  return apply(l.linear_coefficients());
}

Derivation& Derivation::operator+=(const Derivation& o) {
  if (coeffs_.empty()) return *this = o;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_.at(k);
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
  if (coeffs_.empty()) return *this = Rational(-1) * o;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_.at(k);
  return *this;
}

Derivation operator*(const Polynomial& f, const Derivation& d) {
  Derivation r = d;
  for (auto& c : r.coeffs_) c = f * c;
  return r;
}

Derivation operator*(const Rational& c, const Derivation& d) {
  Derivation r = d;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::vector<Rational> Derivation::evaluate(const std::vector<Rational>& point) const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.evaluate(point));
  return out;
}

std::string Derivation::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[k].to_string() << ")*d" << (k + 1);
  }
  return first ? "0" : os.str();
}

// One extended quotient per (relations, root) pair, shared process-wide.
QuotientPtr hyperplane_quotient(const RootSystem& rs, int root_index) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<std::vector<Rational>>, std::vector<Rational>>, QuotientPtr> cache;
  const auto& coeffs = rs.roots().at(static_cast<std::size_t>(root_index)).coeffs;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rs.quotient()->relations(), coeffs);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto q = extend_quotient(rs.quotient(), coeffs);
  cache.emplace(key, q);
  return q;
}

Polynomial restrict_to_hyperplane(const Polynomial& p, const RootSystem& rs, int root_index) {
  return reduce_to(p, hyperplane_quotient(rs, root_index));
}

bool tangent_to_hyperplane(const Derivation& theta, const RootSystem& rs, int root_index) {
  const Root& r = rs.roots().at(static_cast<std::size_t>(root_index));
  // A polynomial is divisible by a linear form iff it vanishes on its
  // hyperplane, which is what the reduction tests.
  return restrict_to_hyperplane(theta.apply(r.coeffs), rs, root_index).is_zero();
}

bool in_log_module(const Derivation& theta, const RootSystem& rs, const LowerIdeal& I) {
  for (int idx : I.members) {
    if (!tangent_to_hyperplane(theta, rs, idx)) return false;
  }
  return true;
}

Derivation dual_basis(const RootSystem& rs, int label) {
  return Derivation::constant(rs.quotient(), rs.coweight(rs.position(label)));
}

}  // namespace idealarr
