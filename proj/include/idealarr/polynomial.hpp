#pragma once

#include "idealarr/rational.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace idealarr {

inline constexpr int kMaxVars = 16;

// Exponent vector over at most kMaxVars ambient coordinates. Unused slots
// stay zero, so two monomials of the same ring compare correctly without
// knowing the ring's dimension.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial var(int k);

  int operator[](int k) const { return e[static_cast<std::size_t>(k)]; }
  bool divisible_by(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divisible_by
};

inline bool operator==(const Monomial& a, const Monomial& b) {
  return a.deg == b.deg && a.e == b.e;
}

// Graded lexicographic: higher degree wins, ties broken by x1 > x2 > ...
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  return std::memcmp(a.e.data(), b.e.data(), kMaxVars) < 0;
}

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t lo = 0, hi = 0;
    std::memcpy(&lo, m.e.data(), 8);
    std::memcpy(&hi, m.e.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// The linear relations cutting t out of the ambient space. Every relation
// has a pivot at its largest-index variable, and the normal form of a
// polynomial never mentions a pivot variable.
class QuotientSpec {
 public:
  QuotientSpec(int ambient_dim, const std::vector<std::vector<Rational>>& relations);
  static std::shared_ptr<const QuotientSpec> make(int ambient_dim,
                                                  const std::vector<std::vector<Rational>>& relations = {});

  int ambient_dim() const { return n_; }
  const std::vector<std::vector<Rational>>& relations() const { return relations_; }
  const std::vector<int>& eliminated() const { return eliminated_; }
  bool is_eliminated(int k) const { return is_elim_[static_cast<std::size_t>(k)]; }
  std::vector<int> free_variables() const;
  // x_k expressed through free variables (identity for free k).
  const std::vector<Rational>& substitution(int k) const { return subst_[static_cast<std::size_t>(k)]; }
  bool same_as(const QuotientSpec& o) const;

 private:
  int n_;
  std::vector<std::vector<Rational>> relations_;  // reduced echelon, pivot coefficient 1
  std::vector<int> eliminated_;                   // strictly decreasing
  std::vector<bool> is_elim_;
  std::vector<std::vector<Rational>> subst_;
};

using QuotientPtr = std::shared_ptr<const QuotientSpec>;

class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(QuotientPtr q) : q_(std::move(q)) {}

  static Polynomial constant(QuotientPtr q, const Rational& c);
  static Polynomial variable(QuotientPtr q, int k);
  static Polynomial linear(QuotientPtr q, const std::vector<Rational>& coeffs);
  // Normalizes an arbitrary term list (duplicates allowed, eliminated
  // variables allowed) into the quotient's normal form.
  static Polynomial normalize(QuotientPtr q, const std::vector<Term>& raw);
  // Trusted constructor: terms must already be sorted, merged and reduced.
  static Polynomial from_sorted(QuotientPtr q, std::vector<Term> terms);

  const QuotientPtr& quotient() const { return q_; }
  int ambient_dim() const { return q_ ? q_->ambient_dim() : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.deg == 0); }

  // Degree of the leading term; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.deg; }
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;
  // Coefficient vector of a degree <= 1 polynomial in ambient coordinates.
  std::vector<Rational> linear_coefficients() const;
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string() const;

 private:
  QuotientPtr q_;
  std::vector<Term> terms_;
  void check_compatible(const Polynomial& o) const;
};

// Exact multivariate division. Returns the quotient when b divides a,
// std::nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Throws std::invalid_argument("degenerate divisor") when l is zero.
std::optional<Polynomial> divide_by_linear(const Polynomial& p, const Polynomial& l);

// c with p = c*q, c != 0. The pair (0, 0) yields 1.
std::optional<Rational> proportionality(const Polynomial& p, const Polynomial& q);

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

// Point with free coordinates drawn by `draw` and eliminated coordinates
// solved from the relations, so it lies on t.
std::vector<Rational> point_on_quotient(const QuotientSpec& q, const std::function<Rational()>& draw);

// Quotient obtained by adding one more linear relation (given in ambient
// coordinates) to q. Used to work modulo a root: R/(alpha).
QuotientPtr extend_quotient(const QuotientPtr& q, const std::vector<Rational>& relation);

// Rewrites p into the normal form of `target`, whose relations must contain
// those of p's ring. Eliminated variables are substituted by Horner's rule.
Polynomial reduce_to(const Polynomial& p, const QuotientPtr& target);

// Expression parser: integers, fractions, x1..xN, + - * ^ and parentheses.
Polynomial parse_polynomial(QuotientPtr q, const std::string& text);

Polynomial product(QuotientPtr q, const std::vector<Polynomial>& factors);

}  // namespace idealarr
