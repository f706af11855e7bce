#pragma once

#include "idealarr/ideals.hpp"
#include "idealarr/polynomial.hpp"
#include "idealarr/rootsys.hpp"

#include <string>
#include <vector>

namespace idealarr {

// theta = sum_k f_k d/dx_k in ambient coordinates. The constructor checks
// that theta is tangent to t, i.e. kills every defining relation.
class Derivation {
 public:
  Derivation() = default;
  Derivation(QuotientPtr q, std::vector<Polynomial> coeffs);
  static Derivation zero(QuotientPtr q);
  // Constant-coefficient derivation from an ambient vector.
  static Derivation constant(QuotientPtr q, const std::vector<Rational>& v);

  const QuotientPtr& quotient() const { return q_; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  const Polynomial& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  int ambient_dim() const { return static_cast<int>(coeffs_.size()); }

  bool is_zero() const;
  bool is_homogeneous() const;
  // Common degree of the nonzero coefficients; -1 for zero. Throws
  // std::invalid_argument for a non-homogeneous derivation.
  int degree() const;

  // theta(l) for a linear form l.
  Polynomial apply(const Polynomial& l) const;
  Polynomial apply(const std::vector<Rational>& ambient_coeffs) const;

  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Polynomial& f, const Derivation& d);
  friend Derivation operator*(const Rational& c, const Derivation& d);
  friend bool operator==(const Derivation& a, const Derivation& b) { return a.coeffs_ == b.coeffs_; }

  std::vector<Rational> evaluate(const std::vector<Rational>& point) const;
  std::string to_string() const;

 private:
  QuotientPtr q_;
  std::vector<Polynomial> coeffs_;
};

// The ring R/(alpha) for the root with the given global index.
QuotientPtr hyperplane_quotient(const RootSystem& rs, int root_index);
// theta(alpha) reduced modulo alpha, i.e. restricted to the hyperplane.
Polynomial restrict_to_hyperplane(const Polynomial& p, const RootSystem& rs, int root_index);
// alpha divides theta(alpha).
bool tangent_to_hyperplane(const Derivation& theta, const RootSystem& rs, int root_index);
bool in_log_module(const Derivation& theta, const RootSystem& rs, const LowerIdeal& I);

// alpha_i^* for row label i.
Derivation dual_basis(const RootSystem& rs, int label);

}  // namespace idealarr
