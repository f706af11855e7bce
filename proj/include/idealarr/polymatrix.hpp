#pragma once

#include "idealarr/polynomial.hpp"

#include <optional>
#include <vector>

namespace idealarr {

// Dense square or rectangular matrix of polynomials over one quotient ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(QuotientPtr q, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const QuotientPtr& quotient() const { return q_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  // Numeric matrix obtained by evaluating every entry.
  std::vector<std::vector<Rational>> evaluate(const std::vector<Rational>& point) const;

 private:
  QuotientPtr q_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> cells_;
};

// Fraction-free Bareiss elimination. Every intermediate division is exact.
Polynomial determinant(const PolyMatrix& m);

// Plain cofactor expansion; exponential, used as a reference for small sizes.
Polynomial determinant_cofactor(const PolyMatrix& m);

// ---- dense linear algebra over Q ----

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix identity_matrix(std::size_t n);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

// Reduces m in place to reduced row echelon form and returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);
std::size_t rank(RatMatrix m);
// Basis of {v : m v = 0}; each vector has a 1 at one free column.
std::vector<std::vector<Rational>> kernel(RatMatrix m, std::size_t cols);
std::optional<RatMatrix> inverse(const RatMatrix& m);
Rational determinant(RatMatrix m);

}  // namespace idealarr
