#pragma once

#include "idealarr/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace idealarr {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  // Throws std::invalid_argument for unsupported (family, rank) pairs.
  static LieType make(Family f, int rank);
  // Parses tags such as "A4", "d5", "E8". Throws std::invalid_argument.
  static LieType parse(std::string_view tag);
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;
};

char family_letter(Family f);

// Row label i and column j of a grid slot. For j > i the slot names the
// positive root alpha_{i,j}; the diagonal slot (i,i) carries psi_{i,i}.
struct RootIndex {
  int i = 0;
  int j = 0;
  friend bool operator==(const RootIndex&, const RootIndex&) = default;
  friend auto operator<=>(const RootIndex&, const RootIndex&) = default;
};

struct Root {
  RootIndex index;
  int row = 0;                          // position of the row, 0-based
  std::vector<Rational> coeffs;         // ambient coefficients in normal form
  Polynomial form;                      // the same linear form
  std::vector<Integer> simple_coeffs;   // expansion in simple roots, by row position
  int height = 0;
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
 public:
  // Builds and validates the system; every structural invariant is checked
  // here so downstream code never sees an inconsistent table.
  static RootSystemPtr build(LieType t);
  static RootSystemPtr build(std::string_view tag) { return build(LieType::parse(tag)); }

  const LieType& type() const { return type_; }
  std::string name() const { return type_.name(); }
  int rank() const { return static_cast<int>(labels_.size()); }
  int ambient_dim() const { return quotient_->ambient_dim(); }
  const QuotientPtr& quotient() const { return quotient_; }

  // Row labels in increasing order; 1..n except for E7 and E6, which keep
  // the E8 labels of the rows they retain.
  const std::vector<int>& labels() const { return labels_; }
  int position(int label) const;  // throws for unknown labels
  int label(int pos) const { return labels_.at(static_cast<std::size_t>(pos)); }

  const std::vector<int>& exponents() const { return exponents_; }  // by position
  int exponent_of_label(int label) const { return exponents_[position(label)]; }
  int height() const { return height_; }  // height of the highest root

  const std::vector<Root>& roots() const { return roots_; }
  int root_count() const { return static_cast<int>(roots_.size()); }
  // Global index of alpha_{i,j}; throws std::out_of_range ("unknown root index").
  int index_of(RootIndex r) const;
  std::optional<int> find(RootIndex r) const;
  const Root& root(RootIndex r) const { return roots_[static_cast<std::size_t>(index_of(r))]; }
  // Global index of alpha_{label(pos), label(pos)+1}; rows are contiguous.
  int row_begin(int pos) const { return row_begin_[static_cast<std::size_t>(pos)]; }

  const Polynomial& simple_root(int pos) const { return roots_[row_begin_[pos]].form; }
  // Tangent vector alpha_i^* with alpha_i^*(alpha_j) = delta_ij.
  const std::vector<Rational>& coweight(int pos) const { return coweights_[static_cast<std::size_t>(pos)]; }

  // Pairs (a, b) of global indices with b - a a simple root.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& lower_covers(int idx) const { return lower_covers_[static_cast<std::size_t>(idx)]; }

  // Lambda_m as row labels, increasing. Throws for m outside [0, height].
  std::vector<int> lambda_set(int m) const;
  int height_of(RootIndex r) const;
  // {i -> alpha_{i,i+m} : i in Lambda_m}. Requires 1 <= m <= height.
  std::vector<std::pair<int, Polynomial>> i_slice(int m) const;

  // Linear form from ambient coefficients, normalized into this system's ring.
  Polynomial linear_form(const std::vector<Rational>& coeffs) const;

 private:
  RootSystem() = default;
  void finish();

  LieType type_;
  QuotientPtr quotient_;
  std::vector<int> labels_;
  std::vector<int> exponents_;
  std::vector<Root> roots_;
  std::vector<int> row_begin_;
  std::vector<std::vector<Rational>> coweights_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> lower_covers_;
  int height_ = 0;

  friend struct RootSystemFactory;
};

// Decodes one entry of the compact E8 root table ("2-3", "1+8", "h178").
std::vector<Rational> decode_e8_root(std::string_view code);

}  // namespace idealarr
