#pragma once

#include "idealarr/rootsys.hpp"

#include <functional>
#include <string>
#include <vector>

namespace idealarr {

// Values h(i) listed by row position; for E7/E6 the positions follow the
// surviving E8 labels.
struct HessenbergFunction {
  std::vector<int> values;
  friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;
};

// Sorted global root indices (see RootSystem::index_of).
struct LowerIdeal {
  std::vector<int> members;
  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  friend bool operator==(const LowerIdeal&, const LowerIdeal&) = default;
};

bool is_downward_closed(const RootSystem& rs, const std::vector<int>& members);

// Throws std::invalid_argument("not downward closed").
HessenbergFunction hessenberg_from_ideal(const RootSystem& rs, const LowerIdeal& I);
// Throws std::invalid_argument("invalid Hessenberg function") when the
// induced set is not an ideal, and for out-of-bounds values.
LowerIdeal ideal_from_hessenberg(const RootSystem& rs, const HessenbergFunction& h);
LowerIdeal ideal_from_roots(const RootSystem& rs, std::vector<int> members);

// All lower ideals ordered by (|I|, member list).
std::vector<LowerIdeal> enumerate_lower_ideals(const RootSystem& rs);

// h(i) - i by position.
std::vector<int> exponents_of(const RootSystem& rs, const LowerIdeal& I);
// Dual partition of the height distribution, padded with zeros to the
// rank and sorted decreasingly.
std::vector<int> dual_partition_exponents(const RootSystem& rs, const LowerIdeal& I);

// The per-type implication lists characterizing Hessenberg functions.
bool validate_hessenberg_conditions(const LieType& t, const HessenbergFunction& h);
// True when i <= h(i) <= i + e_i for every row.
bool within_bounds(const RootSystem& rs, const HessenbergFunction& h);

// Maximal height of a root in I. Throws for the empty ideal.
int ideal_height(const RootSystem& rs, const LowerIdeal& I);
// Rows reaching the maximal height. Throws std::invalid_argument
// ("height undefined at 0") for the empty ideal.
std::vector<int> lambda_of_ideal(const RootSystem& rs, const LowerIdeal& I);

// I_m: all roots of height <= m.
LowerIdeal height_ideal(const RootSystem& rs, int m);

// "3,5,4,7" style keys and their parser (throws std::invalid_argument).
std::string h_key(const HessenbergFunction& h);
HessenbergFunction parse_h(const std::string& text);

// Every h with i <= h(i) <= i + e_i, in lexicographic order.
void for_each_bounded_h(const RootSystem& rs, const std::function<void(const HessenbergFunction&)>& fn);

}  // namespace idealarr
