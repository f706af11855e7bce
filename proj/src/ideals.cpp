#include "idealarr/ideals.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace idealarr {

bool is_downward_closed(const RootSystem& rs, const std::vector<int>& members) {
  std::vector<char> in(static_cast<std::size_t>(rs.root_count()), 0);
  for (int m : members) in.at(static_cast<std::size_t>(m)) = 1;
  for (int m : members) {
    for (int lower : rs.lower_covers(m)) {
      if (!in[static_cast<std::size_t>(lower)]) return false;
    }
  }
  return true;
}

LowerIdeal ideal_from_roots(const RootSystem& rs, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_downward_closed(rs, members)) throw std::invalid_argument("not downward closed");
  return LowerIdeal{std::move(members)};
}

HessenbergFunction hessenberg_from_ideal(const RootSystem& rs, const LowerIdeal& I) {
  if (!is_downward_closed(rs, I.members)) throw std::invalid_argument("not downward closed");
  HessenbergFunction h;
  h.values = rs.labels();
  for (int m : I.members) {
    const Root& r = rs.roots()[static_cast<std::size_t>(m)];
    h.values[r.row] = std::max(h.values[r.row], r.index.j);
  }
  return h;
}

bool within_bounds(const RootSystem& rs, const HessenbergFunction& h) {
  if (static_cast<int>(h.values.size()) != rs.rank()) return false;
  for (int p = 0; p < rs.rank(); ++p) {
    const int i = rs.label(p);
    if (h.values[p] < i || h.values[p] > i + rs.exponents()[p]) return false;
  }
  return true;
}

LowerIdeal ideal_from_hessenberg(const RootSystem& rs, const HessenbergFunction& h) {
  if (!within_bounds(rs, h)) throw std::invalid_argument("invalid Hessenberg function");
  LowerIdeal I;
  for (int p = 0; p < rs.rank(); ++p) {
    const int count = h.values[p] - rs.label(p);
    for (int k = 0; k < count; ++k) I.members.push_back(rs.row_begin(p) + k);
  }
  if (!is_downward_closed(rs, I.members)) throw std::invalid_argument("invalid Hessenberg function");
  return I;
}

std::vector<LowerIdeal> enumerate_lower_ideals(const RootSystem& rs) {
  // Walk the lattice of ideals upward from the empty one. An ideal grows
  // by the next root of some row once all lower covers of that root are
  // present, so every ideal is reached and the h-vector dedupes it.
  const int n = rs.rank();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  std::vector<int> start(static_cast<std::size_t>(n), 0);  // roots taken per row
  seen.insert(start);
  frontier.push_back(start);
  auto present = [&](const std::vector<int>& taken, int idx) {
    const Root& r = rs.roots()[static_cast<std::size_t>(idx)];
    return idx - rs.row_begin(r.row) < taken[r.row];
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& taken : frontier) {
      for (int p = 0; p < n; ++p) {
        if (taken[p] >= rs.exponents()[p]) continue;
        const int cand = rs.row_begin(p) + taken[p];
        bool ok = true;
        for (int lower : rs.lower_covers(cand)) {
          if (!present(taken, lower)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        auto grown = taken;
        ++grown[p];
        if (seen.insert(grown).second) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  std::vector<LowerIdeal> out;
  out.reserve(seen.size());
  for (const auto& taken : seen) {
    LowerIdeal I;
    for (int p = 0; p < n; ++p) {
      for (int k = 0; k < taken[p]; ++k) I.members.push_back(rs.row_begin(p) + k);
    }
    std::sort(I.members.begin(), I.members.end());
    out.push_back(std::move(I));
  }
  std::sort(out.begin(), out.end(), [](const LowerIdeal& a, const LowerIdeal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<int> exponents_of(const RootSystem& rs, const LowerIdeal& I) {
  auto h = hessenberg_from_ideal(rs, I);
  std::vector<int> out;
  for (int p = 0; p < rs.rank(); ++p) out.push_back(h.values[p] - rs.label(p));
  return out;
}

std::vector<int> dual_partition_exponents(const RootSystem& rs, const LowerIdeal& I) {
  std::vector<int> per_height(static_cast<std::size_t>(rs.height()) + 1, 0);
  for (int m : I.members) ++per_height[rs.roots()[static_cast<std::size_t>(m)].height];
  std::vector<int> out(static_cast<std::size_t>(rs.rank()), 0);
  // The k-th part of the dual partition counts heights with at least k roots.
  for (int k = 1; k <= rs.rank(); ++k) {
    for (std::size_t ht = 1; ht < per_height.size(); ++ht) {
      if (per_height[ht] >= k) ++out[k - 1];
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

int ideal_height(const RootSystem& rs, const LowerIdeal& I) {
  if (I.empty()) throw std::invalid_argument("height undefined at 0");
  int best = 0;
  for (int m : I.members) best = std::max(best, rs.roots()[static_cast<std::size_t>(m)].height);
  return best;
}

std::vector<int> lambda_of_ideal(const RootSystem& rs, const LowerIdeal& I) {
  const int ht = ideal_height(rs, I);
  auto h = hessenberg_from_ideal(rs, I);
  std::vector<int> out;
  for (int p = 0; p < rs.rank(); ++p) {
    if (h.values[p] - rs.label(p) == ht) out.push_back(rs.label(p));
  }
  return out;
}

LowerIdeal height_ideal(const RootSystem& rs, int m) {
  LowerIdeal I;
  for (int idx = 0; idx < rs.root_count(); ++idx) {
    if (rs.roots()[static_cast<std::size_t>(idx)].height <= m) I.members.push_back(idx);
  }
  return I;
}

std::string h_key(const HessenbergFunction& h) {
  std::ostringstream os;
  for (std::size_t k = 0; k < h.values.size(); ++k) os << (k ? "," : "") << h.values[k];
  return os.str();
}

HessenbergFunction parse_h(const std::string& text) {
  HessenbergFunction h;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
      throw std::invalid_argument("malformed Hessenberg list '" + text + "'");
    }
    h.values.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return h;
}

void for_each_bounded_h(const RootSystem& rs, const std::function<void(const HessenbergFunction&)>& fn) {
  HessenbergFunction h;
  h.values = rs.labels();
  const int n = rs.rank();
  for (;;) {
    fn(h);
    int p = n - 1;
    while (p >= 0 && h.values[p] == rs.label(p) + rs.exponents()[p]) {
      h.values[p] = rs.label(p);
      --p;
    }
    if (p < 0) return;
    ++h.values[p];
  }
}

// ------------------------------------------------------------------------
// Condition lists. Each rule reads "if h(a) <pre> k then h(b) <post> rhs",
// where rhs is c, or h(ref) + c when ref is set. Rows are 1-based labels of
// the type the rules are written for.

namespace {

enum class Cmp { Always, GE, LE, EQ, NE };

struct Rule {
  int a;
  Cmp pre;
  int k;
  int b;
  Cmp post;
  int c;
  int ref = 0;
};

bool compare(int lhs, Cmp op, int rhs) {
  switch (op) {
    case Cmp::Always:
      return true;
    case Cmp::GE:
      return lhs >= rhs;
    case Cmp::LE:
      return lhs <= rhs;
    case Cmp::EQ:
      return lhs == rhs;
    case Cmp::NE:
      return lhs != rhs;
  }
  return false;
}

// "if h(a) >= k then h(b) >= k + offset" for every k in ks.
void add_ge_family(std::vector<Rule>& rules, int a, int b, int offset, std::initializer_list<int> ks) {
  for (int k : ks) rules.push_back({a, Cmp::GE, k, b, Cmp::GE, k + offset});
}

std::vector<Rule> rules_a(int n) {
  std::vector<Rule> r;
  for (int i = 1; i < n; ++i) r.push_back({i, Cmp::Always, 0, i + 1, Cmp::GE, 0, i});
  return r;
}

std::vector<Rule> rules_bc(int n) {
  std::vector<Rule> r;
  for (int i = 1; i < n; ++i) {
    r.push_back({i, Cmp::NE, 2 * n + 1 - i, i + 1, Cmp::GE, 0, i});
    r.push_back({i, Cmp::EQ, 2 * n + 1 - i, i + 1, Cmp::EQ, 2 * n - i});
  }
  return r;
}

std::vector<Rule> rules_d(int n) {
  std::vector<Rule> r;
  for (int i = 1; i <= n - 2; ++i) {
    r.push_back({i, Cmp::NE, 2 * n - 1 - i, i + 1, Cmp::GE, 0, i});
    r.push_back({i, Cmp::EQ, 2 * n - 1 - i, i + 1, Cmp::EQ, 2 * n - 2 - i});
    r.push_back({i, Cmp::GE, n + 1, n, Cmp::GE, 2 * n - i});
    r.push_back({n, Cmp::GE, 2 * n - i, i, Cmp::GE, n - 1});
  }
  return r;
}

std::vector<Rule> rules_g2() { return {{1, Cmp::GE, 3, 2, Cmp::EQ, 3}}; }

std::vector<Rule> rules_f4() {
  std::vector<Rule> r;
  add_ge_family(r, 2, 3, 0, {4, 5, 6, 10});
  add_ge_family(r, 3, 4, 0, {5, 7, 9});
  r.push_back({4, Cmp::GE, 6, 1, Cmp::EQ, 2});
  add_ge_family(r, 4, 3, -2, {7, 9});
  add_ge_family(r, 4, 2, -3, {8, 9});
  r.push_back({2, Cmp::GE, 8, 4, Cmp::EQ, 9});
  r.push_back({3, Cmp::GE, 10, 2, Cmp::GE, 8});
  return r;
}

std::vector<Rule> rules_e8() {
  std::vector<Rule> r;
  add_ge_family(r, 1, 2, 0, {11, 12, 20});
  add_ge_family(r, 1, 3, 1, {8, 9, 10, 12, 13, 14, 15, 16, 17, 18});
  add_ge_family(r, 1, 4, 2, {10});
  add_ge_family(r, 1, 6, 4, {8, 9});
  add_ge_family(r, 1, 8, 6, {3, 4, 5, 6, 7, 11, 13, 14, 16, 19});
  add_ge_family(r, 2, 1, -2, {14, 15, 16, 17, 22});
  add_ge_family(r, 2, 3, 0, {4, 5, 6, 7, 8, 9, 10, 11, 12, 25, 26});
  add_ge_family(r, 2, 8, 5, {9, 19, 20});
  add_ge_family(r, 3, 1, -3, {13, 21, 22, 23});
  add_ge_family(r, 3, 2, -2, {24, 25});
  add_ge_family(r, 3, 4, 0, {5, 6, 7, 8, 9, 10, 11, 17});
  add_ge_family(r, 3, 5, 1, {14, 15});
  add_ge_family(r, 3, 8, 4, {9});
  add_ge_family(r, 4, 3, -2, {17});
  add_ge_family(r, 4, 5, 0, {6, 7, 8, 9, 10, 13, 16});
  add_ge_family(r, 4, 6, 1, {12});
  add_ge_family(r, 4, 8, 3, {9});
  add_ge_family(r, 5, 1, -5, {14, 15});
  add_ge_family(r, 5, 4, -2, {15, 16});
  add_ge_family(r, 5, 6, 0, {7, 8, 9, 11, 13});
  add_ge_family(r, 5, 8, 2, {9});
  add_ge_family(r, 6, 1, -6, {10, 11, 12});
  add_ge_family(r, 6, 4, -3, {12, 13});
  add_ge_family(r, 6, 5, -2, {11, 13});
  add_ge_family(r, 6, 7, 0, {8});
  add_ge_family(r, 6, 8, 1, {9});
  add_ge_family(r, 8, 1, -8, {15, 16, 17, 19, 22, 24, 25});
  add_ge_family(r, 8, 2, -7, {14, 16, 17, 23, 24});
  add_ge_family(r, 8, 3, -6, {13});
  add_ge_family(r, 8, 4, -5, {12, 21, 22});
  add_ge_family(r, 8, 5, -4, {11, 18, 19, 20});
  add_ge_family(r, 8, 6, -3, {10});
  return r;
}

// Bounds i <= h(i) <= i + e_i, labels and exponents listed explicitly.
struct Bounds {
  std::vector<int> labels;
  std::vector<int> exponents;
};

Bounds bounds_for(const LieType& t) {
  Bounds b;
  const int n = t.rank;
  for (int i = 1; i <= n; ++i) b.labels.push_back(i);
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) b.exponents.push_back(n + 1 - i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) b.exponents.push_back(2 * (n - i) + 1);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) b.exponents.push_back(2 * n - 2 * i - 1);
      b.exponents.push_back(n - 1);
      break;
    case Family::G:
      b.exponents = {5, 1};
      break;
    case Family::F:
      b.exponents = {1, 11, 7, 5};
      break;
    case Family::E:
      if (n == 8) {
        b.exponents = {19, 29, 23, 13, 11, 7, 1, 17};
      } else if (n == 7) {
        b.labels = {1, 3, 4, 5, 6, 7, 8};
        b.exponents = {9, 17, 13, 11, 7, 1, 5};
      } else {
        b.labels = {1, 4, 5, 6, 7, 8};
        b.exponents = {5, 11, 8, 7, 1, 4};
      }
      break;
  }
  return b;
}

bool check_rules(const std::vector<Rule>& rules, const std::vector<int>& h1) {
  // h1 is indexed by 1-based label; slot 0 unused.
  for (const Rule& rule : rules) {
    if (!compare(h1[rule.a], rule.pre, rule.k)) continue;
    const int rhs = rule.c + (rule.ref ? h1[rule.ref] : 0);
    if (!compare(h1[rule.b], rule.post, rhs)) return false;
  }
  return true;
}

}  // namespace

bool validate_hessenberg_conditions(const LieType& t, const HessenbergFunction& h) {
  const Bounds b = bounds_for(t);
  if (h.values.size() != b.labels.size()) return false;
  for (std::size_t p = 0; p < b.labels.size(); ++p) {
    if (h.values[p] < b.labels[p] || h.values[p] > b.labels[p] + b.exponents[p]) return false;
  }
  std::vector<int> h1(static_cast<std::size_t>(b.labels.back()) + 1, 0);
  for (std::size_t p = 0; p < b.labels.size(); ++p) h1[b.labels[p]] = h.values[p];
  switch (t.family) {
    case Family::A:
      return check_rules(rules_a(t.rank), h1);
    case Family::B:
    case Family::C:
      return check_rules(rules_bc(t.rank), h1);
    case Family::D:
      return check_rules(rules_d(t.rank), h1);
    case Family::G:
      return check_rules(rules_g2(), h1);
    case Family::F:
      return check_rules(rules_f4(), h1);
    case Family::E:
      // E7 and E6 functions are E8 functions with the dropped rows empty.
      if (t.rank <= 7) h1[2] = 2;
      if (t.rank == 6) h1[3] = 3;
      {
        static const std::vector<Rule> e8 = rules_e8();
        return check_rules(e8, h1);
      }
  }
  return false;
}

}  // namespace idealarr
