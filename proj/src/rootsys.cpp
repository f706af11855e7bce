#include "idealarr/rootsys.hpp"

#include "data/tables.hpp"
#include "idealarr/polymatrix.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace idealarr {

char family_letter(Family f) {
  static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return letters[static_cast<int>(f)];
}

LieType LieType::make(Family f, int rank) {
  auto reject = [&](const std::string& why) {
    throw std::invalid_argument(std::string("unsupported Lie type ") + family_letter(f) + std::to_string(rank) +
                                ": " + why);
  };
  switch (f) {
    case Family::A:
      if (rank < 1 || rank > kMaxVars - 1) reject("type A needs 1 <= n <= 15");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2 || rank > kMaxVars) reject("types B and C need 2 <= n <= 16");
      break;
    case Family::D:
      if (rank < 4) reject("type D requires n >= 4 (D2 and D3 are reducible or coincide with type A)");
      if (rank > kMaxVars) reject("type D needs n <= 16");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) reject("type E exists for n = 6, 7, 8 only");
      break;
    case Family::F:
      if (rank != 4) reject("type F exists for n = 4 only");
      break;
    case Family::G:
      if (rank != 2) reject("type G exists for n = 2 only");
      break;
  }
  return LieType{f, rank};
}

LieType LieType::parse(std::string_view tag) {
  if (tag.size() < 2) throw std::invalid_argument("malformed type tag '" + std::string(tag) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tag[0])));
  static const std::string letters = "ABCDEFG";
  auto pos = letters.find(c);
  if (pos == std::string::npos) throw std::invalid_argument("unknown family in type tag '" + std::string(tag) + "'");
  int rank = 0;
  for (std::size_t k = 1; k < tag.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(tag[k])) || rank > 1000) {
      throw std::invalid_argument("malformed rank in type tag '" + std::string(tag) + "'");
    }
    rank = rank * 10 + (tag[k] - '0');
  }
  return make(static_cast<Family>(pos), rank);
}

std::string LieType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

std::vector<Rational> decode_e8_root(std::string_view code) {
  std::vector<Rational> v(8);
  auto digit = [&](char ch) {
    if (ch < '1' || ch > '8') throw std::invalid_argument("bad E8 root code '" + std::string(code) + "'");
    return ch - '1';
  };
  if (!code.empty() && code[0] == 'h') {
    for (auto& x : v) x = Rational(-1, 2);
    for (std::size_t k = 1; k < code.size(); ++k) v[digit(code[k])] = Rational(1, 2);
    return v;
  }
  if (code.size() != 3 || (code[1] != '+' && code[1] != '-')) {
    throw std::invalid_argument("bad E8 root code '" + std::string(code) + "'");
  }
  v[digit(code[0])] = 1;
  v[digit(code[2])] += code[1] == '+' ? 1 : -1;
  return v;
}

// Per-type raw data: ambient space, relations, row labels, the expected
// exponents and the root table row by row in ambient coordinates.
struct RawSystem {
  int ambient = 0;
  std::vector<std::vector<Rational>> relations;
  std::vector<int> labels;
  std::vector<int> expected_exponents;
  std::vector<std::vector<std::vector<Rational>>> rows;
};

struct RootSystemFactory {
  static std::vector<Rational> unit(int n, int k, Rational c = 1) {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(k)] = c;
    return v;
  }
  static std::vector<Rational> pm(int n, int a, int b, int sign) {  // x_a +/- x_b, 1-based
    auto v = unit(n, a - 1);
    v[static_cast<std::size_t>(b - 1)] += sign;
    return v;
  }

  static RawSystem type_a(int r) {
    const int n = r + 1;
    RawSystem raw;
    raw.ambient = n;
    raw.relations.push_back(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
    for (int i = 1; i <= r; ++i) {
      raw.labels.push_back(i);
      raw.expected_exponents.push_back(n - i);
      std::vector<std::vector<Rational>> row;
      for (int j = i + 1; j <= n; ++j) row.push_back(pm(n, i, j, -1));
      raw.rows.push_back(row);
    }
    return raw;
  }

  static RawSystem type_bc(int n, bool is_c) {
    RawSystem raw;
    raw.ambient = n;
    for (int i = 1; i <= n; ++i) {
      raw.labels.push_back(i);
      raw.expected_exponents.push_back(2 * (n - i) + 1);
      std::vector<std::vector<Rational>> row;
      for (int j = i + 1; j <= 2 * n + 1 - i; ++j) {
        if (j <= n) {
          row.push_back(pm(n, i, j, -1));
        } else if (!is_c) {
          row.push_back(j == n + 1 ? unit(n, i - 1) : pm(n, i, 2 * n + 2 - j, +1));
        } else {
          row.push_back(j == 2 * n + 1 - i ? unit(n, i - 1, 2) : pm(n, i, 2 * n + 1 - j, +1));
        }
      }
      raw.rows.push_back(row);
    }
    return raw;
  }

  static RawSystem type_d(int n) {
    RawSystem raw;
    raw.ambient = n;
    for (int i = 1; i <= n; ++i) {
      raw.labels.push_back(i);
      std::vector<std::vector<Rational>> row;
      if (i < n) {
        raw.expected_exponents.push_back(2 * n - 2 * i - 1);
        for (int j = i + 1; j <= 2 * n - 1 - i; ++j) {
          row.push_back(j <= n ? pm(n, i, j, -1) : pm(n, i, 2 * n - j, +1));
        }
      } else {
        raw.expected_exponents.push_back(n - 1);
        for (int j = n + 1; j <= 2 * n - 1; ++j) row.push_back(pm(n, 2 * n - j, n, +1));
      }
      raw.rows.push_back(row);
    }
    return raw;
  }

  static RawSystem type_g2() {
    RawSystem raw;
    raw.ambient = 3;
    raw.relations.push_back({1, 1, 1});
    raw.labels = {1, 2};
    raw.expected_exponents = {5, 1};
    auto v = [](int a, int b, int c) { return std::vector<Rational>{a, b, c}; };
    raw.rows.push_back({v(1, -1, 0), v(-1, 0, 1), v(0, -1, 1), v(1, -2, 1), v(-1, -1, 2)});
    raw.rows.push_back({v(-2, 1, 1)});
    return raw;
  }

  static RawSystem type_f4() {
    RawSystem raw;
    raw.ambient = 4;
    raw.labels = {1, 2, 3, 4};
    raw.expected_exponents = {1, 11, 7, 5};
    auto h = [](int a, int b, int c, int d) {
      return std::vector<Rational>{Rational(a, 2), Rational(b, 2), Rational(c, 2), Rational(d, 2)};
    };
    auto v = [](int a, int b, int c, int d) { return std::vector<Rational>{a, b, c, d}; };
    raw.rows.push_back({h(1, -1, -1, -1)});
    raw.rows.push_back({v(0, 1, -1, 0), v(0, 1, 0, -1), v(0, 1, 0, 0), v(0, 1, 0, 1), v(0, 1, 1, 0),
                        h(1, 1, 1, -1), h(1, 1, 1, 1), v(1, 0, 0, 0), v(1, 0, 0, 1), v(1, 0, 1, 0),
                        v(1, 1, 0, 0)});
    raw.rows.push_back({v(0, 0, 1, -1), v(0, 0, 1, 0), v(0, 0, 1, 1), h(1, -1, 1, 1), v(1, -1, 0, 0),
                        v(1, 0, -1, 0), v(1, 0, 0, -1)});
    raw.rows.push_back({v(0, 0, 0, 1), h(1, -1, -1, 1), h(1, -1, 1, -1), h(1, 1, -1, -1), h(1, 1, -1, 1)});
    return raw;
  }

  static RawSystem type_e8() {
    RawSystem raw;
    raw.ambient = 8;
    raw.labels = {1, 2, 3, 4, 5, 6, 7, 8};
    raw.expected_exponents = {19, 29, 23, 13, 11, 7, 1, 17};
    for (const auto& codes : data::e8_root_codes()) {
      std::vector<std::vector<Rational>> row;
      for (auto code : codes) row.push_back(decode_e8_root(code));
      raw.rows.push_back(row);
    }
    return raw;
  }

  // E7 and E6 keep the E8 rows whose labels survive and, inside each row,
  // the E8 roots with zero coefficient on every dropped simple root. The
  // survivors must form an initial segment of the row whose length is the
  // expected exponent.
  static RawSystem type_e_sub(int rank) {
    const RootSystemPtr e8 = RootSystem::build(LieType{Family::E, 8});
    RawSystem raw;
    raw.ambient = 8;
    std::vector<int> dropped;
    if (rank == 7) {
      raw.relations.push_back({1, 1, 0, 0, 0, 0, 0, 0});
      raw.labels = {1, 3, 4, 5, 6, 7, 8};
      raw.expected_exponents = {9, 17, 13, 11, 7, 1, 5};
      dropped = {2};
    } else {
      raw.relations.push_back({1, 1, 0, 0, 0, 0, 0, 0});
      raw.relations.push_back({Rational(1, 2), Rational(-1, 2), 1, 0, 0, 0, 0, 0});
      raw.labels = {1, 4, 5, 6, 7, 8};
      raw.expected_exponents = {5, 11, 8, 7, 1, 4};
      dropped = {2, 3};
    }
    for (int label : raw.labels) {
      const int pos = e8->position(label);
      std::vector<std::vector<Rational>> row;
      bool ended = false;
      for (int idx = e8->row_begin(pos); idx < e8->row_begin(pos) + e8->exponents()[pos]; ++idx) {
        const Root& r = e8->roots()[static_cast<std::size_t>(idx)];
        bool keep = true;
        for (int d : dropped) {
          if (r.simple_coeffs[static_cast<std::size_t>(e8->position(d))] != 0) keep = false;
        }
        if (keep && ended) {
          throw std::logic_error("E" + std::to_string(rank) + " row " + std::to_string(label) +
                                 " is not an initial segment of the E8 row");
        }
        if (keep) {
          row.push_back(r.coeffs);
        } else {
          ended = true;
        }
      }
      raw.rows.push_back(row);
    }
    return raw;
  }

  static RootSystemPtr assemble(LieType t, RawSystem raw) {
    std::shared_ptr<RootSystem> rs(new RootSystem());
    rs->type_ = t;
    rs->quotient_ = QuotientSpec::make(raw.ambient, raw.relations);
    rs->labels_ = raw.labels;
    int global = 0;
    for (std::size_t p = 0; p < raw.rows.size(); ++p) {
      rs->row_begin_.push_back(global);
      rs->exponents_.push_back(static_cast<int>(raw.rows[p].size()));
      if (rs->exponents_.back() != raw.expected_exponents[p]) {
        throw std::logic_error(t.name() + ": row " + std::to_string(raw.labels[p]) + " has " +
                               std::to_string(raw.rows[p].size()) + " roots, expected exponent " +
                               std::to_string(raw.expected_exponents[p]));
      }
      for (std::size_t k = 0; k < raw.rows[p].size(); ++k) {
        Root r;
        r.index = RootIndex{raw.labels[p], raw.labels[p] + static_cast<int>(k) + 1};
        r.row = static_cast<int>(p);
        r.form = rs->linear_form(raw.rows[p][k]);
        r.coeffs = r.form.linear_coefficients();
        rs->roots_.push_back(std::move(r));
        ++global;
      }
    }
    rs->finish();
    return rs;
  }
};

RootSystemPtr RootSystem::build(LieType t) {
  t = LieType::make(t.family, t.rank);
  switch (t.family) {
    case Family::A:
      return RootSystemFactory::assemble(t, RootSystemFactory::type_a(t.rank));
    case Family::B:
      return RootSystemFactory::assemble(t, RootSystemFactory::type_bc(t.rank, false));
    case Family::C:
      return RootSystemFactory::assemble(t, RootSystemFactory::type_bc(t.rank, true));
    case Family::D:
      return RootSystemFactory::assemble(t, RootSystemFactory::type_d(t.rank));
    case Family::G:
      return RootSystemFactory::assemble(t, RootSystemFactory::type_g2());
    case Family::F:
      return RootSystemFactory::assemble(t, RootSystemFactory::type_f4());
    case Family::E:
      if (t.rank == 8) return RootSystemFactory::assemble(t, RootSystemFactory::type_e8());
      return RootSystemFactory::assemble(t, RootSystemFactory::type_e_sub(t.rank));
  }
  throw std::invalid_argument("unsupported Lie type");
}

Polynomial RootSystem::linear_form(const std::vector<Rational>& coeffs) const {
  return Polynomial::linear(quotient_, coeffs);
}

void RootSystem::finish() {
  const int n = rank();
  const int N = ambient_dim();
  const std::string tag = type_.name();
  auto fail = [&](const std::string& why) { throw std::logic_error(tag + ": " + why); };

  // Expand every root in simple roots: solve S c = r column by column.
  RatMatrix aug(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(n) + roots_.size()));
  for (int p = 0; p < n; ++p) {
    const auto& s = roots_[row_begin_[p]].coeffs;
    for (int k = 0; k < N; ++k) aug[k][p] = s[k];
  }
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    for (int k = 0; k < N; ++k) aug[k][n + r] = roots_[r].coeffs[k];
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != static_cast<std::size_t>(n - 1)) {
    fail("simple roots are linearly dependent");
  }
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    for (std::size_t k = static_cast<std::size_t>(n); k < aug.size(); ++k) {
      if (aug[k][n + r] != 0) fail("a root is outside the span of the simple roots");
    }
    Root& root = roots_[r];
    root.simple_coeffs.clear();
    root.height = 0;
    for (int p = 0; p < n; ++p) {
      const Rational& c = aug[p][n + r];
      if (c.get_den() != 1 || c < 0) fail("a root is not a nonnegative integer combination of simple roots");
      root.simple_coeffs.push_back(c.get_num());
      root.height += static_cast<int>(c.get_num().get_si());
    }
    if (root.height != root.index.j - root.index.i) {
      fail("height of alpha_{" + std::to_string(root.index.i) + "," + std::to_string(root.index.j) +
           "} is " + std::to_string(root.height));
    }
  }
  height_ = 0;
  for (const auto& r : roots_) height_ = std::max(height_, r.height);

  // Distinctness.
  std::map<std::vector<Rational>, int> seen;
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    if (!seen.emplace(roots_[r].coeffs, static_cast<int>(r)).second) fail("duplicate root in table");
  }

  // Coweights: tangent vectors dual to the simple roots.
  RatMatrix sys;
  for (int p = 0; p < n; ++p) sys.push_back(roots_[row_begin_[p]].coeffs);
  for (const auto& rel : quotient_->relations()) sys.push_back(rel);
  auto inv = inverse(sys);
  if (!inv) fail("simple roots and relations do not span the dual space");
  coweights_.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(N)));
  for (int p = 0; p < n; ++p) {
    for (int k = 0; k < N; ++k) coweights_[p][k] = (*inv)[k][p];
  }

  // Covering relation: b covers a iff b - a is a simple root.
  std::map<std::vector<Rational>, int> simple_pos;
  for (int p = 0; p < n; ++p) simple_pos.emplace(roots_[row_begin_[p]].coeffs, p);
  lower_covers_.assign(roots_.size(), {});
  covers_.clear();
  std::vector<Rational> diff(static_cast<std::size_t>(N));
  for (std::size_t b = 0; b < roots_.size(); ++b) {
    for (std::size_t a = 0; a < roots_.size(); ++a) {
      if (roots_[b].height != roots_[a].height + 1) continue;
      for (int k = 0; k < N; ++k) diff[k] = roots_[b].coeffs[k] - roots_[a].coeffs[k];
      if (simple_pos.count(diff)) {
        covers_.emplace_back(static_cast<int>(a), static_cast<int>(b));
        lower_covers_[b].push_back(static_cast<int>(a));
      }
    }
  }
  std::sort(covers_.begin(), covers_.end());
  for (int p = 0; p < n; ++p) {
    for (int k = 1; k < exponents_[p]; ++k) {
      int b = row_begin_[p] + k;
      const auto& lc = lower_covers_[b];
      if (std::find(lc.begin(), lc.end(), b - 1) == lc.end()) fail("consecutive roots of a row are not a cover");
    }
  }
}

int RootSystem::position(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw std::out_of_range(name() + ": unknown row label " + std::to_string(label));
  }
  return static_cast<int>(it - labels_.begin());
}

std::optional<int> RootSystem::find(RootIndex r) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), r.i);
  if (it == labels_.end() || *it != r.i) return std::nullopt;
  const int p = static_cast<int>(it - labels_.begin());
  const int k = r.j - r.i - 1;
  if (k < 0 || k >= exponents_[p]) return std::nullopt;
  return row_begin_[p] + k;
}

int RootSystem::index_of(RootIndex r) const {
  auto idx = find(r);
  if (!idx) {
    throw std::out_of_range(name() + ": unknown root index (" + std::to_string(r.i) + "," + std::to_string(r.j) + ")");
  }
  return *idx;
}

std::vector<int> RootSystem::lambda_set(int m) const {
  if (m < 0 || m > height_) {
    throw std::out_of_range(name() + ": level " + std::to_string(m) + " outside [0," + std::to_string(height_) + "]");
  }
  std::vector<int> out;
  for (int p = 0; p < rank(); ++p) {
    if (exponents_[p] >= m) out.push_back(labels_[p]);
  }
  return out;
}

int RootSystem::height_of(RootIndex r) const { return root(r).height; }

std::vector<std::pair<int, Polynomial>> RootSystem::i_slice(int m) const {
  if (m < 1 || m > height_) {
    throw std::out_of_range(name() + ": level " + std::to_string(m) + " outside [1," + std::to_string(height_) + "]");
  }
  std::vector<std::pair<int, Polynomial>> out;
  for (int i : lambda_set(m)) out.emplace_back(i, root({i, i + m}).form);
  return out;
}

}  // namespace idealarr
