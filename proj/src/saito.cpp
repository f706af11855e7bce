#include "idealarr/saito.hpp"

#include "idealarr/parallel.hpp"
#include "idealarr/polymatrix.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

namespace idealarr {

std::string to_string(SaitoMode m) { return m == SaitoMode::Exact ? "exact" : "randomized"; }
std::string to_string(MembershipMode m) { return m == MembershipMode::Exact ? "exact" : "pointwise"; }

SaitoMode parse_saito_mode(const std::string& text) {
  if (text == "exact") return SaitoMode::Exact;
  if (text == "random" || text == "randomized") return SaitoMode::Randomized;
  throw std::invalid_argument("unknown mode '" + text + "' (expected exact or random)");
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Integers in [-2^20, 2^20]; large enough that a nonzero polynomial of
// degree <= 120 vanishes at a random point with probability below 1e-4.
std::function<Rational()> drawer(std::mt19937_64& rng) {
  return [&rng] {
    std::uniform_int_distribution<long> dist(-(1L << 20), 1L << 20);
    return Rational(dist(rng));
  };
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  }
  return s;
}

}  // namespace

struct Verifier::Cache {
  std::size_t slots_per_root = 0;
  std::vector<int> slot_base;  // by position
  std::mutex mu;
  std::vector<signed char> exact;  // -1 unknown, 0 no, 1 yes
  // Pointwise data: per root, the basis evaluated at points of its hyperplane.
  std::vector<std::once_flag> once;
  std::vector<std::vector<PointTable>> tables;
};

Verifier::Verifier(std::shared_ptr<const UniformBasis> basis, VerifyOptions opts)
    : basis_(std::move(basis)), opts_(opts), cache_(std::make_unique<Cache>()) {
  const RootSystem& rs = *basis_->system();
  for (int p = 0; p < rs.rank(); ++p) {
    cache_->slot_base.push_back(static_cast<int>(cache_->slots_per_root));
    cache_->slots_per_root += static_cast<std::size_t>(rs.exponents()[p]) + 1;
  }
  cache_->exact.assign(cache_->slots_per_root * static_cast<std::size_t>(rs.root_count()), -1);
  cache_->once = std::vector<std::once_flag>(static_cast<std::size_t>(rs.root_count()));
  cache_->tables.resize(static_cast<std::size_t>(rs.root_count()));
}

Verifier::~Verifier() = default;

bool Verifier::member(int pos, int k, int root_index, MembershipMode& mode) const {
  const RootSystem& rs = *basis_->system();
  const RootIndex entry{rs.label(pos), rs.label(pos) + k};
  const Root& alpha = rs.roots()[static_cast<std::size_t>(root_index)];
  if (basis_->has(entry)) {
    const std::size_t slot = static_cast<std::size_t>(root_index) * cache_->slots_per_root +
                             static_cast<std::size_t>(cache_->slot_base[pos] + k);
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      if (cache_->exact[slot] >= 0) return cache_->exact[slot] == 1;
    }
    const bool ok = tangent_to_hyperplane(basis_->at(entry), rs, root_index);
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->exact[slot] = ok ? 1 : 0;
    return ok;
  }
  if (!basis_->plan()) throw std::logic_error("basis entry missing and no recursion plan to evaluate it");
  mode = MembershipMode::Pointwise;
  std::call_once(cache_->once[root_index], [&] {
    std::mt19937_64 rng(splitmix(opts_.seed ^ (0x51ed270b27ULL * (static_cast<std::uint64_t>(root_index) + 1))));
    const QuotientPtr hq = hyperplane_quotient(rs, root_index);
    std::vector<PointTable> tables;
    for (int t = 0; t < opts_.membership_points; ++t) {
      tables.push_back(basis_->evaluate(point_on_quotient(*hq, drawer(rng))));
    }
    cache_->tables[root_index] = std::move(tables);
  });
  for (const PointTable& table : cache_->tables[root_index]) {
    if (dot(table[pos][k], alpha.coeffs) != 0) return false;
  }
  return true;
}

VerificationReport Verifier::verify(const HessenbergFunction& h) const {
  const auto start = std::chrono::steady_clock::now();
  const RootSystem& rs = *basis_->system();
  const QuotientPtr& q = rs.quotient();
  const LowerIdeal I = ideal_from_hessenberg(rs, h);
  const int n = rs.rank();

  VerificationReport rep;
  rep.h = h;
  rep.key = h_key(h);
  rep.ideal_size = I.size();
  rep.saito_mode = opts_.mode;

  std::vector<RootIndex> entries;
  for (int p = 0; p < n; ++p) entries.push_back({rs.label(p), h.values[p]});
  if (opts_.mode == SaitoMode::Exact) {
    for (const auto& e : entries) {
      if (!basis_->has(e)) {
        throw std::invalid_argument("exact mode needs psi_{" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                    "}, which is above the symbolic degree cap");
      }
    }
  }

  // (a) membership
  rep.membership_ok = true;
  rep.membership_mode = MembershipMode::Exact;
  for (int p = 0; p < n && rep.membership_ok; ++p) {
    const int k = h.values[p] - rs.label(p);
    for (int idx : I.members) {
      if (!member(p, k, idx, rep.membership_mode)) {
        rep.membership_ok = false;
        rep.failure = "psi_{" + std::to_string(entries[p].i) + "," + std::to_string(entries[p].j) +
                      "} not tangent to the hyperplane of alpha_{" + std::to_string(rs.roots()[idx].index.i) + "," +
                      std::to_string(rs.roots()[idx].index.j) + "}";
        break;
      }
    }
  }

  // (b) degree sum
  rep.degree_sum = 0;
  bool homogeneous = true;
  for (int p = 0; p < n; ++p) {
    int d = h.values[p] - rs.label(p);
    if (basis_->has(entries[p])) {
      const Derivation& psi = basis_->at(entries[p]);
      if (!psi.is_homogeneous() || psi.is_zero()) {
        homogeneous = false;
      } else {
        d = psi.degree();
      }
    }
    rep.degree_sum += d;
  }
  rep.degree_sum_ok = homogeneous && rep.degree_sum == static_cast<int>(I.size());
  if (!rep.degree_sum_ok && rep.failure.empty()) {
    rep.failure = homogeneous ? "degree sum " + std::to_string(rep.degree_sum) + " != |I| = " + std::to_string(I.size())
                              : "a basis derivation is zero or not homogeneous";
  }

  // (c) Saito determinant, against the simple roots as coordinates on t.
  std::vector<const std::vector<Rational>*> simple;
  for (int p = 0; p < n; ++p) simple.push_back(&rs.roots()[rs.row_begin(p)].coeffs);
  if (opts_.mode == SaitoMode::Exact) {
    PolyMatrix M(q, n, n);
    for (int i = 0; i < n; ++i) {
      const Derivation& psi = basis_->at(entries[i]);
      for (int l = 0; l < n; ++l) M(i, l) = psi.apply(*simple[l]);
    }
    const Polynomial det = determinant(M);
    std::vector<Polynomial> forms;
    for (int idx : I.members) forms.push_back(rs.roots()[idx].form);
    const Polynomial prod = product(q, forms);
    auto c = det.is_zero() ? std::nullopt : proportionality(det, prod);
    rep.saito_ok = c.has_value() && *c != 0;
    if (rep.saito_ok) rep.constant = *c;
  } else {
    std::mt19937_64 rng(splitmix(opts_.seed ^ fnv1a(rs.name() + ":" + rep.key)));
    std::optional<Rational> shared;
    rep.saito_ok = true;
    int attempts = 0;
    for (int t = 0; t < opts_.saito_points && rep.saito_ok;) {
      if (++attempts > 20 * opts_.saito_points) throw std::runtime_error("could not find points off the arrangement");
      const auto pt = point_on_quotient(*q, drawer(rng));
      Rational prod = 1;
      for (int idx : I.members) prod *= dot(rs.roots()[idx].coeffs, pt);
      if (prod == 0) continue;
      ++t;
      RatMatrix M(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      std::vector<std::vector<Rational>> vals;
      if (basis_->plan()) {
        const PointTable table = basis_->evaluate(pt);
        for (int p = 0; p < n; ++p) vals.push_back(table[p][h.values[p] - rs.label(p)]);
      } else {
        for (const auto& e : entries) vals.push_back(basis_->at(e).evaluate(pt));
      }
      for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) M[i][l] = dot(vals[i], *simple[l]);
      }
      const Rational c = determinant(M) / prod;
      if (c == 0 || (shared && *shared != c)) {
        rep.saito_ok = false;
      } else {
        shared = c;
      }
    }
    if (rep.saito_ok) rep.constant = shared;
  }
  if (!rep.saito_ok && rep.failure.empty()) {
    rep.failure = opts_.mode == SaitoMode::Exact ? "det M is not a nonzero multiple of the product of I"
                                                 : "det M / product of I is not one nonzero constant at all points";
  }
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

VerificationReport verify_ideal(const UniformBasis& psi, const HessenbergFunction& h, SaitoMode mode,
                                std::uint64_t seed) {
  auto shared = std::shared_ptr<const UniformBasis>(&psi, [](const UniformBasis*) {});
  VerifyOptions opts;
  opts.mode = mode;
  opts.seed = seed;
  return Verifier(shared, opts).verify(h);
}

std::vector<HessenbergFunction> select_ideals(const RootSystem& rs, std::uint64_t seed,
                                              std::optional<std::size_t> sample,
                                              const std::vector<HessenbergFunction>& extra) {
  std::vector<HessenbergFunction> hs;
  for (const auto& I : enumerate_lower_ideals(rs)) hs.push_back(hessenberg_from_ideal(rs, I));
  if (sample && *sample < hs.size()) {
    std::vector<HessenbergFunction> picked;
    std::mt19937_64 rng(splitmix(seed));
    std::sample(hs.begin(), hs.end(), std::back_inserter(picked), *sample, rng);
    hs = std::move(picked);
  }
  hs.insert(hs.end(), extra.begin(), extra.end());
  std::sort(hs.begin(), hs.end(), [](const auto& a, const auto& b) { return a.values < b.values; });
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

std::vector<VerificationReport> verify_type(std::shared_ptr<const UniformBasis> psi, const VerifyOptions& opts,
                                            std::optional<std::size_t> sample,
                                            const std::vector<HessenbergFunction>& extra) {
  const auto hs = select_ideals(*psi->system(), opts.seed, sample, extra);
  Verifier verifier(std::move(psi), opts);
  std::vector<VerificationReport> out(hs.size());
  parallel_for(hs.size(), [&](std::size_t i) { out[i] = verifier.verify(hs[i]); });
  return out;
}

std::vector<HessenbergFunction> chain_ideals(const RootSystem& rs) {
  std::vector<HessenbergFunction> out;
  for (int m = 0; m <= rs.height(); ++m) {
    const LowerIdeal Im = height_ideal(rs, m);
    out.push_back(hessenberg_from_ideal(rs, Im));
    if (m == rs.height()) break;
    for (int j : rs.lambda_set(m + 1)) {
      std::vector<int> members = Im.members;
      members.push_back(rs.index_of({j, j + m + 1}));
      out.push_back(hessenberg_from_ideal(rs, ideal_from_roots(rs, members)));
    }
  }
  return out;
}

}  // namespace idealarr
