// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Criteria that cannot be met are reported as failures
// together with what was observed.

#include "idealarr/bases.hpp"
#include "idealarr/cohomology.hpp"
#include "idealarr/ideals.hpp"
#include "idealarr/matsolver.hpp"
#include "idealarr/saito.hpp"

#include "d4_fixture.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace idealarr;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failed = 0;

void report(int number, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("error: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!out.pass) ++g_failed;
  std::printf("criterion %2d: %s  %s  [%.1fs]\n", number, out.pass ? "PASS" : "FAIL", out.detail.c_str(), secs);
  std::fflush(stdout);
}

std::shared_ptr<const UniformBasis> shared_basis(const RootSystemPtr& rs, int cap) {
  return std::make_shared<const UniformBasis>(default_basis(rs, cap));
}

std::size_t count_ok(const std::vector<VerificationReport>& reports) {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.ok();
  return n;
}

const std::vector<const char*> kExactTypes = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4",
                                              "C2", "C3", "C4", "D4", "D5", "G2", "F4"};

// Solver runs are shared between criteria 3 and 6.
std::map<std::string, SolverResult>& solver_cache() {
  static std::map<std::string, SolverResult> cache;
  return cache;
}

const SolverResult& solved(const std::string& tag) {
  auto& cache = solver_cache();
  auto it = cache.find(tag);
  if (it != cache.end()) return it->second;
  auto rs = RootSystem::build(tag);
  const MatrixFamily M = paper_matrices(*rs);
  SolverResult r;
  if (rs->type() == LieType{Family::E, 8}) {
    // Entries reach degree 29 in 8 variables; C_m is read off pointwise.
    r = solve_chain_pointwise(build_from_matrices(rs, M, 0), M, 7);
  } else {
    r = solve_chain(rs, M.P[0], &M);
  }
  return cache.emplace(tag, std::move(r)).first->second;
}

// ---- 1 ----
Outcome exhaustive_exact() {
  std::size_t total = 0, bad = 0;
  std::string where;
  for (const char* tag : kExactTypes) {
    auto rs = RootSystem::build(tag);
    const auto reports = verify_type(shared_basis(rs, kNoDegreeCap), VerifyOptions{SaitoMode::Exact, 0});
    total += reports.size();
    const std::size_t fails = reports.size() - count_ok(reports);
    bad += fails;
    if (fails) where += std::string(" ") + tag;
  }
  std::ostringstream os;
  os << total - bad << "/" << total << " ideals certified exactly over " << kExactTypes.size() << " types";
  if (bad) os << "; failures in" << where;
  return {bad == 0, os.str()};
}

// ---- 2 ----
Outcome d4_fixtures() {
  auto d4 = RootSystem::build("D4");
  const UniformBasis cf = closed_form(d4);
  int same = 0, total = 0;
  for (const auto& f : fixtures::kD4) {
    ++total;
    same += cf.at({f.i, f.j}) == fixtures::fixture_derivation(*d4, f);
  }
  std::ostringstream os;
  os << same << "/" << total << " listed D4 derivations equal to the closed form";
  return {same == total && total == 16, os.str()};
}

// ---- 3 ----
Outcome solver_equivalence() {
  std::vector<const char*> tags = kExactTypes;
  tags.push_back("E6");
  int levels = 0, bad = 0;
  std::string where;
  for (const char* tag : tags) {
    for (const auto& L : solved(tag).levels) {
      if (!L.equivalent_to_reference) continue;
      ++levels;
      if (!*L.equivalent_to_reference) {
        ++bad;
        where += " " + std::string(tag) + "@" + std::to_string(L.m);
      }
    }
  }
  std::ostringstream os;
  os << levels - bad << "/" << levels << " levels equivalent over " << tags.size() << " types";
  if (bad) os << "; non-equivalent:" << where;
  return {bad == 0, os.str()};
}

// ---- 4 ----
Outcome e_sampled() {
  struct Campaign {
    const char* tag;
    std::optional<std::size_t> sample;
    bool chain;
  };
  const Campaign campaigns[] = {{"E6", std::nullopt, false}, {"E7", 200, true}, {"E8", 50, true}};
  std::ostringstream os;
  bool ok = true;
  for (const auto& c : campaigns) {
    auto rs = RootSystem::build(c.tag);
    const auto extra = c.chain ? chain_ideals(*rs) : std::vector<HessenbergFunction>{};
    const auto reports = verify_type(shared_basis(rs, default_degree_cap(rs->type())),
                                     VerifyOptions{SaitoMode::Randomized, 7}, c.sample, extra);
    std::size_t pointwise = 0, member_fail = 0;
    for (const auto& r : reports) {
      pointwise += r.membership_mode == MembershipMode::Pointwise;
      member_fail += !r.membership_ok;
    }
    const std::size_t pass = count_ok(reports);
    ok = ok && pass == reports.size();
    os << c.tag << " " << pass << "/" << reports.size();
    if (pointwise) os << " (" << pointwise << " with pointwise membership)";
    if (member_fail) os << " membership failures " << member_fail;
    for (const auto& r : reports) {
      if (!r.ok()) os << " failed h=(" << r.key << ": " << r.failure << ")";
    }
    os << "; ";
  }
  return {ok, os.str()};
}

// ---- 5 ----
Outcome condition_lists() {
  std::size_t checked = 0, disagree = 0;
  for (const char* tag : {"D4", "D5", "F4"}) {
    auto rs = RootSystem::build(tag);
    for_each_bounded_h(*rs, [&](const HessenbergFunction& h) {
      bool closed = true;
      try {
        ideal_from_hessenberg(*rs, h);
      } catch (const std::invalid_argument&) {
        closed = false;
      }
      ++checked;
      disagree += validate_hessenberg_conditions(rs->type(), h) != closed;
    });
  }
  std::size_t enumerated = 0, random_checked = 0;
  for (const char* tag : {"E6", "E7", "E8"}) {
    auto rs = RootSystem::build(tag);
    for (const auto& I : enumerate_lower_ideals(*rs)) {
      ++enumerated;
      disagree += !validate_hessenberg_conditions(rs->type(), hessenberg_from_ideal(*rs, I));
    }
    // Random candidates inside the bounds exercise the rejecting side too.
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20000; ++t) {
      HessenbergFunction h;
      for (int p = 0; p < rs->rank(); ++p) {
        std::uniform_int_distribution<int> d(0, rs->exponents()[p]);
        h.values.push_back(rs->label(p) + d(rng));
      }
      bool closed = true;
      try {
        ideal_from_hessenberg(*rs, h);
      } catch (const std::invalid_argument&) {
        closed = false;
      }
      ++random_checked;
      disagree += validate_hessenberg_conditions(rs->type(), h) != closed;
    }
  }
  std::ostringstream os;
  os << checked << " bounded candidates (D4, D5, F4), " << enumerated << " enumerated E-type ideals, "
     << random_checked << " random E-type candidates; disagreements " << disagree;
  return {disagree == 0, os.str()};
}

// ---- 6 ----
Outcome mat_propositions() {
  std::vector<const char*> tags = kExactTypes;
  for (const char* t : {"D6", "E6", "E7", "E8"}) tags.push_back(t);
  int levels = 0, bad_deg = 0, bad_rank = 0;
  for (const char* tag : tags) {
    const SolverResult& r = solved(tag);
    for (const auto& L : r.levels) {
      if (L.lam_m1.empty() || L.m == 0) continue;
      ++levels;
      for (int d : L.b_degrees) bad_deg += d != L.m;
      bad_rank += L.rank != L.lam_m1.size();
    }
  }
  std::ostringstream os;
  os << levels << " levels over " << tags.size()
     << " types (E8 pointwise at 3 points per hyperplane); divisibility held at every level, deg b_nu != m: "
     << bad_deg << ", rank C_m != |Lambda_{m+1}|: " << bad_rank;
  return {bad_deg == 0 && bad_rank == 0, os.str()};
}

// ---- 7 ----
Outcome subsystem_identity() {
  auto e8 = RootSystem::build("E8");
  const MatrixFamily M = paper_matrices(*e8);
  const int cap = 8;
  const UniformBasis big = build_from_matrices(e8, M, 0);
  const auto big_sym = plan_symbolic(*big.plan(), cap);
  std::ostringstream os;
  bool ok = true;
  for (const auto& S : {std::vector<int>{1, 3, 4, 5, 6, 7, 8}, std::vector<int>{1, 4, 5, 6, 7, 8}}) {
    const UniformBasis small = restrict_basis(e8, S, M, 0);
    const RootSystem& sub = *small.system();
    const QuotientPtr& ring = sub.quotient();
    const auto small_sym = plan_symbolic(*small.plan(), cap);
    std::size_t exact = 0, exact_bad = 0, sampled = 0, sampled_bad = 0;
    for (int p = 0; p < e8->rank(); ++p) {
      for (int m = 0; m <= std::min(cap, e8->exponents()[p]); ++m) {
        for (int k : S) {
          const auto& alpha = e8->roots()[e8->row_begin(e8->position(k))].coeffs;
          const Polynomial lhs = small_sym[p][m]->apply(alpha);
          const Polynomial rhs = reduce_to(big_sym[p][m]->apply(alpha), ring);
          ++exact;
          exact_bad += lhs != rhs;
        }
      }
    }
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> dist(-(1L << 20), 1L << 20);
    for (int t = 0; t < 3; ++t) {
      const auto pt = point_on_quotient(*ring, [&] { return Rational(dist(rng)); });
      const PointTable a = plan_evaluate(*small.plan(), pt);
      const PointTable b = plan_evaluate(*big.plan(), pt);
      for (int p = 0; p < e8->rank(); ++p) {
        for (int m = cap + 1; m <= e8->exponents()[p]; ++m) {
          for (int k : S) {
            const auto& alpha = e8->roots()[e8->row_begin(e8->position(k))].coeffs;
            Rational va = 0, vb = 0;
            for (std::size_t x = 0; x < alpha.size(); ++x) {
              va += a[p][m][x] * alpha[x];
              vb += b[p][m][x] * alpha[x];
            }
            ++sampled;
            sampled_bad += va != vb;
          }
        }
      }
    }
    ok = ok && exact_bad == 0 && sampled_bad == 0;
    os << "E8->" << sub.name() << ": " << exact - exact_bad << "/" << exact << " exact (degree <= " << cap << "), "
       << sampled - sampled_bad << "/" << sampled << " pointwise above; ";
  }
  return {ok, os.str()};
}

// ---- 8 ----
Outcome type_d_identities() {
  int xi_checks = 0, xi_bad = 0, tilde_checks = 0, tilde_bad = 0;
  for (const char* tag : {"D4", "D5", "D6"}) {
    auto rs = RootSystem::build(tag);
    const int n = rs->rank();
    const UniformBasis psi = closed_form(rs);
    const UniformBasis tilde = psi_tilde_D(rs);
    auto alpha = [&](int i, int j) { return rs->root({i, j}).form; };
    for (int i = 0; i <= n - 2; ++i) {
      const Rational s = (n - i) % 2 == 0 ? Rational(1, 2) : Rational(-1, 2);
      for (const UniformBasis* b : {&psi, &tilde}) {
        const Derivation rhs = Rational(-1, 2) * (alpha(i + 1, n) * b->at({i + 1, n - 1})) +
                               s * (alpha(n, 2 * n - 1 - i) * b->at({n, 2 * n - 2 - i}));
        ++xi_checks;
        xi_bad += !(xi_D(*rs, i) == rhs);
      }
    }
    const LowerIdeal all = height_ideal(*rs, rs->height());
    for (int p = 0; p < n; ++p) {
      const int i = rs->label(p);
      for (int j = i; j <= i + rs->exponents()[p]; ++j) {
        ++tilde_checks;
        tilde_bad += !in_log_module(tilde.at({i, j}) - psi.at({i, j}), *rs, all);
      }
    }
  }
  std::ostringstream os;
  os << "xi identity " << xi_checks - xi_bad << "/" << xi_checks << ", psi~ - psi in D(A_Phi+) "
     << tilde_checks - tilde_bad << "/" << tilde_checks << " (n = 4, 5, 6)";
  return {xi_bad == 0 && tilde_bad == 0, os.str()};
}

// ---- 9 ----
Outcome cohomology_checks() {
  int g_total = 0, g_bad = 0;
  for (const char* tag : {"D4", "D5", "D6"}) {
    auto rs = RootSystem::build(tag);
    const UniformBasis psi = closed_form(rs);
    for (int p = 0; p < rs->rank(); ++p) {
      const int i = rs->label(p);
      for (int j = i; j <= i + rs->exponents()[p]; ++j) {
        ++g_total;
        g_bad += g_closed_form_D(*rs, i, j) != q_map(psi.at({i, j}));
      }
    }
  }

  int pet_total = 0, pet_prop = 0;
  std::string pet_misses;
  for (const char* tag : {"A2", "A3", "B2", "C2", "G2"}) {
    auto rs = RootSystem::build(tag);
    const HessenbergFunction h = hessenberg_from_ideal(*rs, height_ideal(*rs, 1));
    const Presentation pres = generators(closed_form(rs), h);
    for (int p = 0; p < rs->rank(); ++p) {
      ++pet_total;
      const Polynomial target = rs->simple_root(p) * fundamental_weight(*rs, p);
      if (proportionality(pres.generators[p], target)) {
        ++pet_prop;
      } else {
        pet_misses += " " + std::string(tag) + ":f" + std::to_string(rs->label(p));
      }
    }
  }

  int oracle_total = 0, oracle_bad = 0;
  for (const char* tag : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::build(tag);
    const UniformBasis psi = closed_form(rs);
    for (const auto& I : enumerate_lower_ideals(*rs)) {
      const Presentation pres = generators(psi, hessenberg_from_ideal(*rs, I));
      std::vector<Integer> expect = pres.poincare;
      expect.resize(9);
      ++oracle_total;
      oracle_bad += graded_rank_oracle(rs->quotient(), pres.generators, 8) != expect;
    }
  }

  std::ostringstream os;
  os << "(a) g = q(psi) " << g_total - g_bad << "/" << g_total << "; (b) Peterson generators proportional to "
     << "alpha_i varpi_i " << pet_prop << "/" << pet_total;
  if (!pet_misses.empty()) os << " (not proportional:" << pet_misses << ")";
  os << "; (c) oracle = Poincare " << oracle_total - oracle_bad << "/" << oracle_total;
  return {g_bad == 0 && pet_prop == pet_total && oracle_bad == 0, os.str()};
}

// ---- 10 ----
Outcome mutation_sensitivity() {
  std::ostringstream os;
  bool ok = true;
  for (const char* tag : {"G2", "F4"}) {
    auto rs = RootSystem::build(tag);
    const MatrixFamily M = paper_matrices(*rs);
    std::vector<HessenbergFunction> hs;
    for (const auto& I : enumerate_lower_ideals(*rs)) hs.push_back(hessenberg_from_ideal(*rs, I));
    int flips = 0, caught = 0, rejected = 0;
    std::string missed;
    for (std::size_t m = 0; m < M.P.size(); ++m) {
      for (std::size_t r = 0; r < M.P[m].size(); ++r) {
        for (std::size_t c = 0; c < M.P[m].size(); ++c) {
          ++flips;
          MatrixFamily mutated = M;
          mutated.P[m][r][c] += 1;
          bool detected = false;
          try {
            auto psi = std::make_shared<const UniformBasis>(build_from_matrices(rs, mutated));
            const Verifier verifier(psi, VerifyOptions{SaitoMode::Exact, 0});
            for (const auto& h : hs) {
              if (!verifier.verify(h).ok()) {
                detected = true;
                break;
              }
            }
          } catch (const std::exception&) {
            detected = true;  // the mutated family is rejected outright
            ++rejected;
          }
          if (detected) {
            ++caught;
          } else {
            missed += " P" + std::to_string(m) + "[" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "]";
          }
        }
      }
    }
    ok = ok && caught == flips;
    os << tag << " " << caught << "/" << flips << " flips detected (" << rejected << " rejected at construction)";
    if (!missed.empty()) os << " (undetected:" << missed << ")";
    os << "; ";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  report(1, exhaustive_exact);
  report(2, d4_fixtures);
  report(3, solver_equivalence);
  report(4, e_sampled);
  report(5, condition_lists);
  report(6, mat_propositions);
  report(7, subsystem_identity);
  report(8, type_d_identities);
  report(9, cohomology_checks);
  report(10, mutation_sensitivity);
  std::printf("%d of 10 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
