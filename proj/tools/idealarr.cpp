// Command-line front end: roots, ideals, basis, verify, solve-matrices and
// cohomology. Exit codes: 0 when every check passes, 1 when a check fails
// or a computation errors out, 2 for usage errors.

#include "idealarr/bases.hpp"
#include "idealarr/cohomology.hpp"
#include "idealarr/ideals.hpp"
#include "idealarr/json_io.hpp"
#include "idealarr/matsolver.hpp"
#include "idealarr/parallel.hpp"
#include "idealarr/rootsys.hpp"
#include "idealarr/saito.hpp"
#include "idealarr/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace idealarr;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Raised for problems with the request itself (bad type tag, malformed or
// invalid h). Everything else that escapes a verb is an internal failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootSystemPtr system_for(const std::string& tag) {
  try {
    return RootSystem::build(tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

HessenbergFunction checked_h(const RootSystem& rs, const std::string& text) {
  HessenbergFunction h;
  try {
    h = parse_h(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed --h list: ") + e.what());
  }
  if (static_cast<int>(h.values.size()) != rs.rank()) {
    throw UsageError("--h needs " + std::to_string(rs.rank()) + " values for " + rs.name());
  }
  try {
    ideal_from_hessenberg(rs, h);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--h " + text + ": " + e.what());
  }
  return h;
}

std::string echo(int argc, char** argv) {
  std::string out;
  for (int a = 1; a < argc; ++a) {
    if (a > 1) out += ' ';
    out += argv[a];
  }
  return out;
}

// ---- roots ----

int run_roots(const std::string& tag) {
  const auto rs = system_for(tag);
  std::cout << roots_json(*rs).dump() << '\n';
  return kPass;
}

// ---- ideals ----

int run_ideals(const std::string& tag, bool count, bool list) {
  const auto rs = system_for(tag);
  const auto ideals = enumerate_lower_ideals(*rs);
  if (count) std::cout << ideals.size() << '\n';
  if (list) {
    for (const auto& I : ideals) std::cout << to_json(hessenberg_from_ideal(*rs, I)).dump() << '\n';
  }
  return kPass;
}

// ---- basis ----

int run_basis(const std::string& tag, bool json, bool matrices, std::optional<int> cap) {
  const auto rs = system_for(tag);
  if (matrices) {
    const MatrixFamily M = paper_matrices(*rs);
    Json levels = Json::array();
    for (std::size_t m = 0; m < M.P.size(); ++m) {
      levels.push_back(Json{{"m", m}, {"lambda", rs->lambda_set(static_cast<int>(m))}, {"P", to_json(M.P[m])}});
    }
    std::cout << Json{{"type", rs->name()}, {"matrices", std::move(levels)}}.dump() << '\n';
    return kPass;
  }
  const UniformBasis psi = default_basis(rs, cap.value_or(default_degree_cap(rs->type())));
  if (json) {
    Json entries = Json::array();
    for (int p = 0; p < rs->rank(); ++p) {
      const int i = rs->label(p);
      for (int j = i; j <= i + rs->exponents()[p]; ++j) {
        Json e{{"i", i}, {"j", j}, {"degree", j - i}};
        e["derivation"] = psi.has({i, j}) ? to_json(psi.at({i, j})) : Json(nullptr);
        entries.push_back(std::move(e));
      }
    }
    std::cout << Json{{"type", rs->name()}, {"source", psi.source()}, {"entries", std::move(entries)}}.dump() << '\n';
    return kPass;
  }
  for (int p = 0; p < rs->rank(); ++p) {
    const int i = rs->label(p);
    for (int j = i; j <= i + rs->exponents()[p]; ++j) {
      std::cout << "psi[" << i << ',' << j << "] = ";
      if (psi.has({i, j})) {
        std::cout << psi.at({i, j}).to_string() << '\n';
      } else {
        std::cout << "(degree " << j - i << ", above the symbolic cap)\n";
      }
    }
  }
  return kPass;
}

// ---- verify ----

struct VerifyArgs {
  std::string tag;
  bool all = false;
  std::string h;
  std::string mode = "auto";
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  bool json = false;
  std::optional<int> cap;
};

int run_verify(const VerifyArgs& a, const std::string& command) {
  const auto rs = system_for(a.tag);
  SaitoMode mode;
  try {
    // Exact determinants of E-type bases are out of reach, so "auto" picks
    // the randomized check there.
    if (a.mode == "auto") {
      mode = rs->type().family == Family::E ? SaitoMode::Randomized : SaitoMode::Exact;
    } else {
      mode = parse_saito_mode(a.mode);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<HessenbergFunction> hs;
  std::string selection;
  if (!a.h.empty()) {
    hs.push_back(checked_h(*rs, a.h));
    selection = "single";
  } else if (a.sample) {
    hs = select_ideals(*rs, a.seed, a.sample, chain_ideals(*rs));
    selection = "sample+chain";
  } else {
    hs = select_ideals(*rs, a.seed);
    selection = "all";
  }

  auto psi = std::make_shared<const UniformBasis>(default_basis(rs, a.cap.value_or(default_degree_cap(rs->type()))));
  const Verifier verifier(psi, VerifyOptions{mode, a.seed});

  std::size_t passed = 0;
  Json failures = Json::array();
  const std::size_t batch = std::max<std::size_t>(16, 4 * static_cast<std::size_t>(thread_budget()));
  for (std::size_t start = 0; start < hs.size(); start += batch) {
    const std::size_t n = std::min(batch, hs.size() - start);
    std::vector<VerificationReport> out(n);
    parallel_for(n, [&](std::size_t k) {
      const HessenbergFunction& h = hs[start + k];
      try {
        out[k] = verifier.verify(h);
      } catch (const std::exception& e) {
        out[k] = VerificationReport{};
        out[k].h = h;
        out[k].key = h_key(h);
        out[k].saito_mode = mode;
        out[k].failure = std::string("error: ") + e.what();
      }
    });
    for (const auto& r : out) {
      if (r.ok()) {
        ++passed;
      } else {
        failures.push_back(Json{{"h", to_json(r.h)}, {"failure", r.failure}});
      }
      if (a.json) {
        std::cout << to_json(r).dump() << '\n';
      } else {
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.key << "  |I|=" << r.ideal_size
                  << "  membership=" << to_string(r.membership_mode) << "  saito=" << to_string(r.saito_mode);
        if (r.constant) std::cout << "  c=" << to_display_string(*r.constant);
        if (!r.failure.empty()) std::cout << "  (" << r.failure << ')';
        std::cout << '\n';
      }
    }
    std::cout.flush();
  }

  const bool ok = passed == hs.size();
  if (a.json) {
    Json manifest{{"tool", "idealarr"},
                  {"version", kVersion},
                  {"command", command},
                  {"seed", a.seed},
                  {"type", rs->name()},
                  {"mode", to_string(mode)},
                  {"selection", selection},
                  {"items", hs.size()},
                  {"passed", passed},
                  {"failed", hs.size() - passed},
                  {"failures", std::move(failures)},
                  {"ok", ok}};
    std::cout << Json{{"manifest", std::move(manifest)}}.dump() << '\n';
  } else {
    std::cout << rs->name() << ": " << passed << '/' << hs.size() << " passed\n";
  }
  return ok ? kPass : kFail;
}

// ---- solve-matrices ----

int run_solve(const std::string& tag, bool compare_flag, std::optional<bool> pointwise, std::uint64_t seed) {
  const auto rs = system_for(tag);
  const MatrixFamily paper = paper_matrices(*rs);
  // E8 entries are too large to expand, so there C_m is read off pointwise
  // on the stored basis.
  const bool use_points = pointwise.value_or(rs->type() == LieType{Family::E, 8});
  // The pointwise run is anchored on the stored layers, so it always compares.
  const bool compare = compare_flag || use_points;
  const SolverResult res = use_points
                               ? solve_chain_pointwise(build_from_matrices(rs, paper, 0), paper, seed)
                               : solve_chain(rs, paper.P.at(0), compare ? &paper : nullptr);
  bool ok = true;
  Json levels = Json::array();
  for (const SolverLevel& L : res.levels) {
    Json lv{{"m", L.m}, {"lambda", L.lam_m}, {"lambda_next", L.lam_m1}, {"P", to_json(L.P)}};
    if (L.m > 0 && L.m < rs->height()) {
      lv["rank"] = L.rank;
      lv["b_degrees"] = L.b_degrees;
    }
    if (compare && L.equivalent_to_reference) {
      lv["equivalent"] = *L.equivalent_to_reference;
      ok = ok && *L.equivalent_to_reference;
    }
    levels.push_back(std::move(lv));
  }
  Json out{{"type", rs->name()}, {"levels", std::move(levels)}};
  if (use_points) out["method"] = "pointwise";
  if (compare) out["all_equivalent"] = ok;
  std::cout << out.dump() << '\n';
  return ok ? kPass : kFail;
}

// ---- cohomology ----

int run_cohomology(const std::string& tag, const std::string& htext, bool poincare, bool json) {
  const auto rs = system_for(tag);
  const HessenbergFunction h = checked_h(*rs, htext);
  int need = 0;
  for (int p = 0; p < rs->rank(); ++p) need = std::max(need, h.values[p] - rs->label(p));
  const UniformBasis psi = default_basis(rs, std::max(need, 0));
  const Presentation pres = generators(psi, h);
  if (json) {
    Json gens = Json::array();
    for (int p = 0; p < rs->rank(); ++p) {
      const Polynomial& f = pres.generators[p];
      gens.push_back(Json{{"i", rs->label(p)}, {"j", h.values[p]}, {"degree", f.degree()}, {"f", to_json(f)}});
    }
    Json out{{"type", rs->name()}, {"h", to_json(h)}, {"generators", std::move(gens)}};
    if (poincare) {
      Json coeffs = Json::array();
      for (const auto& c : pres.poincare) {
        coeffs.push_back(c.fits_slong_p() ? Json(c.get_si()) : Json(c.get_str()));
      }
      out["poincare"] = std::move(coeffs);
    }
    std::cout << out.dump() << '\n';
    return kPass;
  }
  for (int p = 0; p < rs->rank(); ++p) {
    std::cout << "f[" << rs->label(p) << ',' << h.values[p] << "] = " << pres.generators[p].to_string() << '\n';
  }
  if (poincare) {
    std::cout << "poincare:";
    for (const auto& c : pres.poincare) std::cout << ' ' << c.get_str();
    std::cout << '\n';
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform bases for ideal arrangements of root systems"};
  // "-h" is taken by the Hessenberg function option.
  app.set_help_flag("--help", "print this help message and exit");
  app.set_version_flag("--version", std::string("idealarr ") + kVersion);
  app.require_subcommand(1);

  std::string tag;

  auto* roots = app.add_subcommand("roots", "positive roots and covering relation as JSON");
  roots->add_option("type", tag, "type tag such as D4")->required();

  bool count = false, list = false;
  auto* ideals = app.add_subcommand("ideals", "enumerate lower ideals");
  ideals->add_option("type", tag)->required();
  auto* count_flag = ideals->add_flag("--count", count, "print the number of lower ideals");
  auto* list_flag = ideals->add_flag("--list", list, "print each Hessenberg function as a JSON line");
  count_flag->excludes(list_flag);

  bool basis_json = false, basis_matrices = false;
  std::optional<int> cap;
  auto* basis = app.add_subcommand("basis", "print the uniform basis or its matrices");
  basis->add_option("type", tag)->required();
  auto* bj = basis->add_flag("--json", basis_json, "uniform basis as JSON");
  auto* bm = basis->add_flag("--matrices", basis_matrices, "the P_m matrices as JSON");
  bj->excludes(bm);
  basis->add_option("--degree-cap", cap, "largest degree materialized symbolically")->check(CLI::NonNegativeNumber);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "certify the uniform basis on lower ideals");
  verify->add_option("type", va.tag)->required();
  auto* v_all = verify->add_flag("--all-ideals", va.all, "every lower ideal");
  auto* v_h = verify->add_option("--h", va.h, "a single Hessenberg function, e.g. 3,5,4,7");
  auto* v_sample = verify->add_option("--sample", va.sample, "seeded sample size (chain ideals are added)")
                       ->check(CLI::PositiveNumber);
  v_all->excludes(v_h)->excludes(v_sample);
  v_h->excludes(v_sample);
  verify->add_option("--mode", va.mode, "auto, exact or random (auto: random for E types)")
      ->check(CLI::IsMember({"auto", "exact", "random", "randomized"}));
  verify->add_option("--seed", va.seed, "seed for ideal sampling and evaluation points");
  verify->add_flag("--json", va.json, "JSON lines per ideal and a final manifest");
  verify->add_option("--degree-cap", va.cap, "largest degree materialized symbolically")
      ->check(CLI::NonNegativeNumber);

  bool compare = false;
  auto* solve = app.add_subcommand("solve-matrices", "re-derive P_m by the multiple addition construction");
  solve->add_option("type", tag)->required();
  solve->add_flag("--compare,--compare-paper", compare, "compare every level with the stored matrices");
  std::optional<bool> pointwise;
  std::uint64_t solve_seed = 7;
  solve->add_flag("--pointwise,!--symbolic", pointwise, "read C_m off random points (default for E8)");
  solve->add_option("--seed", solve_seed, "seed for the pointwise evaluation points");

  std::string htext;
  bool poincare = false, coh_json = false;
  auto* coh = app.add_subcommand("cohomology", "generators of the cohomology presentation");
  coh->add_option("type", tag)->required();
  coh->add_option("--h", htext, "Hessenberg function, e.g. 2,3")->required();
  coh->add_flag("--poincare", poincare, "print the Poincare polynomial");
  coh->add_flag("--json", coh_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*roots) return run_roots(tag);
    if (*ideals) {
      if (!count && !list) throw UsageError("ideals needs --count or --list");
      return run_ideals(tag, count, list);
    }
    if (*basis) return run_basis(tag, basis_json, basis_matrices, cap);
    if (*verify) {
      if (!va.all && va.h.empty() && !va.sample) throw UsageError("verify needs --all-ideals, --h or --sample");
      return run_verify(va, echo(argc, argv));
    }
    if (*solve) return run_solve(tag, compare, pointwise, solve_seed);
    if (*coh) return run_cohomology(tag, htext, poincare, coh_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << '\n';
    return kFail;
  }
  return kUsage;
}
