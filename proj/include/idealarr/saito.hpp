#pragma once

#include "idealarr/bases.hpp"
#include "idealarr/ideals.hpp"

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace idealarr {

enum class SaitoMode { Exact, Randomized };
// Exact: psi(alpha) reduced modulo alpha symbolically. Pointwise: psi(alpha)
// evaluated at random points of the hyperplane, used for entries above the
// basis' symbolic degree cap.
enum class MembershipMode { Exact, Pointwise };

std::string to_string(SaitoMode m);
std::string to_string(MembershipMode m);
SaitoMode parse_saito_mode(const std::string& text);  // "exact" | "random" | "randomized"

struct VerificationReport {
  HessenbergFunction h;
  std::string key;
  std::size_t ideal_size = 0;
  bool membership_ok = false;
  MembershipMode membership_mode = MembershipMode::Exact;
  bool degree_sum_ok = false;
  int degree_sum = 0;
  SaitoMode saito_mode = SaitoMode::Exact;
  bool saito_ok = false;
  std::optional<Rational> constant;
  std::chrono::duration<double> elapsed{0};
  std::string failure;  // first failed check, empty on success

  bool ok() const { return membership_ok && degree_sum_ok && saito_ok; }
};

struct VerifyOptions {
  SaitoMode mode = SaitoMode::Exact;
  std::uint64_t seed = 0;
  int saito_points = 5;
  int membership_points = 2;  // per root, pointwise mode only
};

// Shares membership caches and hyperplane point tables between ideals of
// one basis. Safe to call verify() from several threads.
class Verifier {
 public:
  Verifier(std::shared_ptr<const UniformBasis> basis, VerifyOptions opts);
  ~Verifier();

  // Throws std::invalid_argument for an invalid h, and for exact mode when
  // a needed entry is above the symbolic degree cap.
  VerificationReport verify(const HessenbergFunction& h) const;

  const UniformBasis& basis() const { return *basis_; }
  const VerifyOptions& options() const { return opts_; }

 private:
  struct Cache;
  bool member(int pos, int k, int root_index, MembershipMode& mode) const;

  std::shared_ptr<const UniformBasis> basis_;
  VerifyOptions opts_;
  std::unique_ptr<Cache> cache_;
};

VerificationReport verify_ideal(const UniformBasis& psi, const HessenbergFunction& h, SaitoMode mode,
                                std::uint64_t seed = 0);

// The ideal selection behind verify_type: every lower ideal, or a seeded
// sample of them, plus `extra`, sorted by h without duplicates.
std::vector<HessenbergFunction> select_ideals(const RootSystem& rs, std::uint64_t seed,
                                              std::optional<std::size_t> sample = std::nullopt,
                                              const std::vector<HessenbergFunction>& extra = {});

// Exhaustive over enumerate_lower_ideals when `sample` is empty, otherwise a
// seeded uniform sample without replacement. `extra` ideals are always
// included (duplicates removed). Reports are ordered by h.
std::vector<VerificationReport> verify_type(std::shared_ptr<const UniformBasis> psi, const VerifyOptions& opts,
                                            std::optional<std::size_t> sample = std::nullopt,
                                            const std::vector<HessenbergFunction>& extra = {});

// The ideals I_m and I_m + {alpha_{j,j+m+1}} for j in Lambda_{m+1}.
std::vector<HessenbergFunction> chain_ideals(const RootSystem& rs);

}  // namespace idealarr
