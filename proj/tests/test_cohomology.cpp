#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealarr/cohomology.hpp"

#include <algorithm>

using namespace idealarr;

namespace {

Polynomial P(const RootSystem& rs, const std::string& s) { return parse_polynomial(rs.quotient(), s); }

HessenbergFunction shifted(const RootSystem& rs, int by) {
  HessenbergFunction h;
  for (int p = 0; p < rs.rank(); ++p) h.values.push_back(rs.label(p) + std::min(by, rs.exponents()[p]));
  return h;
}

// Rank of the Q-span of homogeneous polynomials of one degree.
std::size_t span_rank(const std::vector<Polynomial>& ps) {
  std::vector<Monomial> cols;
  for (const auto& p : ps) {
    for (const auto& t : p.terms()) {
      if (std::find(cols.begin(), cols.end(), t.first) == cols.end()) cols.push_back(t.first);
    }
  }
  RatMatrix m;
  for (const auto& p : ps) {
    std::vector<Rational> row(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) row[c] = p.coefficient(cols[c]);
    m.push_back(row);
  }
  return rank(m);
}

}  // namespace

TEST_CASE("q map") {
  auto d4 = RootSystem::build("D4");
  const UniformBasis psi = closed_form(d4);
  CHECK(q_map(psi.at({3, 4})) == P(*d4, "x1^2 + x2^2 + x3^2 + x4^2"));
  CHECK(g_closed_form_D(*d4, 3, 4) == P(*d4, "x1^2 + x2^2 + x3^2 + x4^2"));
  CHECK(g_closed_form_D(*d4, 4, 7) == P(*d4, "4*x1*x2*x3*x4"));
}

TEST_CASE("type D generators in closed form") {
  for (const char* tag : {"D4", "D5", "D6"}) {
    CAPTURE(tag);
    auto rs = RootSystem::build(tag);
    const UniformBasis psi = closed_form(rs);
    for (int p = 0; p < rs->rank(); ++p) {
      const int i = rs->label(p);
      for (int j = i; j <= i + rs->exponents()[p]; ++j) {
        CAPTURE(i);
        CAPTURE(j);
        CHECK(g_closed_form_D(*rs, i, j) == q_map(psi.at({i, j})));
      }
    }
    CHECK_THROWS_AS(g_closed_form_D(*rs, 1, 0), std::out_of_range);
  }
  CHECK_THROWS_AS(g_closed_form_D(*RootSystem::build("B4"), 1, 1), std::invalid_argument);
}

TEST_CASE("generator degrees") {
  for (const char* tag : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(tag);
    auto rs = RootSystem::build(tag);
    const UniformBasis psi = default_basis(rs);
    for (const auto& I : enumerate_lower_ideals(*rs)) {
      const HessenbergFunction h = hessenberg_from_ideal(*rs, I);
      const Presentation pres = generators(psi, h);
      for (int p = 0; p < rs->rank(); ++p) CHECK(pres.generators[p].degree() == h.values[p] - rs->label(p) + 1);
    }
  }
}

TEST_CASE("fundamental weights") {
  for (const char* tag : {"A2", "B2", "C2", "G2"}) {
    CAPTURE(tag);
    auto rs = RootSystem::build(tag);
    for (int p = 0; p < rs->rank(); ++p) {
      const Polynomial w = fundamental_weight(*rs, p);
      const Polynomial q = q_map(dual_basis(*rs, rs->label(p)));
      auto c = proportionality(w, q);
      REQUIRE(c);
      CHECK(*c == simple_root_norm2(*rs, p) / 2);
      CHECK(proportionality(generators(closed_form(rs), shifted(*rs, 0)).generators[p], w).has_value());
    }
  }
  CHECK(simple_root_norm2(*RootSystem::build("A2"), 0) == 2);
  CHECK(simple_root_norm2(*RootSystem::build("B2"), 1) == 1);
}

TEST_CASE("Peterson presentation: the quadratic generators span the same space as alpha_i varpi_i") {
  for (const char* tag : {"A2", "A3", "B2", "C2", "G2"}) {
    CAPTURE(tag);
    auto rs = RootSystem::build(tag);
    const Presentation pres = generators(closed_form(rs), shifted(*rs, 1));
    std::vector<Polynomial> ours = pres.generators, theirs;
    for (int p = 0; p < rs->rank(); ++p) theirs.push_back(rs->simple_root(p) * fundamental_weight(*rs, p));
    std::vector<Polynomial> both = ours;
    both.insert(both.end(), theirs.begin(), theirs.end());
    CHECK(span_rank(ours) == static_cast<std::size_t>(rs->rank()));
    CHECK(span_rank(theirs) == static_cast<std::size_t>(rs->rank()));
    CHECK(span_rank(both) == static_cast<std::size_t>(rs->rank()));
    // the first generator is proportional on its own
    CHECK(proportionality(ours[0], theirs[0]).has_value());
  }
}

TEST_CASE("Poincare polynomial") {
  auto a2 = RootSystem::build("A2");
  CHECK(poincare_polynomial(*a2, HessenbergFunction{{2, 3}}) == std::vector<Integer>{1, 2, 1});
  CHECK(poincare_polynomial(*a2, HessenbergFunction{{1, 2}}) == std::vector<Integer>{1});
  CHECK_THROWS(poincare_polynomial(*a2, HessenbergFunction{{4, 2}}));
}

TEST_CASE("graded rank oracle") {
  auto a2 = RootSystem::build("A2");
  const QuotientPtr& q = a2->quotient();
  // zero ideal: dimensions of the polynomial ring in 2 variables
  CHECK(graded_rank_oracle(q, {}, 4) == std::vector<Integer>{1, 2, 3, 4, 5});
  std::vector<Polynomial> weights;
  for (int p = 0; p < 2; ++p) weights.push_back(fundamental_weight(*a2, p));
  CHECK(graded_rank_oracle(q, weights, 3) == std::vector<Integer>{1, 0, 0, 0});
  const Presentation pet = generators(closed_form(a2), HessenbergFunction{{2, 3}});
  CHECK(graded_rank_oracle(q, pet.generators, 5) == std::vector<Integer>{1, 2, 1, 0, 0, 0});

  CHECK_THROWS_AS(graded_rank_oracle(q, {}, 9), std::invalid_argument);
  CHECK_THROWS_AS(graded_rank_oracle(RootSystem::build("B4")->quotient(), {}, 2), std::invalid_argument);
}

TEST_CASE("oracle equals the Poincare polynomial on every ideal of B2 and G2") {
  for (const char* tag : {"B2", "G2"}) {
    CAPTURE(tag);
    auto rs = RootSystem::build(tag);
    const UniformBasis psi = closed_form(rs);
    for (const auto& I : enumerate_lower_ideals(*rs)) {
      const Presentation pres = generators(psi, hessenberg_from_ideal(*rs, I));
      std::vector<Integer> expect = pres.poincare;
      expect.resize(9);
      CHECK(graded_rank_oracle(rs->quotient(), pres.generators, 8) == expect);
    }
  }
}
