#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealarr/bases.hpp"
#include "idealarr/derivation.hpp"

using namespace idealarr;

namespace {

Polynomial P(const RootSystem& rs, const std::string& s) { return parse_polynomial(rs.quotient(), s); }

Derivation D(const RootSystem& rs, const std::vector<std::string>& cs) {
  std::vector<Polynomial> coeffs;
  for (const auto& c : cs) coeffs.push_back(P(rs, c));
  return Derivation(rs.quotient(), std::move(coeffs));
}

}  // namespace

TEST_CASE("application to linear forms") {
  auto d4 = RootSystem::build("D4");
  const Derivation euler = D(*d4, {"x1", "x2", "x3", "x4"});
  CHECK(euler.apply(P(*d4, "x3 - x4")) == P(*d4, "x3 - x4"));

  auto a4 = RootSystem::build("A4");
  const Derivation psi12 = closed_form(a4).at({1, 2});
  CHECK(psi12.apply(P(*a4, "x1 - x3")) == P(*a4, "x1 - x2"));
}

TEST_CASE("dual basis") {
  for (const char* tag : {"A3", "B3", "C3", "D5", "G2", "F4", "E7"}) {
    CAPTURE(tag);
    auto rs = RootSystem::build(tag);
    for (int p = 0; p < rs->rank(); ++p) {
      const Derivation d = dual_basis(*rs, rs->label(p));
      CHECK(d.degree() == 0);
      for (int k = 0; k < rs->rank(); ++k) {
        CHECK(d.apply(rs->simple_root(k)) == Polynomial::constant(rs->quotient(), p == k ? 1 : 0));
      }
    }
  }
}

TEST_CASE("published dual vectors") {
  auto a4 = RootSystem::build("A4");
  // d1 + d2 - (2/5)(d1 + ... + d5)
  CHECK(dual_basis(*a4, 2) == D(*a4, {"3/5", "3/5", "-2/5", "-2/5", "-2/5"}));
  auto b3 = RootSystem::build("B3");
  CHECK(dual_basis(*b3, 2) == D(*b3, {"1", "1", "0"}));
  auto e8 = RootSystem::build("E8");
  CHECK(dual_basis(*e8, 8) == D(*e8, {"7/2", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2"}));
}

TEST_CASE("degrees") {
  auto b3 = RootSystem::build("B3");
  CHECK(closed_form(b3).at({1, 4}).degree() == 3);
  auto d4 = RootSystem::build("D4");
  CHECK(closed_form(d4).at({1, 6}).degree() == 5);
  CHECK(Derivation::zero(d4->quotient()).degree() == -1);
  const Derivation mixed = D(*d4, {"x1 + 1", "0", "0", "0"});
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK_THROWS_AS(mixed.degree(), std::invalid_argument);
}

TEST_CASE("tangency is enforced") {
  auto a2 = RootSystem::build("A2");
  // d1 alone does not preserve x1 + x2 + x3 = 0
  CHECK_THROWS(D(*a2, {"1", "0", "0"}));
  CHECK_NOTHROW(D(*a2, {"1", "-1", "0"}));
}

TEST_CASE("log module membership") {
  auto d4 = RootSystem::build("D4");
  const Derivation psi47 = D(*d4, {"x2*x3*x4", "x1*x3*x4", "x1*x2*x4", "x1*x2*x3"});
  const LowerIdeal all = enumerate_lower_ideals(*d4).back();
  REQUIRE(all.size() == 12);
  CHECK(in_log_module(psi47, *d4, all));
  CHECK(in_log_module(dual_basis(*d4, 1), *d4, LowerIdeal{}));
  CHECK_FALSE(in_log_module(dual_basis(*d4, 1), *d4, all));

  auto a4 = RootSystem::build("A4");
  const Derivation psi12 = closed_form(a4).at({1, 2});
  const int r13 = a4->index_of({1, 3});
  CHECK_FALSE(tangent_to_hyperplane(psi12, *a4, r13));
  CHECK(tangent_to_hyperplane(psi12, *a4, a4->index_of({1, 2})));
  CHECK(restrict_to_hyperplane(P(*a4, "x1 - x2"), *a4, r13) == restrict_to_hyperplane(P(*a4, "x3 - x2"), *a4, r13));
}

TEST_CASE("arithmetic") {
  auto b2 = RootSystem::build("B2");
  const Derivation a = D(*b2, {"x1", "x2"});
  const Derivation b = D(*b2, {"x2", "0"});
  CHECK((a + b) - b == a);
  CHECK((P(*b2, "x1") * a).degree() == 2);
  CHECK((Rational(2) * a).apply(P(*b2, "x1")) == P(*b2, "2*x1"));
  CHECK(a.evaluate({3, 4}) == std::vector<Rational>{3, 4});
}
