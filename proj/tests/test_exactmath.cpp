#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealarr/json_io.hpp"
#include "idealarr/polymatrix.hpp"
#include "idealarr/polynomial.hpp"
#include "idealarr/rootsys.hpp"

using namespace idealarr;

namespace {

QuotientPtr free_ring(int n) { return QuotientSpec::make(n); }
Polynomial P(const QuotientPtr& q, const std::string& s) { return parse_polynomial(q, s); }

}  // namespace

TEST_CASE("rationals serialize as num/den") {
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(parse_rational("-2/4")) == "-1/2");
  CHECK(to_display_string(parse_rational("6/3")) == "2");
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("normal form modulo linear relations") {
  auto g2 = RootSystem::build("G2")->quotient();
  CHECK(P(g2, "x1 + x2 + x3").is_zero());

  auto q = QuotientSpec::make(3, {{1, 1, 0}, {1, 0, 1}});
  CHECK(P(q, "x3") == P(q, "-x1"));
  CHECK(P(q, "x2") == P(q, "-x1"));

  auto b = free_ring(2);
  const Polynomial xy = P(b, "x1*x2");
  CHECK(xy.size() == 1);
  CHECK(xy.terms()[0].second == 1);
}

TEST_CASE("terms are stored in descending graded lex order") {
  auto q = free_ring(3);
  const Polynomial p = P(q, "x3 + x1^2 + x2*x3 + 1 + x1*x3");
  REQUIRE(p.size() == 5);
  for (std::size_t k = 1; k < p.size(); ++k) CHECK(grlex_less(p.terms()[k].first, p.terms()[k - 1].first));
  CHECK(p.terms().front().first == Monomial::var(0) * Monomial::var(0));
  CHECK(p.terms().back().first == Monomial::one());
}

TEST_CASE("exact division") {
  auto q = free_ring(4);
  auto quo = divide_by_linear(P(q, "x1^2 - x2^2"), P(q, "x1 - x2"));
  REQUIRE(quo);
  CHECK(*quo == P(q, "x1 + x2"));

  auto d4 = P(q, "(x1-x2)*(x1-x3)*(x1+x4) - x2*x3*x4");
  CHECK(divide_by_linear(d4, P(q, "x1")).has_value());

  CHECK_FALSE(divide_by_linear(P(q, "(x1-x2)*(x1-x3)"), P(q, "x1-x4")).has_value());
  CHECK_THROWS_AS(divide_by_linear(P(q, "x1"), P(q, "x2 - x2")), std::invalid_argument);

  auto big = P(q, "(x1+x2)^3*(x3-x4)^2");
  auto e = divide_exact(big, P(q, "(x1+x2)*(x3-x4)"));
  REQUIRE(e);
  CHECK(*e == P(q, "(x1+x2)^2*(x3-x4)"));
  CHECK_FALSE(divide_exact(big, P(q, "x1")).has_value());
}

TEST_CASE("proportionality") {
  auto q = free_ring(2);
  auto c = proportionality(P(q, "2*x1 - 2*x2"), P(q, "x1 - x2"));
  REQUIRE(c);
  CHECK(*c == 2);
  CHECK(P(q, "2*x1 - 2*x2") - *c * P(q, "x1 - x2") == Polynomial(q));
  CHECK_FALSE(proportionality(P(q, "x1"), P(q, "x2")).has_value());
  CHECK(proportionality(Polynomial(q), Polynomial(q)) == Rational(1));
}

TEST_CASE("evaluation") {
  auto q = free_ring(3);
  CHECK(P(q, "x1 - x2").evaluate({3, 1, 0}) == 2);
  // product of the B2 positive roots at (2,1)
  auto b2 = RootSystem::build("B2");
  std::vector<Polynomial> forms;
  for (const auto& r : b2->roots()) forms.push_back(r.form);
  CHECK(product(b2->quotient(), forms).evaluate({2, 1}) == 6);
  CHECK(P(q, "x1*x2 + 7").evaluate({0, 0, 0}) == 7);
  CHECK_THROWS(P(q, "x1").evaluate({1}));
}

TEST_CASE("Bareiss matches cofactor expansion") {
  auto q = free_ring(3);
  PolyMatrix m(q, 3, 3);
  const char* cells[] = {"x1", "x2^2", "1", "x1 - x3", "x2", "x3*x1", "2", "x3", "x1 + x2"};
  for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = P(q, cells[k]);
  CHECK(determinant(m) == determinant_cofactor(m));

  PolyMatrix id(q, 3, 3);
  for (int k = 0; k < 3; ++k) id(k, k) = Polynomial::constant(q, 1);
  CHECK(determinant(id) == Polynomial::constant(q, 1));
}

TEST_CASE("rational linear algebra") {
  RatMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(a) == 2);
  auto ker = kernel(a, 3);
  REQUIRE(ker.size() == 1);
  for (const auto& row : a) {
    Rational s = 0;
    for (int k = 0; k < 3; ++k) s += row[k] * ker[0][k];
    CHECK(s == 0);
  }
  CHECK_FALSE(inverse(a).has_value());
  RatMatrix b{{2, 1}, {1, 1}};
  auto inv = inverse(b);
  REQUIRE(inv);
  CHECK(multiply(b, *inv) == identity_matrix(2));
  CHECK(determinant(b) == 1);
}

TEST_CASE("polynomial JSON round trip") {
  auto q = RootSystem::build("G2")->quotient();
  const Polynomial p = P(q, "x1^2 - 1/3*x1*x2 + 5");
  const Json j = to_json(p);
  REQUIRE(j.is_array());
  CHECK(j[0]["e"].size() == 3);
  CHECK(j[1]["c"] == "-1/3");
  CHECK(polynomial_from_json(q, j) == p);
}
