#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealarr/rootsys.hpp"

#include <set>

using namespace idealarr;

namespace {

Polynomial P(const RootSystemPtr& rs, const std::string& s) { return parse_polynomial(rs->quotient(), s); }

}  // namespace

TEST_CASE("type tags") {
  CHECK(LieType::parse("d5").name() == "D5");
  CHECK_THROWS_AS(LieType::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("G3"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("Q2"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse(""), std::invalid_argument);
}

TEST_CASE("root counts and exponents") {
  struct Row {
    const char* tag;
    int roots;
    int height;
  };
  for (Row r : {Row{"A4", 10, 4}, Row{"B3", 9, 5}, Row{"C4", 16, 7}, Row{"D4", 12, 5}, Row{"D5", 20, 7},
                Row{"G2", 6, 5}, Row{"F4", 24, 11}, Row{"E6", 36, 11}, Row{"E7", 63, 17}, Row{"E8", 120, 29}}) {
    CAPTURE(r.tag);
    auto rs = RootSystem::build(r.tag);
    CHECK(rs->root_count() == r.roots);
    CHECK(rs->height() == r.height);
    int sum = 0;
    for (int e : rs->exponents()) sum += e;
    CHECK(sum == r.roots);
  }
  auto e8 = RootSystem::build("E8");
  CHECK(e8->exponents() == std::vector<int>{19, 29, 23, 13, 11, 7, 1, 17});
  auto d4 = RootSystem::build("D4");
  CHECK(d4->exponents() == std::vector<int>{5, 3, 1, 3});
  auto e7 = RootSystem::build("E7");
  std::multiset<int> ex7(e7->exponents().begin(), e7->exponents().end());
  CHECK(ex7 == std::multiset<int>{1, 5, 7, 9, 11, 13, 17});
  auto e6 = RootSystem::build("E6");
  std::multiset<int> ex6(e6->exponents().begin(), e6->exponents().end());
  CHECK(ex6 == std::multiset<int>{1, 4, 5, 7, 8, 11});
}

TEST_CASE("coordinates of individual roots") {
  auto a4 = RootSystem::build("A4");
  CHECK(a4->root({1, 3}).form == P(a4, "x1 - x3"));
  auto b3 = RootSystem::build("B3");
  CHECK(b3->root({1, 4}).form == P(b3, "x1"));
  auto d4 = RootSystem::build("D4");
  CHECK(d4->root({4, 6}).form == P(d4, "x2 + x4"));
  CHECK_THROWS_AS(d4->index_of({1, 9}), std::out_of_range);
}

TEST_CASE("heights") {
  auto e8 = RootSystem::build("E8");
  CHECK(e8->height_of({2, 31}) == 29);
  CHECK(e8->root({2, 31}).form == P(e8, "x1 + x2"));
  auto g2 = RootSystem::build("G2");
  CHECK(g2->height_of({1, 6}) == 5);
  CHECK(g2->root({1, 6}).form == P(g2, "-x1 - x2 + 2*x3"));
  for (const auto& r : g2->roots()) {
    if (r.index.j == r.index.i + 1) CHECK(r.height == 1);
  }
}

TEST_CASE("Lambda sets") {
  auto d5 = RootSystem::build("D5");
  CHECK(d5->lambda_set(0) == std::vector<int>{1, 2, 3, 4, 5});
  // m = 2k inside 1..n-1 gives [n-k-1] + {n}
  CHECK(d5->lambda_set(2) == std::vector<int>{1, 2, 3, 5});
  CHECK(d5->lambda_set(4) == std::vector<int>{1, 2, 5});
  auto f4 = RootSystem::build("F4");
  CHECK(f4->lambda_set(6) == std::vector<int>{2, 3});
  CHECK(f4->lambda_set(7) == std::vector<int>{2, 3});
  auto d4 = RootSystem::build("D4");
  CHECK(d4->lambda_set(3) == std::vector<int>{1, 2, 4});
  CHECK_THROWS(d4->lambda_set(6));
  CHECK_THROWS(d4->lambda_set(-1));
}

TEST_CASE("I-slices") {
  auto a4 = RootSystem::build("A4");
  auto s = a4->i_slice(1);
  REQUIRE(s.size() == 4);
  for (const auto& [i, form] : s) CHECK(form == P(a4, "x" + std::to_string(i) + " - x" + std::to_string(i + 1)));
  auto c2 = RootSystem::build("C2");
  auto t = c2->i_slice(3);
  REQUIRE(t.size() == 1);
  CHECK(t[0].first == 1);
  CHECK(t[0].second == P(c2, "2*x1"));
  auto d4 = RootSystem::build("D4");
  auto u = d4->i_slice(3);
  REQUIRE(u.size() == 3);
  CHECK(u[0].second == P(d4, "x1 - x4"));
  CHECK(u[2].first == 4);
  CHECK(u[2].second == P(d4, "x1 + x4"));
}

TEST_CASE("covering relation and coweights") {
  for (const char* tag : {"B4", "D5", "F4", "E6"}) {
    CAPTURE(tag);
    auto rs = RootSystem::build(tag);
    for (const auto& [a, b] : rs->covers()) CHECK(rs->roots()[b].height == rs->roots()[a].height + 1);
    for (int p = 0; p < rs->rank(); ++p) {
      for (int k = 0; k < rs->rank(); ++k) {
        Rational s = 0;
        const auto& c = rs->roots()[rs->row_begin(k)].coeffs;
        for (int x = 0; x < rs->ambient_dim(); ++x) s += rs->coweight(p)[x] * c[x];
        CHECK(s == (p == k ? 1 : 0));
      }
    }
  }
}

TEST_CASE("E8 root table decoder") {
  auto v = decode_e8_root("1+2");
  REQUIRE(v.size() == 8);
  CHECK(v[0] == 1);
  CHECK(v[1] == 1);
  CHECK(v[2] == 0);
}
