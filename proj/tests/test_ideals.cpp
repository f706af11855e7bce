#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealarr/ideals.hpp"

#include <algorithm>
#include <cstdint>

using namespace idealarr;

namespace {

// Brute force over all subsets, filtered by downward closure.
std::size_t brute_force_count(const RootSystem& rs) {
  const int n = rs.root_count();
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) members.push_back(k);
    }
    if (is_downward_closed(rs, members)) ++count;
  }
  return count;
}

LowerIdeal by_forms(const RootSystem& rs, const std::vector<std::string>& forms) {
  std::vector<int> members;
  for (const auto& f : forms) {
    const Polynomial p = parse_polynomial(rs.quotient(), f);
    for (const auto& r : rs.roots()) {
      if (r.form == p) members.push_back(rs.index_of(r.index));
    }
  }
  return ideal_from_roots(rs, members);
}

}  // namespace

TEST_CASE("counts agree with brute force") {
  auto g2 = RootSystem::build("G2");
  CHECK(enumerate_lower_ideals(*g2).size() == 8);
  CHECK(brute_force_count(*g2) == 8);
  auto b3 = RootSystem::build("B3");
  CHECK(enumerate_lower_ideals(*b3).size() == 20);
  CHECK(brute_force_count(*b3) == 20);
  auto a3 = RootSystem::build("A3");
  CHECK(enumerate_lower_ideals(*a3).size() == 14);
  CHECK(brute_force_count(*a3) == 14);
  auto d4 = RootSystem::build("D4");
  CHECK(enumerate_lower_ideals(*d4).size() == brute_force_count(*d4));
}

TEST_CASE("Catalan numbers of larger types") {
  CHECK(enumerate_lower_ideals(*RootSystem::build("F4")).size() == 105);
  CHECK(enumerate_lower_ideals(*RootSystem::build("D5")).size() == 182);
  CHECK(enumerate_lower_ideals(*RootSystem::build("E6")).size() == 833);
  CHECK(enumerate_lower_ideals(*RootSystem::build("B4")).size() == 70);
}

TEST_CASE("A4 example ideal") {
  auto a4 = RootSystem::build("A4");
  const LowerIdeal I = by_forms(*a4, {"x1-x2", "x1-x3", "x2-x3", "x3-x4", "x3-x5", "x4-x5"});
  REQUIRE(I.size() == 6);
  const HessenbergFunction h = hessenberg_from_ideal(*a4, I);
  CHECK(h.values == std::vector<int>{3, 3, 5, 5});
  CHECK(ideal_from_hessenberg(*a4, h) == I);
  CHECK(exponents_of(*a4, I) == std::vector<int>{2, 1, 2, 1});
  CHECK(lambda_of_ideal(*a4, I) == std::vector<int>{1, 3});
}

TEST_CASE("D4 ideal with h = (3,5,4,7)") {
  auto d4 = RootSystem::build("D4");
  const HessenbergFunction h{{3, 5, 4, 7}};
  const LowerIdeal I = ideal_from_hessenberg(*d4, h);
  CHECK(I.size() == 9);
  CHECK(validate_hessenberg_conditions(d4->type(), h));
  CHECK(hessenberg_from_ideal(*d4, I) == h);
}

TEST_CASE("extreme ideals") {
  for (const char* tag : {"A3", "C3", "D5", "G2", "F4"}) {
    CAPTURE(tag);
    auto rs = RootSystem::build(tag);
    HessenbergFunction empty, full, peterson;
    for (int p = 0; p < rs->rank(); ++p) {
      empty.values.push_back(rs->label(p));
      full.values.push_back(rs->label(p) + rs->exponents()[p]);
      peterson.values.push_back(rs->label(p) + 1);
    }
    CHECK(ideal_from_hessenberg(*rs, empty).empty());
    CHECK(ideal_from_hessenberg(*rs, full).size() == static_cast<std::size_t>(rs->root_count()));
    const LowerIdeal simple = ideal_from_hessenberg(*rs, peterson);
    CHECK(simple.size() == static_cast<std::size_t>(rs->rank()));
    std::vector<int> all;
    for (int p = 0; p < rs->rank(); ++p) all.push_back(rs->label(p));
    CHECK(lambda_of_ideal(*rs, simple) == all);
    CHECK(validate_hessenberg_conditions(rs->type(), empty));
    CHECK(exponents_of(*rs, LowerIdeal{}) == std::vector<int>(rs->rank(), 0));
  }
}

TEST_CASE("errors") {
  auto a3 = RootSystem::build("A3");
  // alpha_{1,3} without alpha_{2,3}
  const int top = a3->index_of({1, 3});
  CHECK_THROWS_WITH_AS(hessenberg_from_ideal(*a3, LowerIdeal{{top}}), "not downward closed", std::invalid_argument);
  CHECK_THROWS_WITH_AS(ideal_from_hessenberg(*a3, HessenbergFunction{{3, 2, 3}}), "invalid Hessenberg function",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(lambda_of_ideal(*a3, LowerIdeal{}), "height undefined at 0", std::invalid_argument);
  CHECK_THROWS(parse_h("1,,2"));
  CHECK_THROWS(parse_h("a"));
  CHECK(parse_h("3,5,4,7").values == std::vector<int>{3, 5, 4, 7});
  CHECK(h_key(HessenbergFunction{{3, 5}}) == "3,5");
}

TEST_CASE("dual partition of the full B2 ideal") {
  auto b2 = RootSystem::build("B2");
  auto all = enumerate_lower_ideals(*b2).back();
  REQUIRE(all.size() == 4);
  auto d = dual_partition_exponents(*b2, all);
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<int>{1, 3});
  auto e = exponents_of(*b2, all);
  std::sort(e.begin(), e.end());
  CHECK(e == d);
}

TEST_CASE("exponents of every ideal equal the dual partition") {
  for (const char* tag : {"A4", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(tag);
    auto rs = RootSystem::build(tag);
    for (const auto& I : enumerate_lower_ideals(*rs)) {
      auto e = exponents_of(*rs, I);
      std::sort(e.rbegin(), e.rend());
      CHECK(e == dual_partition_exponents(*rs, I));
    }
  }
}

TEST_CASE("height ideals") {
  auto d5 = RootSystem::build("D5");
  CHECK(height_ideal(*d5, 0).empty());
  for (int m = 1; m <= d5->height(); ++m) {
    const LowerIdeal Im = height_ideal(*d5, m);
    CHECK(ideal_height(*d5, Im) == m);
    CHECK(lambda_of_ideal(*d5, Im) == d5->lambda_set(m));
  }
}

TEST_CASE("condition lists agree with downward closure on a bounded box") {
  for (const char* tag : {"B3", "C3", "D4", "G2"}) {
    CAPTURE(tag);
    auto rs = RootSystem::build(tag);
    std::size_t valid = 0;
    for_each_bounded_h(*rs, [&](const HessenbergFunction& h) {
      bool closed = true;
      try {
        ideal_from_hessenberg(*rs, h);
      } catch (const std::invalid_argument&) {
        closed = false;
      }
      CHECK(validate_hessenberg_conditions(rs->type(), h) == closed);
      valid += closed;
    });
    CHECK(valid == enumerate_lower_ideals(*rs).size());
  }
  CHECK_FALSE(validate_hessenberg_conditions(LieType::parse("B3"), HessenbergFunction{{6, 3, 4}}));
}
