#include "idealarr/json_io.hpp"

#include <stdexcept>

namespace idealarr {

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  const int n = p.ambient_dim();
  for (const auto& [mono, coef] : p.terms()) {
    Json e = Json::array();
    for (int k = 0; k < n; ++k) e.push_back(mono[k]);
    out.push_back(Json{{"e", std::move(e)}, {"c", to_fraction_string(coef)}});
  }
  return out;
}

Polynomial polynomial_from_json(const QuotientPtr& q, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  Polynomial out(q);
  for (const auto& term : j) {
    const auto& e = term.at("e");
    if (!e.is_array() || static_cast<int>(e.size()) != q->ambient_dim()) {
      throw std::invalid_argument("exponent vector has the wrong length");
    }
    Monomial m;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const int a = e[k].get<int>();
      if (a < 0 || a > 255) throw std::invalid_argument("exponent out of range");
      for (int t = 0; t < a; ++t) m = m * Monomial::var(static_cast<int>(k));
    }
    out += Polynomial::constant(q, parse_rational(term.at("c").get<std::string>())).mul_term(m, 1);
  }
  return out;
}

Json to_json(const Derivation& d) {
  Json coeffs = Json::array();
  for (int k = 0; k < d.ambient_dim(); ++k) coeffs.push_back(to_json(d.coeff(k)));
  return Json{{"coeffs", std::move(coeffs)}};
}

Derivation derivation_from_json(const QuotientPtr& q, const Json& j) {
  const auto& c = j.at("coeffs");
  if (!c.is_array() || static_cast<int>(c.size()) != q->ambient_dim()) {
    throw std::invalid_argument("derivation JSON needs one coefficient per ambient coordinate");
  }
  std::vector<Polynomial> coeffs;
  for (const auto& p : c) coeffs.push_back(polynomial_from_json(q, p));
  return Derivation(q, std::move(coeffs));
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_fraction_string(v));
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const HessenbergFunction& h) { return Json(h.values); }

Json roots_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (const Root& r : rs.roots()) {
    roots.push_back(Json{{"i", r.index.i}, {"j", r.index.j}, {"form", to_json(r.form)}});
  }
  auto ij = [&](int idx) {
    const RootIndex& r = rs.roots()[static_cast<std::size_t>(idx)].index;
    return Json{{"i", r.i}, {"j", r.j}};
  };
  Json covers = Json::array();
  for (const auto& [a, b] : rs.covers()) covers.push_back(Json::array({ij(a), ij(b)}));
  return Json{{"type", rs.name()}, {"roots", std::move(roots)}, {"covers", std::move(covers)}};
}

Json to_json(const VerificationReport& r) {
  Json out{{"h", to_json(r.h)},
           {"size", r.ideal_size},
           {"membership_ok", r.membership_ok},
           {"membership_mode", to_string(r.membership_mode)},
           {"degree_sum_ok", r.degree_sum_ok},
           {"degree_sum", r.degree_sum},
           {"saito_mode", to_string(r.saito_mode)},
           {"saito_ok", r.saito_ok}};
  out["constant"] = r.constant ? Json(to_fraction_string(*r.constant)) : Json(nullptr);
  out["ok"] = r.ok();
  if (!r.failure.empty()) out["failure"] = r.failure;
  return out;
}

}  // namespace idealarr
