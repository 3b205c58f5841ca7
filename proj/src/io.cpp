#include "qsl2/io.hpp"

#include <stdexcept>

namespace qsl2 {

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
  std::string s = j.get<std::string>();
  std::size_t cut = s.find(")/(");
  if (s.empty() || s.front() != '(' || cut == std::string::npos) return Rational(parse_laurent(s));
  if (s.back() != ')') throw std::invalid_argument("malformed fraction: " + s);
  Laurent num = parse_laurent(s.substr(1, cut - 1));
  Laurent den = parse_laurent(s.substr(cut + 3, s.size() - cut - 4));
  return Rational(num, den);
}

namespace {

Json monomial_json(const Monomial& m) { return Json::array({m.a, m.b, m.c}); }

Monomial monomial_from(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("monomial must be [a, b, c]");
  return Monomial{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

}  // namespace

Json to_json(const AlgebraElement& x) {
  Json out = Json::array();
  for (const auto& [m, c] : x.terms()) out.push_back(Json::array({to_json(c), monomial_json(m)}));
  return out;
}

AlgebraElement algebra_from_json(const Json& j) {
  AlgebraElement x;
  for (const auto& t : j) x.add_term(monomial_from(t.at(1)), rational_from_json(t.at(0)));
  return x;
}

Json to_json(const Color& c) {
  Json out = Json::object();
  for (const auto& [m, v] : c.coeffs()) out["V" + std::to_string(m)] = to_json(v);
  return out;
}

Color color_from_json(const Json& j) {
  Color c;
  for (const auto& [k, v] : j.items()) {
    if (k.size() < 2 || k[0] != 'V') throw std::invalid_argument("color keys look like V3");
    c += rational_from_json(v) * Color::V(std::stoi(k.substr(1)));
  }
  return c;
}

Json to_json(const TensorInvariant& J) {
  Json out;
  out["diagram"] = J.diagram;
  out["truncation"] = J.truncation < 0 ? Json(nullptr) : Json(J.truncation);
  out["ledger"] = J.ledger.exponents;
  out["basis"] = "Fdiv(a) K^b e^c";
  Json terms = Json::array();
  for (const auto& [key, c] : J.terms) {
    Json mons = Json::array();
    for (const auto& m : key) mons.push_back(monomial_json(m));
    terms.push_back({{"coef", to_json(c)}, {"monomials", mons}});
  }
  out["terms"] = terms;
  return out;
}

TensorInvariant invariant_from_json(const Json& j) {
  TensorInvariant J;
  J.diagram = j.value("diagram", "");
  J.truncation = j.at("truncation").is_null() ? -1 : j.at("truncation").get<int>();
  auto ex = j.at("ledger").get<std::vector<std::vector<int>>>();
  J.ledger = DLedger(static_cast<int>(ex.size()));
  J.ledger.exponents = ex;
  for (const auto& t : j.at("terms")) {
    TensorInvariant::Key key;
    for (const auto& m : t.at("monomials")) key.push_back(monomial_from(m));
    Rational c = rational_from_json(t.at("coef"));
    if (!c.is_zero()) J.terms[key] += c;
  }
  return J;
}

Json to_json(const FactoredIdeal& I) {
  Json ex = Json::object();
  for (const auto& [m, e] : I.exponents) ex[std::to_string(m)] = e;
  return {{"factored", I.str()}, {"cyclotomic_exponents", ex}, {"generator", to_json(I.generator())}};
}

FactoredIdeal ideal_from_json(const Json& j) {
  FactoredIdeal I;
  for (const auto& [k, v] : j.at("cyclotomic_exponents").items())
    I = I * FactoredIdeal::cyclotomic_power(std::stoi(k), v.get<int>());
  return I;
}

Json to_json(const Certificate& c) {
  Json out;
  out["member"] = c.member;
  if (c.member)
    out["quotient"] = to_json(c.quotient);
  else
    out["remainder"] = to_json(c.remainder);
  return out;
}

Json to_json(const BrunnianReport& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back({{"state", f.state}, {"tensorand", f.tensorand}, {"reason", f.reason}});
  return {{"component", r.component}, {"truncation", r.truncation}, {"states", r.states},
          {"certified", r.certified}, {"brunnian_form", r.diagram_form}, {"passed", r.passed()},
          {"failures", fails}};
}

std::string format_monomial(const Monomial& m) {
  std::string s;
  auto app = [&](const std::string& t) { s += s.empty() ? t : " " + t; };
  if (m.a) app("Fdiv(" + std::to_string(m.a) + ")");
  if (m.b) app("K^" + std::to_string(m.b));
  if (m.c) app(m.c == 1 ? std::string("e") : "e^" + std::to_string(m.c));
  return s.empty() ? "1" : s;
}

std::string format_invariant(const TensorInvariant& J) {
  std::string out;
  bool ledger = false;
  for (const auto& row : J.ledger.exponents)
    for (int v : row) ledger = ledger || v != 0;
  if (ledger) {
    out += "D-ledger:";
    for (std::size_t i = 0; i < J.ledger.exponents.size(); ++i)
      for (std::size_t k = i; k < J.ledger.exponents.size(); ++k)
        if (int v = J.ledger.exponents[i][k]) out += " (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "):" + std::to_string(v);
    out += "\n";
  }
  if (J.terms.empty()) out += "0\n";
  for (const auto& [key, c] : J.terms) {
    out += "(" + c.str() + ")";
    for (std::size_t i = 0; i < key.size(); ++i) out += (i ? " ⊗ " : " * ") + format_monomial(key[i]);
    out += "\n";
  }
  return out;
}

}  // namespace qsl2
