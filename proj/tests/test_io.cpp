#include "doctest.h"
#include "qsl2/io.hpp"

using namespace qsl2;
using AE = AlgebraElement;

TEST_CASE("scalars round trip") {
  for (const Rational& x : {Rational(0), Rational(Laurent::u_power(-3) + Laurent(2)),
                            Rational(qbrace(2), qbrace(5)), Rational(Laurent::q_power(1), Laurent(3))})
    CHECK(rational_from_json(Json::parse(to_json(x).dump())) == x);
}

TEST_CASE("algebra elements and colors round trip") {
  AE x = casimir() * AE::Fdiv(2) + AE::K(-3);
  CHECK(algebra_from_json(Json::parse(to_json(x).dump())) == x);
  Color c = color_Ptilde(2);
  CHECK(color_from_json(Json::parse(to_json(c).dump())) == c);
}

TEST_CASE("tensor invariants round trip") {
  for (const char* name : {"clasp_B", "borromean_TB", "trivial(2)"}) {
    TensorInvariant J = universal_invariant(builtin(name), 2);
    Json j = to_json(J);
    TensorInvariant back = invariant_from_json(Json::parse(j.dump()));
    CHECK(back == J);
    CHECK(back.truncation == J.truncation);
    CHECK(to_json(back) == j);
  }
}

TEST_CASE("ideals round trip") {
  FactoredIdeal z = ideal_ZBr({3, 1, 2});
  FactoredIdeal back = ideal_from_json(Json::parse(to_json(z).dump()));
  CHECK(same_ideal(back, z));
  CHECK(to_json(z)["factored"] == z.str());
}

TEST_CASE("text rendering") {
  TensorInvariant J = state_term(builtin("clasp_B"), {1, 1});
  std::string s = format_invariant(J);
  CHECK(s.find("D-ledger: (1,2):-2") == 0);
  CHECK(s.find("(q) * Fdiv(1) K^-2 e ⊗ Fdiv(1) K^-2 e") != std::string::npos);
  CHECK(format_monomial(Monomial{}) == "1");
}
