#include "doctest.h"
#include "qsl2/ideals.hpp"
#include "qsl2/reptheory.hpp"

using namespace qsl2;
using AE = AlgebraElement;

namespace {
Rational ur(std::int64_t k) { return Rational(Laurent::u_power(k)); }
}

TEST_CASE("rep satisfies the defining relations") {
  for (int m = 1; m <= 8; ++m) {
    RMatrix E = rep(m, AE::E()), F = rep(m, AE::F()), K = rep(m, AE::K(1)), Ki = rep(m, AE::K(-1));
    CHECK(K * E * Ki == E.scaled(ur(4)));
    CHECK(K * F * Ki == F.scaled(ur(-4)));
    RMatrix lhs = E * F + (F * E).scaled(Rational(-1));
    RMatrix rhs = (K + Ki.scaled(Rational(-1))).scaled(Rational(Laurent(1), Laurent::u_power(2) - Laurent::u_power(-2)));
    CHECK(lhs == rhs);
    for (int k = 0; k < m; ++k) CHECK(K(k, k) == ur(2 * (m - 1 - 2 * k)));
  }
  RMatrix E3 = rep(3, AE::E());
  CHECK((E3 * E3 * E3) == RMatrix(3, 3));
  CHECK(rep(1, AE::E()) == RMatrix(1, 1));
  CHECK(rep(1, AE::K(1)) == RMatrix::identity(1));
}

TEST_CASE("matrix trace is cyclic") {
  RMatrix a = rep(3, AE::Fdiv(1) * AE::K(2)), b = rep(3, AE::e() + AE::K(-1));
  CHECK((a * b).trace() == (b * a).trace());
}

TEST_CASE("qtrace examples") {
  CHECK(qtrace(Color::V(1), AE::K(4)) == Rational(1));
  CHECK(qtrace(Color::V(2), AE(1)) == ur(2) + ur(-2));
  CHECK(qtrace(color_P(1), AE::K(2)).is_zero());
}

TEST_CASE("colors") {
  CHECK(color_P(0) == Color::V(1));
  Color p1 = Color::V(2) + Rational(-(Laurent::u_power(2) + Laurent::u_power(-2))) * Color::V(1);
  CHECK(color_P(1) == p1);
  for (int l = 0; l <= 5; ++l) {
    Color p = color_P(l);
    CHECK(p.max_dim() == l + 1);
    CHECK(p.coeffs().begin()->first >= 1);
  }
  CHECK(parse_color("P2'") == color_Ptilde(2));
  CHECK(parse_color("V3") == Color::V(3));
  CHECK_THROWS(parse_color("Q2"));
}

TEST_CASE("habiro_trace closed form against matrix traces") {
  CHECK(habiro_trace(0, 0, 5) == Laurent(1));
  CHECK(habiro_trace(1, 0, 1).is_zero());
  for (int l = 0; l <= 4; ++l)
    for (int i = 0; i <= l; ++i)
      for (int j = -3; j <= 3; ++j) {
        AE x = AE::Fdiv(i) * AE::K(2 * j) * AE::e(i);
        CHECK_MESSAGE(qtrace(color_P(l), x) == Rational(habiro_trace(l, i, j)),
                      "l=" << l << " i=" << i << " j=" << j);
      }
}

TEST_CASE("casimir and sigma") {
  AE c = casimir();
  for (const AE& g : {AE::e(), AE::f(), AE::K(2), AE::Fdiv(1)}) CHECK(c * g == g * c);
  CHECK(sigma(0) == AE(1));
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; m <= 4; ++m)
      CHECK(qtrace(color_Pdoubleprime(l), sigma(m)) == Rational(l == m ? 1 : 0));
}

TEST_CASE("traces of P~'_l on the even integral form lie in I_l") {
  for (int l = 0; l <= 4; ++l) {
    FactoredIdeal g = ideal_g(l);
    for (int i = 0; i <= l; ++i)
      for (int j = -3; j <= 3; ++j) {
        Rational t = qtrace(color_Ptilde(l), AE::f(i) * AE::K(2 * j) * AE::e(i));
        CHECK_MESSAGE(certify_membership(t, g).member, "l=" << l << " i=" << i << " j=" << j);
      }
  }
}

TEST_CASE("{l}! times traces of P~'_l on U_Zq^ev are integral") {
  for (int l = 0; l <= 3; ++l)
    for (int i = 0; i <= l; ++i)
      for (int s = 0; s <= 2; ++s)
        for (int j = -2; j <= 2; ++j) {
          AE x = AE::Fdiv(i) * AE::K(2 * j) * AE::Hbinom(s) * AE::Ediv(i);
          Rational t = Rational(qbrace_factorial(l)) * qtrace(color_Ptilde(l), x);
          CHECK_MESSAGE(t.in_q_ring(), "l=" << l << " i=" << i << " s=" << s << " j=" << j);
        }
}
