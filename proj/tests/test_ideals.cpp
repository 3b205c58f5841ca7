#include "doctest.h"
#include "qsl2/ideals.hpp"

#include <stdexcept>

using namespace qsl2;

namespace {

Laurent q(int k) { return Laurent::q_power(k); }

Laurent poly(std::initializer_list<long> coeffs) {  // constant term first, in q
  Laurent r;
  int k = 0;
  for (long c : coeffs) r += Laurent(c) * q(k++);
  return r;
}

// Every tuple of length n with entries in [0, top].
std::vector<std::vector<int>> tuples(int n, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(n, 0);
  while (true) {
    out.push_back(t);
    int i = n - 1;
    while (i >= 0 && t[i] == top) t[i--] = 0;
    if (i < 0) return out;
    ++t[i];
  }
}

}  // namespace

TEST_CASE("ideal I_l") {
  CHECK(ideal_I(0).principal.exponents.empty());
  CHECK(ideal_I(0).generators.size() == 1);
  IdealI i2 = ideal_I(2);
  CHECK(i2.principal.str() == "Phi1^2");
  CHECK(i2.principal.numerator() == poly({1, -2, 1}));
  CHECK(ideal_I(4).principal.str() == "Phi1^4 Phi2");
  CHECK(ideal_I(4).generators.size() == 5);
  // the constructor itself asserts the gcd
  for (int l = 0; l <= 8; ++l) CHECK_NOTHROW(ideal_I(l));
}

TEST_CASE("q-factorials in factored form") {
  for (int n = 0; n <= 6; ++n) CHECK(factored_qfactorial(n).numerator() == qbrace_factorial(n).normalized());
  CHECK(factored_qfalling(5, 3).numerator() == (qbrace(5) * qbrace(4) * qbrace(3)));
  CHECK_THROWS(factored_qfalling(2, 3));
}

TEST_CASE("ideals at (2,2,2,2)") {
  std::vector<int> l = {2, 2, 2, 2};
  Laurent za = poly({-1, 1}) * poly({-1, 1}) * poly({1, 1}) * poly({1, 1, 1}) * poly({1, 0, 1}) *
               poly({1, 1, 1, 1, 1});
  Laurent zbr = pow(poly({-1, 1}), 4) * poly({1, 1, 1}) * poly({1, 0, 1}) * poly({1, 1, 1, 1, 1});
  Laurent zt = zbr * poly({1, 1});
  CHECK(ideal_Za(l).numerator() == za);
  CHECK(ideal_Za(l).is_integral());
  CHECK(ideal_ZBr(l).numerator() == zbr);
  CHECK(ideal_ZBr(l).denominator() == Laurent(1));
  CHECK(ideal_ZBr_tilde(l).numerator() == zt);
  CHECK_FALSE(subset(ideal_Za(l), ideal_ZBr(l)));
  CHECK_FALSE(subset(ideal_ZBr(l), ideal_Za(l)));
  CHECK(subset(ideal_ZBr_tilde(l), ideal_Za(l)));
  CHECK(subset(ideal_ZBr_tilde(l), ideal_ZBr(l)));
}

TEST_CASE("Z_a is the quotient of q-integers") {
  for (int L = 0; L <= 8; ++L) {
    Laurent v = qbrace_falling(2 * L + 1, L + 1);
    auto d = v.exact_div(qbrace(1));
    REQUIRE(d.has_value());
    CHECK(d->in_q_ring());
    CHECK(ideal_Za({L}).numerator() == *d);
  }
}

TEST_CASE("Z_Br needs three components") {
  CHECK_THROWS_AS(ideal_ZBr({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ideal_ZBr_tilde({1}), std::invalid_argument);
  CHECK_NOTHROW(ideal_Zrb({1, 2}));
  CHECK_THROWS_AS(ideal_Za({-1, 2}), std::invalid_argument);
}

TEST_CASE("fractional Z_Br") {
  // l_min = 3: only the middle I factor survives
  FactoredIdeal z = ideal_ZBr({3, 3, 3});
  CHECK(same_ideal(z * factored_qfactorial(3), ideal_Za({3, 3, 3}) * ideal_g(3)));
}

TEST_CASE("lattice of ideals") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& l : tuples(n, n == 3 ? 4 : 3)) {
      FactoredIdeal rb = ideal_Zrb(l);
      FactoredIdeal br = ideal_ZBr(l);
      FactoredIdeal bt = ideal_ZBr_tilde(l);
      int lmin = *std::min_element(l.begin(), l.end());
      CHECK(same_ideal(rb, factored_qfactorial(lmin) * ideal_g(lmin) * br));
      CHECK(subset(rb, bt));
      CHECK(subset(bt, ideal_Za(l)));
      CHECK(subset(bt, br));
    }
}

TEST_CASE("choice of the extremal indices does not matter") {
  for (const auto& l : tuples(3, 3)) {
    int hi = *std::max_element(l.begin(), l.end());
    int lo = *std::min_element(l.begin(), l.end());
    FactoredIdeal ref = ideal_ZBr(l);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b && l[a] == hi && l[b] == lo) CHECK(same_ideal(ideal_ZBr(l, a, b), ref));
    for (int a = 0; a < 3; ++a)
      if (l[a] == hi) CHECK(same_ideal(ideal_Zrb(l, a), ideal_Zrb(l)));
  }
  CHECK_THROWS(ideal_ZBr({1, 2, 3}, 0, 1));
}

TEST_CASE("membership certificates") {
  FactoredIdeal i2 = ideal_I(2).principal;
  Certificate z = certify_membership(Rational(0), i2);
  CHECK(z.member);
  CHECK(z.quotient.is_zero());

  Laurent x = i2.numerator() * (q(1) + Laurent(7));
  Certificate c = certify_membership(Rational(x), i2);
  CHECK(c.member);
  CHECK(c.quotient == Rational(q(1) + Laurent(7)));

  Certificate r = certify_membership(Rational(poly({-1, 1})), i2);
  CHECK_FALSE(r.member);
  CHECK_FALSE(r.remainder.is_zero());

  Certificate h = certify_membership(Rational(Laurent::u_power(2)), FactoredIdeal::unit_ideal());
  CHECK_FALSE(h.member);

  // fractional: 1 lies in (1/Phi1)
  CHECK(certify_membership(Rational(1), FactoredIdeal::cyclotomic_power(1, -1)).member);
  CHECK(subset(FactoredIdeal::unit_ideal(), FactoredIdeal::cyclotomic_power(1, -1)));
  CHECK_FALSE(subset(FactoredIdeal::cyclotomic_power(1, -1), FactoredIdeal::unit_ideal()));
}
