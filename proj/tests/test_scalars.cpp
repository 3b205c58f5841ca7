#include "doctest.h"
#include "qsl2/scalars.hpp"

using namespace qsl2;

namespace {
Laurent q(std::int64_t k) { return Laurent::q_power(k); }

// Evaluate at an integer value of u, exact, as an oracle independent of the
// polynomial arithmetic.
mpq_class eval(const Laurent& x, long u) {
  mpq_class r = 0;
  for (const auto& [e, c] : x.terms()) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(u),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    r += e < 0 ? mpq_class(c, p) : mpq_class(c * p);
  }
  return r;
}
}  // namespace

TEST_CASE("laurent arithmetic") {
  Laurent a = q(2) - q(1) + Laurent(1);
  Laurent b = q(1) + Laurent(1);
  CHECK((a * b).str() == "q^3 + 1");
  CHECK((a - a).is_zero());
  CHECK(parse_laurent("q^3 + 1") == a * b);
  CHECK(parse_laurent("2*u^-3 - u + 7") ==
        Laurent::monomial(2, -3) - Laurent::u_power(1) + Laurent(7));
  CHECK(parse_laurent(Laurent::monomial(-5, 6).str()) == Laurent::monomial(-5, 6));
  for (long u : {2L, 3L, 5L}) CHECK(eval(a * b, u) == eval(a, u) * eval(b, u));
  CHECK((a * b).exact_div(b).value() == a);
  CHECK_FALSE((a * b + Laurent(1)).exact_div(b).has_value());
  CHECK(q(1).in_q_ring());
  CHECK_FALSE(Laurent::u_power(2).in_q_ring());
}

TEST_CASE("gcd") {
  Laurent a = (q(1) - Laurent(1)) * (q(2) + Laurent(1)) * q(-3);
  Laurent b = (q(1) - Laurent(1)) * (q(1) + Laurent(1));
  CHECK(gcd(a, b) == q(1) - Laurent(1));
  CHECK(gcd(Laurent(4) * q(1), Laurent(6)) == Laurent(2));
  CHECK(gcd(cyclotomic(3), cyclotomic(5)).is_one());
}

TEST_CASE("rational") {
  Rational x(qbrace(4), qbrace(2));
  CHECK(x.is_laurent());
  CHECK(x.num() == q(2) + Laurent(1));
  Rational y(Laurent(1), qbrace(1));
  Rational z = y + y;
  CHECK(z == Rational(Laurent(2), qbrace(1)));
  CHECK((z * Rational(qbrace(1))).num() == Laurent(2));
  CHECK(Rational(Laurent(2), Laurent(4)) == Rational(Laurent(1), Laurent(2)));
  CHECK(Rational(q(3), -q(1)).num() == -q(2));
}

TEST_CASE("q-integers") {
  CHECK(qint(3) == q(2) + q(1) + Laurent(1));
  CHECK(qint(-2) == -(q(-1) + q(-2)));
  CHECK(qbinom(4, 2) == parse_laurent("q^4 + q^3 + 2*q^2 + q + 1"));
  CHECK(qbinom(2, 3).is_zero());
  // [i over n] for negative i: {i}_{q,n}/{n}! by direct evaluation
  for (long u : {2L, 3L}) {
    CHECK(eval(qbinom(-2, 2), u) == eval(qbrace(-2) * qbrace(-3), u) / eval(qbrace_factorial(2), u));
  }
  CHECK(vint(2) == Laurent::u_power(2) + Laurent::u_power(-2));
  CHECK(cyclotomic(1) == q(1) - Laurent(1));
  CHECK(cyclotomic(6) == parse_laurent("q^2 - q + 1"));
  CHECK(cyclotomic(12) == parse_laurent("q^4 - q^2 + 1"));
  Laurent prod(1);
  for (int d : {1, 2, 3, 4, 6, 12}) prod *= cyclotomic(d);
  CHECK(prod == qbrace(12));
}
