#include "qsl2/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsl2 {

namespace {

void bump(std::map<int, int>& e, int m, int by) {
  if (by == 0) return;
  int& v = e[m];
  v += by;
  if (v == 0) e.erase(m);
}

FactoredIdeal inverse(FactoredIdeal a) {
  for (auto& [m, e] : a.exponents) e = -e;
  a.uexp = -a.uexp;
  return a;
}

// {k}_q = q^k - 1 = prod_{d | k} Phi_d
void add_qbrace(std::map<int, int>& e, int k, int by) {
  if (k < 1) throw std::invalid_argument("{k}_q with k < 1 is zero or not cyclotomic");
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) bump(e, d, by);
}

Laurent product(const std::map<int, int>& e, int sign) {
  Laurent r(1);
  for (const auto& [m, k] : e)
    if (k * sign > 0) r *= pow(cyclotomic(m), static_cast<unsigned>(k * sign));
  return r;
}

// Remainder of a modulo the monic polynomial d (lowest exponent 0) in u.
Laurent remainder_mod(const Laurent& a, const Laurent& d) {
  if (a.is_zero()) return a;
  std::int64_t lo = a.low_exp();
  std::int64_t deg = d.high_exp();
  std::vector<mpz_class> c(static_cast<std::size_t>(a.high_exp() - lo + 1));
  for (const auto& [k, v] : a.terms()) c[static_cast<std::size_t>(k - lo)] = v;
  for (std::int64_t top = static_cast<std::int64_t>(c.size()) - 1; top >= deg; --top) {
    mpz_class lead = c[static_cast<std::size_t>(top)];
    if (lead == 0) continue;
    for (const auto& [k, v] : d.terms()) c[static_cast<std::size_t>(top - deg + k)] -= lead * v;
  }
  std::vector<Laurent::Term> t;
  for (std::size_t k = 0; k < c.size() && static_cast<std::int64_t>(k) < deg; ++k)
    if (c[k] != 0) t.emplace_back(static_cast<std::int64_t>(k) + lo, c[k]);
  return Laurent::from_terms(std::move(t));
}

int pick_max(const std::vector<int>& ls) {
  return static_cast<int>(std::max_element(ls.begin(), ls.end()) - ls.begin());
}

int pick_min(const std::vector<int>& ls, int avoid) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(ls.size()); ++i)
    if (i != avoid && (best < 0 || ls[i] < ls[best])) best = i;
  return best;
}

void check_tuple(const std::vector<int>& ls, std::size_t min_len) {
  if (ls.size() < min_len)
    throw std::invalid_argument("need at least " + std::to_string(min_len) + " components");
  for (int l : ls)
    if (l < 0) throw std::invalid_argument("indices must be non-negative");
}

}  // namespace

FactoredIdeal FactoredIdeal::cyclotomic_power(int m, int e) {
  if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
  FactoredIdeal r;
  bump(r.exponents, m, e);
  return r;
}

Laurent FactoredIdeal::numerator() const { return product(exponents, 1); }
Laurent FactoredIdeal::denominator() const { return product(exponents, -1); }

Rational FactoredIdeal::generator() const {
  Laurent u = Laurent::u_power(uexp);
  if (sign < 0) u = -u;
  return Rational(numerator() * u, denominator());
}

bool FactoredIdeal::is_integral() const {
  return std::all_of(exponents.begin(), exponents.end(), [](const auto& p) { return p.second > 0; });
}

int FactoredIdeal::exponent(int m) const {
  auto it = exponents.find(m);
  return it == exponents.end() ? 0 : it->second;
}

FactoredIdeal operator*(const FactoredIdeal& a, const FactoredIdeal& b) {
  FactoredIdeal r = a;
  r.sign *= b.sign;
  r.uexp += b.uexp;
  for (const auto& [m, e] : b.exponents) bump(r.exponents, m, e);
  return r;
}

FactoredIdeal intersect(const FactoredIdeal& a, const FactoredIdeal& b) {
  FactoredIdeal r;
  for (const auto& [m, e] : a.exponents) bump(r.exponents, m, std::max(e, b.exponent(m)));
  for (const auto& [m, e] : b.exponents)
    if (!a.exponents.count(m)) bump(r.exponents, m, std::max(e, 0));
  return r;
}

bool subset(const FactoredIdeal& a, const FactoredIdeal& b) {
  for (const auto& [m, e] : b.exponents)
    if (a.exponent(m) < e) return false;
  for (const auto& [m, e] : a.exponents)
    if (e < 0 && b.exponent(m) > e) return false;
  return true;
}

std::string FactoredIdeal::str() const {
  std::string s;
  std::string den;
  for (const auto& [m, e] : exponents) {
    std::string f = "Phi" + std::to_string(m);
    int k = std::abs(e);
    if (k > 1) f += "^" + std::to_string(k);
    std::string& out = e > 0 ? s : den;
    if (!out.empty()) out += " ";
    out += f;
  }
  if (s.empty()) s = "1";
  if (!den.empty()) s += " / (" + den + ")";
  return s;
}

FactoredIdeal factored_qfactorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  return factored_qfalling(n, n);
}

FactoredIdeal factored_qfalling(int i, int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  FactoredIdeal r;
  for (int k = i - n + 1; k <= i; ++k) add_qbrace(r.exponents, k, 1);
  return r;
}

FactoredIdeal ideal_g(int l) {
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  FactoredIdeal r;
  for (int m = 1; m <= l; ++m) bump(r.exponents, m, (l + 1) / m - 1);
  return r;
}

IdealI ideal_I(int l) {
  IdealI out;
  out.principal = ideal_g(l);
  Laurent g;
  for (int k = 0; k <= l; ++k) {
    out.generators.push_back(qbrace_factorial(l - k) * qbrace_factorial(k));
    g = gcd(g, out.generators.back());
  }
  if (!(g.normalized() == out.principal.numerator().normalized()))
    throw std::logic_error("gcd of the generators of I_" + std::to_string(l) + " is not g_l");
  return out;
}

FactoredIdeal ideal_Za(const std::vector<int>& ls) {
  check_tuple(ls, 1);
  int L = ls[pick_max(ls)];
  return factored_qfalling(2 * L + 1, L + 1) * FactoredIdeal::cyclotomic_power(1, -1);
}

FactoredIdeal ideal_Zrb(const std::vector<int>& ls) { return ideal_Zrb(ls, -1); }

FactoredIdeal ideal_Zrb(const std::vector<int>& ls, int imax) {
  check_tuple(ls, 1);
  if (imax < 0) imax = pick_max(ls);
  if (imax >= static_cast<int>(ls.size()) || ls[imax] != ls[pick_max(ls)])
    throw std::invalid_argument("imax does not attain the maximum");
  FactoredIdeal r = ideal_Za(ls);
  for (int i = 0; i < static_cast<int>(ls.size()); ++i)
    if (i != imax) r = r * ideal_g(ls[i]);
  return r;
}

FactoredIdeal ideal_ZBr(const std::vector<int>& ls) { return ideal_ZBr(ls, -1, -1); }

FactoredIdeal ideal_ZBr(const std::vector<int>& ls, int imax, int imin) {
  check_tuple(ls, 3);
  const int n = static_cast<int>(ls.size());
  if (imax < 0) imax = pick_max(ls);
  if (imin < 0) imin = pick_min(ls, imax);
  if (imax >= n || imin >= n || imax == imin) throw std::invalid_argument("imax and imin must be distinct indices");
  if (ls[imax] != ls[pick_max(ls)]) throw std::invalid_argument("imax does not attain the maximum");
  if (ls[imin] != *std::min_element(ls.begin(), ls.end()))
    throw std::invalid_argument("imin does not attain the minimum");
  FactoredIdeal r = ideal_Za(ls) * inverse(factored_qfactorial(ls[imin]));
  for (int i = 0; i < n; ++i)
    if (i != imax && i != imin) r = r * ideal_g(ls[i]);
  return r;
}

FactoredIdeal ideal_ZBr_tilde(const std::vector<int>& ls) { return intersect(ideal_Za(ls), ideal_ZBr(ls)); }

Certificate certify_membership(const Rational& x, const FactoredIdeal& I) {
  Certificate c;
  if (x.is_zero()) {
    c.member = true;
    return c;
  }
  Rational q = x / I.generator();
  if (q.in_q_ring()) {
    c.member = true;
    c.quotient = q;
    return c;
  }
  Laurent top = x.num() * I.denominator();
  c.remainder = x.is_laurent() ? Rational(remainder_mod(top, I.numerator())) : Rational(top);
  if (c.remainder.is_zero()) c.remainder = q;  // divisible in Z[u^+-1] only
  return c;
}

}  // namespace qsl2
