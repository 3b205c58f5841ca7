#include "qsl2/reptheory.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qsl2 {

namespace {

Laurent vbinom(int n, int k) {
  if (k < 0 || k > n) return {};
  return *vint_factorial(n).exact_div(vint_factorial(k) * vint_factorial(n - k));
}

LMatrix rep_Fdiv(int m, int a) {
  LMatrix r(m, m);
  for (int k = 0; k + a < m; ++k)
    r(k + a, k) = vbinom(k + a, a).shifted(2 * a * weight(m, k) - a * (a - 1));
  return r;
}

LMatrix rep_K(int m, int b) {
  LMatrix r(m, m);
  for (int k = 0; k < m; ++k) r(k, k) = Laurent::u_power(2 * b * weight(m, k));
  return r;
}

LMatrix rep_epow(int m, int c) {
  LMatrix e(m, m);
  const Laurent d = Laurent::u_power(2) - Laurent::u_power(-2);
  for (int k = 1; k < m; ++k) e(k - 1, k) = d * vint(m - k);
  LMatrix r = LMatrix::identity(m);
  for (int i = 0; i < c; ++i) r = r * e;
  return r;
}

}  // namespace

LMatrix rep_monomial(int m, const Monomial& x) {
  if (m < 1) throw std::invalid_argument("module dimension must be positive");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, LMatrix> cache;
  auto key = std::make_tuple(m, x.a, x.b, x.c);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LMatrix r;
  if (x.a >= m || x.c >= m)
    r = LMatrix(m, m);
  else
    r = rep_Fdiv(m, x.a) * rep_K(m, x.b) * rep_epow(m, x.c);
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(key, r);
  return r;
}

RMatrix to_rational(const LMatrix& x) {
  RMatrix r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = Rational(x.a[i]);
  return r;
}

RMatrix rep(int m, const AlgebraElement& x) {
  RMatrix r(m, m);
  for (const auto& [mono, c] : x.terms()) {
    LMatrix t = rep_monomial(m, mono);
    for (std::size_t i = 0; i < t.a.size(); ++i)
      if (!t.a[i].is_zero()) r.a[i] += c * Rational(t.a[i]);
  }
  return r;
}

RMatrix rep_dual(int m, const AlgebraElement& x) { return rep(m, antipode(x)).transpose(); }

Laurent qtrace_monomial(int m, const Monomial& x) {
  if (x.a != x.c || x.a >= m) return {};
  Laurent t;
  LMatrix r = rep_monomial(m, x);
  for (int k = 0; k < m; ++k)
    if (!r(k, k).is_zero()) t += r(k, k).shifted(-2 * weight(m, k));
  return t;
}

// Colors ------------------------------------------------------------------------

Color Color::V(int m) {
  if (m < 1) throw std::invalid_argument("module dimension must be positive");
  Color c;
  c.c_[m] = Rational(1);
  return c;
}

int Color::max_dim() const { return c_.empty() ? 0 : c_.rbegin()->first; }

Color& Color::operator+=(const Color& o) {
  for (const auto& [m, v] : o.c_) {
    c_[m] += v;
    if (c_[m].is_zero()) c_.erase(m);
  }
  return *this;
}

Color operator*(const Color& x, const Color& y) {
  Color r;
  for (const auto& [a, ca] : x.c_)
    for (const auto& [b, cb] : y.c_)
      for (int k = 0; k < std::min(a, b); ++k) r += (ca * cb) * Color::V(a + b - 1 - 2 * k);
  return r;
}

Color operator*(const Rational& s, const Color& a) {
  Color r;
  if (s.is_zero()) return r;
  for (const auto& [m, v] : a.c_) r.c_[m] = v * s;
  return r;
}

std::string Color::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [m, v] : c_) {
    std::string t = "(" + v.str() + ")*V" + std::to_string(m);
    out += out.empty() ? t : " + " + t;
  }
  return out;
}

Rational qtrace(const Color& col, const AlgebraElement& x) {
  Rational r;
  for (const auto& [m, cm] : col.coeffs()) {
    Rational t;
    for (const auto& [mono, c] : x.terms()) {
      Laurent v = qtrace_monomial(m, mono);
      if (!v.is_zero()) t += c * Rational(v);
    }
    r += cm * t;
  }
  return r;
}

Color color_P(int l) {
  Color r = Color::V(1);
  for (int i = 0; i < l; ++i) {
    Laurent s = Laurent::u_power(4 * i + 2) + Laurent::u_power(-4 * i - 2);
    r = r * (Color::V(2) + Rational(-s) * Color::V(1));
  }
  return r;
}

Color color_Ptilde(int l) {
  return Rational(Laurent::u_power(2 * l), qbrace_factorial(l)) * color_P(l);
}

Color color_Pdoubleprime(int l) {
  Rational s(qbrace(1) * Laurent::q_power(static_cast<std::int64_t>(l) * (l + 1)),
             qbrace_falling(2 * l + 1, l + 1));
  return s * color_Ptilde(l);
}

Color parse_color(const std::string& s) {
  auto bad = [&]() { return std::invalid_argument("unknown color '" + s + "'"); };
  if (s.size() < 2) throw bad();
  std::size_t i = 1;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 1) throw bad();
  int n = std::stoi(s.substr(1, i - 1));
  std::string tail = s.substr(i);
  if (s[0] == 'V' && tail.empty()) return Color::V(n);
  if (s[0] == 'P') {
    if (tail.empty()) return color_P(n);
    if (tail == "'") return color_Ptilde(n);
    if (tail == "''") return color_Pdoubleprime(n);
  }
  throw bad();
}

Laurent habiro_trace(int l, int i, int j) {
  std::int64_t qe = -static_cast<std::int64_t>(l) * j + 2LL * i * j + 1LL * i * i - 1LL * i * l;
  Laurent r = Laurent::u_power(2 * l + 4 * qe);
  return r * qbrace_factorial(l) * qbrace_factorial(l - i) * qbinom(j + l - 1, l - i) *
         qbinom(j - 1, l - i);
}

AlgebraElement casimir() {
  const Laurent d = Laurent::u_power(2) - Laurent::u_power(-2);
  return AlgebraElement::monomial(1, -1, 1, Rational(d)) +
         AlgebraElement::monomial(0, 1, 0, Rational(Laurent::u_power(2))) +
         AlgebraElement::monomial(0, -1, 0, Rational(Laurent::u_power(-2)));
}

AlgebraElement sigma(int p) {
  AlgebraElement c = casimir();
  AlgebraElement c2 = c * c;
  AlgebraElement r(1);
  for (int i = 1; i <= p; ++i) {
    Laurent s = Laurent::q_power(i) + Laurent(2) + Laurent::q_power(-i);
    r = r * (c2 - AlgebraElement(Rational(s)));
  }
  return r;
}

std::optional<std::vector<Laurent>> sigma_expansion(const AlgebraElement& x, int max_p) {
  AlgebraElement rest = x;
  int top = 0;
  for (const auto& [m, c] : x.terms()) top = std::max(top, m.c);
  if (top % 2 || top / 2 > max_p) return std::nullopt;
  std::vector<Laurent> out(top / 2 + 1);
  for (int k = top / 2; k >= 0; --k) {
    AlgebraElement s = sigma(k);
    // Leading monomial of sigma(k): e-degree 2k, largest K power.
    Monomial lead{-1, 0, -1};
    for (const auto& [m, c] : s.terms())
      if (m.c == 2 * k && (lead.c < 0 || m.b > lead.b)) lead = m;
    Rational c = rest.coeff(lead) / s.coeff(lead);
    if (!c.in_q_ring()) return std::nullopt;
    out[k] = *c.as_laurent();
    rest -= s * c;
  }
  if (!rest.is_zero()) return std::nullopt;
  return out;
}

}  // namespace qsl2
