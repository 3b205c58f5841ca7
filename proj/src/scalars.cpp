#include "qsl2/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace qsl2 {

namespace {

using Poly = std::vector<mpz_class>;  // dense, index = degree

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly to_poly(const Laurent& x, std::int64_t& shift) {
  Poly p;
  if (x.is_zero()) {
    shift = 0;
    return p;
  }
  shift = x.low_exp();
  p.resize(static_cast<std::size_t>(x.high_exp() - shift + 1));
  for (const auto& [e, c] : x.terms()) p[static_cast<std::size_t>(e - shift)] = c;
  return p;
}

Laurent from_poly(const Poly& p, std::int64_t shift) {
  std::vector<Laurent::Term> t;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) t.emplace_back(static_cast<std::int64_t>(i) + shift, p[i]);
  return Laurent::from_terms(std::move(t));
}

mpz_class poly_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Poly& p) {
  mpz_class g = poly_content(p);
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// a <- prem(a, b)
void pseudo_rem(Poly& a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    std::size_t off = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[off + i] -= la * b[i];
    trim(a);
  }
}

// Exact division of dense polynomials; false if not exact over Z.
bool poly_divexact(Poly a, const Poly& b, Poly& q) {
  trim(a);
  if (a.empty()) {
    q.clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  q.assign(a.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    std::size_t off = a.size() - b.size();
    q[off] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= t * b[i];
    trim(a);
  }
  return a.empty();
}

}  // namespace

Laurent::Laurent(long c) {
  if (c != 0) terms_.emplace_back(0, mpz_class(c));
}

Laurent::Laurent(const mpz_class& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

Laurent Laurent::monomial(const mpz_class& c, std::int64_t uexp) {
  Laurent r;
  if (c != 0) r.terms_.emplace_back(uexp, c);
  return r;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Laurent r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first)
      r.terms_.back().second += t.second;
    else
      r.terms_.push_back(std::move(t));
    if (r.terms_.back().second == 0) r.terms_.pop_back();
  }
  return r;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool Laurent::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

std::int64_t Laurent::low_exp() const {
  if (terms_.empty()) throw std::logic_error("low_exp of zero");
  return terms_.front().first;
}

std::int64_t Laurent::high_exp() const {
  if (terms_.empty()) throw std::logic_error("high_exp of zero");
  return terms_.back().first;
}

mpz_class Laurent::coeff(std::int64_t uexp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), uexp,
                             [](const Term& t, std::int64_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == uexp) return it->second;
  return 0;
}

mpz_class Laurent::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
  return g;
}

Laurent Laurent::primitive() const {
  mpz_class g = content();
  if (g == 0 || g == 1) return *this;
  Laurent r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
  return r;
}

Laurent Laurent::shifted(std::int64_t k) const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

Laurent Laurent::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Laurent r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Laurent Laurent::substitute(std::int64_t k) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& [e, c] : terms_) t.emplace_back(e * k, c);
  return from_terms(std::move(t));
}

std::optional<Laurent> Laurent::exact_div(const Laurent& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (is_zero()) return Laurent{};
  if (d.is_monomial()) {
    const auto& [de, dc] = d.terms_[0];
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
      mpz_class t;
      mpz_divexact(t.get_mpz_t(), c.get_mpz_t(), dc.get_mpz_t());
      r.terms_.emplace_back(e - de, std::move(t));
    }
    return r;
  }
  std::int64_t sa, sb;
  Poly a = to_poly(*this, sa), b = to_poly(d, sb), q;
  if (!poly_divexact(std::move(a), b, q)) return std::nullopt;
  return from_poly(q, sa - sb);
}

bool Laurent::in_q_ring() const {
  for (const auto& t : terms_)
    if (t.first % 4 != 0) return false;
  return true;
}

Laurent Laurent::normalized() const {
  if (is_zero()) return {};
  Laurent r = shifted(-low_exp());
  if (r.terms_.back().second < 0) r = -r;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin(), ie = terms_.end();
  auto j = o.terms_.begin(), je = o.terms_.end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == ie || j->first < i->first) {
      out.push_back(*j++);
    } else {
      mpz_class s = i->second + j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.is_monomial()) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  const std::int64_t lo = a.low_exp() + b.low_exp();
  const std::int64_t span = a.high_exp() + b.high_exp() - lo + 1;
  Laurent r;
  if (span <= 4096) {
    std::vector<mpz_class> acc(static_cast<std::size_t>(span));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        mpz_class& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
        mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
    for (std::int64_t k = 0; k < span; ++k)
      if (acc[static_cast<std::size_t>(k)] != 0)
        r.terms_.emplace_back(lo + k, std::move(acc[static_cast<std::size_t>(k)]));
    return r;
  }
  std::map<std::int64_t, mpz_class> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

bool operator<(const Laurent& a, const Laurent& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const Laurent::Term& x, const Laurent::Term& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

std::size_t Laurent::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& [e, c] : terms_) {
    h ^= std::hash<std::int64_t>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<long>{}(mpz_get_si(c.get_mpz_t())) + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  const bool qmode = in_q_ring();
  const char var = qmode ? 'q' : 'u';
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::int64_t e = qmode ? it->first / 4 : it->first;
    mpz_class c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    std::string body;
    if (e == 0) {
      body = c.get_str();
    } else {
      std::string v(1, var);
      if (e != 1) v += "^" + std::to_string(e);
      body = (c == 1) ? v : c.get_str() + "*" + v;
    }
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

Laurent pow(const Laurent& x, unsigned n) {
  Laurent r(1), b = x;
  while (n) {
    if (n & 1U) r *= b;
    n >>= 1U;
    if (n) b *= b;
  }
  return r;
}

Laurent gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  mpz_class ca = a.content(), cb = b.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_monomial() || b.is_monomial()) return Laurent(cg);
  std::int64_t s;
  Poly x = to_poly(a, s), y = to_poly(b, s);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  Poly g;
  while (true) {
    if (y.empty()) {
      g = x;
      break;
    }
    if (y.size() == 1) {
      g = Poly{1};
      break;
    }
    pseudo_rem(x, y);
    make_primitive(x);
    std::swap(x, y);
  }
  make_primitive(g);
  if (g.back() < 0)
    for (auto& c : g) c = -c;
  return from_poly(g, 0).scaled(cg).normalized();
}

Rational::Rational(const Laurent& n, const Laurent& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  if (den_.is_one()) return;
  if (!den_.is_unit()) {
    Laurent g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *num_.exact_div(g);
      den_ = *den_.exact_div(g);
    }
  }
  // Move the unit part u^k * sign of the denominator into the numerator.
  std::int64_t k = den_.low_exp();
  bool neg = den_.terms().back().second < 0;
  if (k != 0 || neg) {
    den_ = den_.shifted(-k);
    num_ = num_.shifted(-k);
    if (neg) {
      den_ = -den_;
      num_ = -num_;
    }
  }
}

std::optional<Laurent> Rational::as_laurent() const {
  if (is_laurent()) return num_;
  return std::nullopt;
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.num_.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    if (num_.is_zero()) den_ = Laurent(1);
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero");
  return Rational(den_, num_);
}

std::string Rational::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------

Laurent qbrace(std::int64_t i) { return Laurent::q_power(i) - Laurent(1); }

Laurent qbrace_falling(std::int64_t i, int n) {
  Laurent r(1);
  for (int k = 0; k < n; ++k) r *= qbrace(i - k);
  return r;
}

Laurent qbrace_factorial(int n) { return qbrace_falling(n, n); }

Laurent qint(std::int64_t i) { return *qbrace(i).exact_div(qbrace(1)); }

Laurent qint_factorial(int n) {
  Laurent r(1);
  for (int k = 1; k <= n; ++k) r *= qint(k);
  return r;
}

Laurent qbinom(std::int64_t i, int n) {
  if (n < 0) return {};
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, Laurent> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({i, n});
    if (it != cache.end()) return it->second;
  }
  Laurent r = *qbrace_falling(i, n).exact_div(qbrace_factorial(n));
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(std::make_pair(i, n), r);
  return r;
}

Laurent vint(std::int64_t i) {
  // v = u^2
  Laurent num = Laurent::u_power(2 * i) - Laurent::u_power(-2 * i);
  Laurent den = Laurent::u_power(2) - Laurent::u_power(-2);
  return *num.exact_div(den);
}

Laurent vint_factorial(int n) {
  Laurent r(1);
  for (int k = 1; k <= n; ++k) r *= vint(k);
  return r;
}

Laurent cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, Laurent> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto mobius = [](int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
    if (n > 1) r = -r;
    return r;
  };
  Laurent num(1), den(1);
  for (int d = 1; d <= m; ++d) {
    if (m % d) continue;
    int mu_ = mobius(m / d);
    if (mu_ == 1) num *= qbrace(d);
    if (mu_ == -1) den *= qbrace(d);
  }
  Laurent r = *num.exact_div(den);
  if (r.terms().back().second < 0) r = -r;
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(m, r);
  return r;
}

Laurent parse_laurent(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar");
  std::vector<Laurent::Term> terms;
  std::size_t i = 0;
  auto read_int = [&](mpz_class& out) {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) return false;
    out = mpz_class(s.substr(i, j - i));
    i = j;
    return true;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!terms.empty()) {
      throw std::invalid_argument("expected + or - in '" + text + "'");
    }
    mpz_class c = 1;
    bool have_c = read_int(c);
    std::int64_t e = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'q' || s[i] == 'u')) {
      if (s[i] == '*') {
        if (!have_c) throw std::invalid_argument("bad term in '" + text + "'");
        ++i;
      }
      if (i >= s.size() || (s[i] != 'q' && s[i] != 'u'))
        throw std::invalid_argument("expected variable in '" + text + "'");
      int scale = s[i] == 'q' ? 4 : 1;
      ++i;
      std::int64_t pw = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        int es = 1;
        if (i < s.size() && s[i] == '-') {
          es = -1;
          ++i;
        }
        mpz_class p;
        if (!read_int(p)) throw std::invalid_argument("bad exponent in '" + text + "'");
        if (paren) {
          if (i >= s.size() || s[i] != ')') throw std::invalid_argument("missing ) in '" + text + "'");
          ++i;
        }
        pw = es * p.get_si();
      }
      e = pw * scale;
    } else if (!have_c) {
      throw std::invalid_argument("bad term in '" + text + "'");
    }
    terms.emplace_back(e, sign * c);
  }
  return Laurent::from_terms(std::move(terms));
}

}  // namespace qsl2
