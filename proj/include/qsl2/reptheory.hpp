// Finite-dimensional representations V_m, quantum traces and the color
// elements used for the colored Jones polynomial.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsl2/scalars.hpp"
#include "qsl2/uqalg.hpp"

namespace qsl2 {

template <class T>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const T& v = x(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < y.cols; ++j)
          if (!y(k, j).is_zero()) r(i, j) += v * y(k, j);
      }
    return r;
  }
  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& v : r.a) v = v * s;
    return r;
  }
  Matrix transpose() const {
    Matrix r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  T trace() const {
    T t;
    for (int i = 0; i < rows; ++i) t += (*this)(i, i);
    return t;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

using LMatrix = Matrix<Laurent>;
using RMatrix = Matrix<Rational>;

// Weight of the k-th basis vector of V_m: m - 1 - 2k.
inline int weight(int m, int k) { return m - 1 - 2 * k; }

LMatrix rep_monomial(int m, const Monomial& x);
RMatrix rep(int m, const AlgebraElement& x);
// Action on the dual V_m^*: rho(S(x))^T in the dual basis.
RMatrix rep_dual(int m, const AlgebraElement& x);
RMatrix to_rational(const LMatrix& x);

// tr(K^-1 x) on V_m for a basis monomial; cached.
Laurent qtrace_monomial(int m, const Monomial& x);

// Formal Z[u^+-1]-combination of the modules V_m, m >= 1.
class Color {
 public:
  Color() = default;
  static Color V(int m);
  const std::map<int, Rational>& coeffs() const { return c_; }
  int max_dim() const;
  Color& operator+=(const Color& o);
  friend Color operator+(Color a, const Color& b) { return a += b; }
  friend Color operator*(const Color& a, const Color& b);  // tensor product
  friend Color operator*(const Rational& s, const Color& a);
  friend bool operator==(const Color&, const Color&) = default;
  std::string str() const;

 private:
  std::map<int, Rational> c_;
};

Rational qtrace(const Color& col, const AlgebraElement& x);

Color color_P(int l);           // prod_{i<l} (V_2 - q^{i+1/2} - q^{-i-1/2})
Color color_Ptilde(int l);      // q^{l/2} / {l}_q! * P_l
Color color_Pdoubleprime(int l);
// Parses V3, P2, P2' (tilde) and P2'' (double prime).
Color parse_color(const std::string& s);

Laurent habiro_trace(int l, int i, int j);

AlgebraElement casimir();
AlgebraElement sigma(int p);
// Coefficients c_0..c_k with x = sum c_p sigma(p), each c_p in Z[q,q^-1]; nullopt if
// x is not of that form. Central elements are expanded from the top e-degree down.
std::optional<std::vector<Laurent>> sigma_expansion(const AlgebraElement& x, int max_p);

}  // namespace qsl2
