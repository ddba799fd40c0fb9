#include "tonnetz/exact.h"

#include <stdexcept>

namespace tonnetz {

RVec make_rvec(std::initializer_list<long> xs) {
  RVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + s);
  // cpp_rational rejects a negative denominator outright.
  if (den < 0) num = -num, den = -den;
  return Rational(num, den);
}

RMat rref(RMat m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  if (m.empty()) return m;
  const size_t cols = m.front().size();
  size_t row = 0;
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational lead = m[row][c];
    for (auto& x : m[row]) x /= lead;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    if (pivots) pivots->push_back(static_cast<int>(c));
    ++row;
  }
  m.resize(row);
  return m;
}

int rank(const RMat& m) { return static_cast<int>(rref(m).size()); }

RMat nullspace(const RMat& m, int cols) {
  std::vector<int> piv;
  RMat r = rref(m, &piv);
  std::vector<char> is_pivot(cols, 0);
  for (int p : piv) is_pivot[p] = 1;
  RMat basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVec v(cols, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    basis.push_back(v);
  }
  return basis;
}

Rational determinant(RMat m) {
  const size_t n = m.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot of vectors of different length");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec mat_vec(const RMat& m, const RVec& v) {
  RVec out;
  for (const auto& row : m) out.push_back(dot(row, v));
  return out;
}

}  // namespace tonnetz
