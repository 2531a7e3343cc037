#include <cassert>
#include <cstdlib>

#include "chartfold/algebra.hpp"

namespace chartfold {
namespace {

// Dense integer Laurent polynomial in t: coeffs[k] is the coefficient of
// t^(low + k).
struct Laurent {
  int low = 0;
  std::vector<long long> c;

  static Laurent zero() { return {}; }
  static Laurent mono(long long v, int deg) {
    if (v == 0) return {};
    return {deg, {v}};
  }
  bool is_zero() const { return c.empty(); }
  void trim() {
    size_t a = 0;
    while (a < c.size() && c[a] == 0) ++a;
    size_t b = c.size();
    while (b > a && c[b - 1] == 0) --b;
    if (a == b) {
      c.clear();
      low = 0;
      return;
    }
    c = std::vector<long long>(c.begin() + a, c.begin() + b);
    low += (int)a;
  }
};

Laurent add(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.low, b.low);
  int hi = std::max(a.low + (int)a.c.size(), b.low + (int)b.c.size());
  Laurent r;
  r.low = lo;
  r.c.assign(hi - lo, 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[a.low - lo + i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[b.low - lo + i] += b.c[i];
  r.trim();
  return r;
}

Laurent neg(const Laurent& a) {
  Laurent r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

Laurent mul(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Laurent r;
  r.low = a.low + b.low;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

// Exact division; throws if not divisible (Alexander division is exact).
Laurent divide(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw invalid_argument("laurent division by zero");
  if (a.is_zero()) return {};
  Laurent rem = a, q;
  q.low = a.low - b.low;
  int qlen = (int)a.c.size() - (int)b.c.size() + 1;
  if (qlen <= 0) throw invalid_argument("laurent division not exact");
  q.c.assign(qlen, 0);
  for (int k = qlen - 1; k >= 0; --k) {
    long long top = rem.c[k + b.c.size() - 1];
    long long lead = b.c.back();
    if (top % lead != 0) throw invalid_argument("laurent division not exact");
    long long f = top / lead;
    q.c[k] = f;
    for (size_t j = 0; j < b.c.size(); ++j) rem.c[k + j] -= f * b.c[j];
  }
  for (long long v : rem.c)
    if (v != 0) throw invalid_argument("laurent division not exact");
  q.trim();
  return q;
}

using Matrix = std::vector<std::vector<Laurent>>;

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Laurent>(n));
  for (int i = 0; i < n; ++i) m[i][i] = Laurent::mono(1, 0);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int n = (int)a.size();
  Matrix r(n, std::vector<Laurent>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        r[i][j] = add(r[i][j], mul(a[i][k], b[k][j]));
    }
  return r;
}

// Reduced Burau matrix of sigma_i^sign on `strands` strands: acts on
// basis v_1..v_{strands-1}.
Matrix reduced_burau_generator(int strands, int i, int sign) {
  int n = strands - 1;
  Matrix m = identity_matrix(n);
  Laurent t = Laurent::mono(1, 1);
  Laurent tinv = Laurent::mono(1, -1);
  Laurent one = Laurent::mono(1, 0);
  if (sign > 0) {
    // v_{i-1} -> v_{i-1} + t v_i ; v_i -> -t v_i ; v_{i+1} -> v_i + v_{i+1}
    m[i - 1][i - 1] = neg(t);
    if (i - 2 >= 0) m[i - 2][i - 1] = t;
    if (i < n) m[i][i - 1] = one;
  } else {
    // inverse of the above
    m[i - 1][i - 1] = neg(tinv);
    if (i - 2 >= 0) m[i - 2][i - 1] = one;
    if (i < n) m[i][i - 1] = tinv;
  }
  return m;
}

// Fraction-free Gaussian elimination determinant (Bareiss would avoid the
// divisions; sizes here are tiny so expansion by minors is fine).
Laurent determinant(Matrix m) {
  int n = (int)m.size();
  if (n == 0) return Laurent::mono(1, 0);
  if (n == 1) return m[0][0];
  Laurent det;
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Matrix minor(n - 1, std::vector<Laurent>(n - 1));
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Laurent term = mul(m[0][j], determinant(minor));
    det = add(det, (j % 2 == 0) ? term : neg(term));
  }
  return det;
}

}  // namespace

std::vector<long long> alexander_polynomial(const Word& beta, int strands) {
  if (!closure_is_knot(beta, strands))
    throw invalid_argument("closure is not a knot");
  int n = strands - 1;
  Matrix b = identity_matrix(n);
  for (const Letter& l : beta.letters)
    b = mat_mul(b, reduced_burau_generator(strands, l.index, l.sign));
  // det(burau - I) = +- Delta(t) * (1 - t^strands) / (1 - t)
  Matrix d = b;
  for (int i = 0; i < n; ++i)
    d[i][i] = add(d[i][i], Laurent::mono(-1, 0));
  Laurent num = determinant(d);
  Laurent cyc;  // 1 + t + ... + t^{strands-1}
  cyc.low = 0;
  cyc.c.assign(strands, 1);
  Laurent delta = divide(num, cyc);
  if (delta.is_zero()) return {0};
  std::vector<long long> out = delta.c;
  if (out.back() < 0)
    for (auto& v : out) v = -v;
  return out;
}

long long knot_determinant(const Word& beta, int strands) {
  auto delta = alexander_polynomial(beta, strands);
  long long v = 0, sign = 1;
  for (long long cf : delta) {
    v += sign * cf;
    sign = -sign;
  }
  return std::llabs(v);
}

}  // namespace chartfold
