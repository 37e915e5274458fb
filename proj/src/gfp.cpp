#include "flagorbits/gfp.hpp"

#include <stdexcept>

namespace flagorbits::gfp {

std::uint8_t inv(std::uint8_t a, int p) {
  if (a == 0) throw std::domain_error("gfp: inverse of zero");
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return static_cast<std::uint8_t>(x);
  throw std::domain_error("gfp: p not prime?");
}

Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b, int p) {
  const std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  Mat out(n, Vec(c, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint8_t aij = a[i][j];
      if (!aij) continue;
      for (std::size_t l = 0; l < c; ++l)
        out[i][l] = (out[i][l] + aij * b[j][l]) % p;
    }
  return out;
}

Vec mat_vec(const Mat& m, const Vec& v, int p) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    unsigned acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    out[i] = acc % p;
  }
  return out;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat out(m[0].size(), Vec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out[j][i] = m[i][j];
  return out;
}

std::size_t rref(Mat& m, int p) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const std::uint8_t s = inv(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * s % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint8_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    ++r;
  }
  m.resize(r);
  return r;
}

std::size_t rank(Mat m, int p) { return rref(m, p); }

std::uint8_t dot(const Vec& a, const Vec& b, int p) {
  unsigned acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc % p;
}

}  // namespace flagorbits::gfp
