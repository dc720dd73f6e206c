#include "cotlab/fp.hpp"

#include <stdexcept>

namespace cotlab {

Field::Field(unsigned p) : p_(p) {
  if (p < 2 || p > 251) throw std::invalid_argument("field order out of range");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("field order must be prime");
  inv_.assign(p, 0);
  for (unsigned a = 1; a < p; ++a)
    for (unsigned b = 1; b < p; ++b)
      if (a * b % p == 1) { inv_[a] = std::uint8_t(b); break; }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool Mat::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

Mat mat_add(const Field& F, const Mat& a, const Mat& b) {
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, F.add(a.at(i, j), b.at(i, j)));
  return r;
}

Mat mat_sub(const Field& F, const Mat& a, const Mat& b) {
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, F.sub(a.at(i, j), b.at(i, j)));
  return r;
}

Mat mat_scale(const Field& F, std::uint8_t s, const Mat& a) {
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, F.mul(s, a.at(i, j)));
  return r;
}

Mat mat_neg(const Field& F, const Mat& a) { return mat_scale(F, F.neg(1), a); }

Mat mat_mul(const Field& F, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul shape mismatch");
  Mat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      std::uint8_t aik = a.at(i, k);
      if (!aik) continue;
      for (int j = 0; j < b.cols(); ++j)
        r.set(i, j, F.add(r.at(i, j), F.mul(aik, b.at(k, j))));
    }
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape mismatch");
  Mat r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape mismatch");
  Mat r(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
  return r;
}

std::vector<int> rref(const Field& F, Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col)) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols(); ++j) {
        auto t = m.at(row, j);
        m.set(row, j, m.at(pr, j));
        m.set(pr, j, t);
      }
    std::uint8_t piv = F.inv(m.at(row, col));
    for (int j = 0; j < m.cols(); ++j) m.set(row, j, F.mul(piv, m.at(row, j)));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      std::uint8_t f = m.at(i, col);
      if (!f) continue;
      for (int j = 0; j < m.cols(); ++j)
        m.set(i, j, F.sub(m.at(i, j), F.mul(f, m.at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const Field& F, Mat m) { return int(rref(F, m).size()); }

Mat nullspace(const Field& F, const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref(F, r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  int nfree = m.cols() - int(pivots.size());
  Mat basis(m.cols(), nfree);
  int k = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis.set(c, k, 1);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      basis.set(pivots[pi], k, F.neg(r.at(int(pi), c)));
    ++k;
  }
  return basis;
}

Mat column_space(const Field& F, const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref(F, r);
  Mat basis(m.rows(), int(pivots.size()));
  for (size_t k = 0; k < pivots.size(); ++k)
    for (int i = 0; i < m.rows(); ++i) basis.set(i, int(k), m.at(i, pivots[k]));
  return basis;
}

bool solve(const Field& F, const Mat& m, const Mat& b, Mat& x) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  Mat aug = hstack(m, b);
  std::vector<int> pivots = rref(F, aug);
  for (int c : pivots)
    if (c >= m.cols()) return false;
  x = Mat(m.cols(), b.cols());
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    for (int j = 0; j < b.cols(); ++j)
      x.set(pivots[pi], j, aug.at(int(pi), m.cols() + j));
  return true;
}

bool in_column_span(const Field& F, const Mat& m, const Mat& v) {
  Mat x;
  return solve(F, m, v, x);
}

}  // namespace cotlab
