#ifndef COTLAB_FP_HPP
#define COTLAB_FP_HPP

#include <cstdint>
#include <vector>

namespace cotlab {

// Arithmetic in the prime field F_p for a small prime p (p <= 251 so that
// elements fit in a byte).
class Field {
 public:
  explicit Field(unsigned p = 2);

  unsigned order() const { return p_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    unsigned s = unsigned(a) + b;
    return std::uint8_t(s >= p_ ? s - p_ : s);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return std::uint8_t(a >= b ? a - b : a + p_ - b);
  }
  std::uint8_t neg(std::uint8_t a) const { return std::uint8_t(a ? p_ - a : 0); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return std::uint8_t((unsigned(a) * b) % p_);
  }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }
  std::uint8_t reduce(long long v) const {
    long long r = v % (long long)p_;
    return std::uint8_t(r < 0 ? r + p_ : r);
  }

 private:
  unsigned p_;
  std::vector<std::uint8_t> inv_;
};

// Dense matrix over F_p. Zero rows or columns are allowed; an r x 0 or 0 x c
// matrix is the unique map to/from the zero space.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_zero() const;

  std::uint8_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  void set(int r, int c, std::uint8_t v) { a_[size_t(r) * cols_ + c] = v; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<std::uint8_t> a_;
};

Mat mat_add(const Field& F, const Mat& a, const Mat& b);
Mat mat_sub(const Field& F, const Mat& a, const Mat& b);
Mat mat_scale(const Field& F, std::uint8_t s, const Mat& a);
Mat mat_mul(const Field& F, const Mat& a, const Mat& b);
Mat mat_neg(const Field& F, const Mat& a);

// Stacks b to the right of a (same row count) / below a (same column count).
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

// Row-reduced echelon form, in place; returns the pivot columns.
std::vector<int> rref(const Field& F, Mat& m);
int rank(const Field& F, Mat m);

// Basis of the right kernel {x : m x = 0}, as matrix columns. Deterministic:
// free variables in increasing column order, each normalised with a 1 in its
// own coordinate.
Mat nullspace(const Field& F, const Mat& m);

// Basis of the column space, as a subset of the original columns.
Mat column_space(const Field& F, const Mat& m);

// Solves m x = b; returns false if inconsistent.
bool solve(const Field& F, const Mat& m, const Mat& b, Mat& x);

// True if the columns of v lie in the column span of m.
bool in_column_span(const Field& F, const Mat& m, const Mat& v);

}  // namespace cotlab

#endif
