#pragma once

#include <optional>
#include <vector>

#include "hodgekit/rational.hpp"

namespace hodgekit {

using Vec = std::vector<Rat>;

// Dense exact-rational matrix. Small dimensions throughout (< 100), so plain
// Gaussian elimination over mpq is the whole story.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Rat(0)) {}

  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rat& s) const;
  Vec apply(const Vec& v) const;
  Mat transposed() const;
  bool is_zero() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Vec row(int r) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

Mat commutator(const Mat& a, const Mat& b);

// Reduced row echelon form. `col_order` permutes the pivot search order,
// used to cross-check that solutions do not depend on elimination order.
struct Rref {
  Mat r;                        // reduced matrix, original column order
  std::vector<int> pivot_cols;  // one per pivot row
  int rank = 0;
};

Rref rref(const Mat& m, const std::vector<int>* col_order = nullptr);

std::vector<Vec> kernel_basis(const Mat& m);
int rank(const Mat& m);
Rat det(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

// Solve A x = b; nullopt if inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b, const std::vector<int>* col_order = nullptr);

// Row space with membership queries; rows kept in RREF.
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols) {}
  void insert(const Vec& v);
  bool contains(const Vec& v) const;
  bool same_space(const RowSpace& o) const;
  int dim() const { return (int)rows_.size(); }
  int cols() const { return cols_; }
  const std::vector<Vec>& rows() const { return rows_; }
  // reduce v against the stored rows (does not insert)
  Vec reduce(const Vec& v) const;

 private:
  int cols_;
  std::vector<Vec> rows_;        // rref rows
  std::vector<int> pivot_cols_;  // parallel to rows_
};

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Rat& s);
bool vec_is_zero(const Vec& a);

}  // namespace hodgekit
