#include "hodgekit/linalg.hpp"

#include <stdexcept>

namespace hodgekit {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m((int)rows.size(), cols);
  for (int r = 0; r < (int)rows.size(); ++r) {
    if ((int)rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += v * o.at(k, j);
    }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

Mat Mat::scaled(const Rat& s) const {
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if ((int)v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec out(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

Mat Mat::transposed() const {
  Mat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Vec Mat::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Rref rref(const Mat& m, const std::vector<int>* col_order) {
  Rref out;
  out.r = m;
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> order;
  if (col_order) {
    order = *col_order;
    if ((int)order.size() != cols) throw std::invalid_argument("rref: bad column order");
  } else {
    order.resize(cols);
    for (int i = 0; i < cols; ++i) order[i] = i;
  }
  int prow = 0;
  for (int oc = 0; oc < cols && prow < rows; ++oc) {
    int c = order[oc];
    int sel = -1;
    for (int r = prow; r < rows; ++r)
      if (out.r.at(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != prow)
      for (int j = 0; j < cols; ++j) std::swap(out.r.at(sel, j), out.r.at(prow, j));
    Rat inv = Rat(1) / out.r.at(prow, c);
    for (int j = 0; j < cols; ++j) out.r.at(prow, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == prow) continue;
      Rat f = out.r.at(r, c);
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) out.r.at(r, j) -= f * out.r.at(prow, j);
    }
    out.pivot_cols.push_back(c);
    ++prow;
  }
  out.rank = prow;
  return out;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  Rref rr = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, Rat(0));
    v[c] = 1;
    for (int r = 0; r < rr.rank; ++r) v[rr.pivot_cols[r]] = -rr.r.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const Mat& m) { return rref(m).rank; }

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  Mat a = m;
  const int n = a.rows();
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int r = c; r < n; ++r)
      if (a.at(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return Rat(0);
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    Rat inv = Rat(1) / a.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      Rat f = a.at(r, c) * inv;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Rref rr = rref(aug);
  for (int i = 0; i < n; ++i)
    if (i >= (int)rr.pivot_cols.size() || rr.pivot_cols[i] != i) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b, const std::vector<int>* col_order) {
  if ((int)b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  const int n = a.cols();
  Mat aug(a.rows(), n + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  std::vector<int> order;
  if (col_order) {
    order = *col_order;
    order.push_back(n);  // never pivot on the rhs
  } else {
    order.resize(n + 1);
    for (int i = 0; i <= n; ++i) order[i] = i;
  }
  Rref rr = rref(aug, &order);
  for (int c : rr.pivot_cols)
    if (c == n) return std::nullopt;
  Vec x(n, Rat(0));
  for (int r = 0; r < rr.rank; ++r) x[rr.pivot_cols[r]] = rr.r.at(r, n);
  return x;
}

void RowSpace::insert(const Vec& v) {
  if ((int)v.size() != cols_) throw std::invalid_argument("RowSpace: size mismatch");
  Vec w = reduce(v);
  int p = -1;
  for (int c = 0; c < cols_; ++c)
    if (w[c] != 0) {
      p = c;
      break;
    }
  if (p < 0) return;
  Rat inv = Rat(1) / w[p];
  for (auto& x : w) x *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = rows_[r][p];
    if (f == 0) continue;
    for (int c = 0; c < cols_; ++c) rows_[r][c] -= f * w[c];
  }
  // keep rows ordered by pivot column
  std::size_t pos = 0;
  while (pos < pivot_cols_.size() && pivot_cols_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(w));
  pivot_cols_.insert(pivot_cols_.begin() + pos, p);
}

Vec RowSpace::reduce(const Vec& v) const {
  Vec w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = w[pivot_cols_[r]];
    if (f == 0) continue;
    for (int c = 0; c < cols_; ++c) w[c] -= f * rows_[r][c];
  }
  return w;
}

bool RowSpace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool RowSpace::same_space(const RowSpace& o) const {
  if (cols_ != o.cols_ || dim() != o.dim()) return false;
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Vec& a, const Rat& s) {
  Vec r(a);
  for (auto& x : r) x *= s;
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace hodgekit
