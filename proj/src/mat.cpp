#include "tatekit/mat.hpp"

#include <algorithm>

namespace tatekit {

static void check_field(const Mat& x, const Mat& y) {
  if (x.fld != y.fld) fail(errc::field_mismatch, "matrices over different prime fields");
}

Mat mul(const Mat& x, const Mat& y) {
  check_field(x, y);
  if (x.cols != y.rows) fail(errc::shape_mismatch, "mul: inner dimensions differ");
  const PrimeField f = x.fld;
  const u64 p = f.p();
  Mat r(f, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      u64 xv = x.at(i, k);
      if (!xv) continue;
      for (int j = 0; j < y.cols; ++j) {
        u64 acc = r.at(i, j) + xv * y.at(k, j) % p;
        r.at(i, j) = (u32)(acc >= p ? acc - p : acc);
      }
    }
  }
  return r;
}

Mat add(const Mat& x, const Mat& y) {
  check_field(x, y);
  if (x.rows != y.rows || x.cols != y.cols) fail(errc::shape_mismatch, "add: shapes differ");
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.fld.add(x.a[i], y.a[i]);
  return r;
}

Mat sub(const Mat& x, const Mat& y) {
  check_field(x, y);
  if (x.rows != y.rows || x.cols != y.cols) fail(errc::shape_mismatch, "sub: shapes differ");
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.fld.sub(x.a[i], y.a[i]);
  return r;
}

Mat neg(const Mat& x) {
  Mat r = x;
  for (u32& v : r.a) v = x.fld.neg(v);
  return r;
}

Mat scale(const Mat& x, u32 c) {
  Mat r = x;
  for (u32& v : r.a) v = x.fld.mul(v, c);
  return r;
}

Mat transpose(const Mat& x) {
  Mat r(x.fld, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Vec mul_vec(const Mat& x, const Vec& v) {
  if ((int)v.size() != x.cols) fail(errc::shape_mismatch, "mul_vec: size mismatch");
  Vec r(x.rows, 0);
  for (int i = 0; i < x.rows; ++i) {
    u64 acc = 0;
    for (int j = 0; j < x.cols; ++j) acc += (u64)x.at(i, j) * v[j] % x.fld.p();
    r[i] = (u32)(acc % x.fld.p());
  }
  return r;
}

Vec vec_add(PrimeField f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(PrimeField f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(PrimeField f, const Vec& a, u32 c) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (u32 x : v)
    if (x) return false;
  return true;
}

Vec get_col(const Mat& m, int j) {
  Vec r(m.rows);
  for (int i = 0; i < m.rows; ++i) r[i] = m.at(i, j);
  return r;
}

void set_col(Mat& m, int j, const Vec& v) {
  for (int i = 0; i < m.rows; ++i) m.at(i, j) = v[i];
}

Mat from_cols(PrimeField f, int rows, const std::vector<Vec>& cols) {
  Mat r(f, rows, (int)cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if ((int)cols[j].size() != rows) fail(errc::shape_mismatch, "from_cols: column length mismatch");
    for (int i = 0; i < rows; ++i) r.at(i, (int)j) = cols[j][i];
  }
  return r;
}

Mat hstack(const std::vector<Mat>& parts) {
  if (parts.empty()) fail(errc::shape_mismatch, "hstack: empty");
  int rows = parts[0].rows, cols = 0;
  for (const Mat& m : parts) {
    if (m.rows != rows) fail(errc::shape_mismatch, "hstack: row count mismatch");
    cols += m.cols;
  }
  Mat r(parts[0].fld, rows, cols);
  int off = 0;
  for (const Mat& m : parts) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < m.cols; ++j) r.at(i, off + j) = m.at(i, j);
    off += m.cols;
  }
  return r;
}

Mat vstack(const std::vector<Mat>& parts) {
  if (parts.empty()) fail(errc::shape_mismatch, "vstack: empty");
  int cols = parts[0].cols, rows = 0;
  for (const Mat& m : parts) {
    if (m.cols != cols) fail(errc::shape_mismatch, "vstack: column count mismatch");
    rows += m.rows;
  }
  Mat r(parts[0].fld, rows, cols);
  int off = 0;
  for (const Mat& m : parts) {
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(off + i, j) = m.at(i, j);
    off += m.rows;
  }
  return r;
}

Mat select_cols(const Mat& m, const std::vector<int>& idx) {
  Mat r(m.fld, m.rows, (int)idx.size());
  for (size_t j = 0; j < idx.size(); ++j)
    for (int i = 0; i < m.rows; ++i) r.at(i, (int)j) = m.at(i, idx[j]);
  return r;
}

std::pair<Mat, std::vector<int>> rref(const Mat& m) {
  Mat r = m;
  const PrimeField f = r.fld;
  std::vector<int> piv;
  int pr = 0;
  for (int c = 0; c < r.cols && pr < r.rows; ++c) {
    int sel = -1;
    for (int i = pr; i < r.rows; ++i)
      if (r.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = 0; j < r.cols; ++j) std::swap(r.at(sel, j), r.at(pr, j));
    u32 s = f.inv(r.at(pr, c));
    if (s != 1)
      for (int j = c; j < r.cols; ++j) r.at(pr, j) = f.mul(r.at(pr, j), s);
    for (int i = 0; i < r.rows; ++i) {
      if (i == pr) continue;
      u32 v = r.at(i, c);
      if (!v) continue;
      for (int j = c; j < r.cols; ++j) r.at(i, j) = f.sub(r.at(i, j), f.mul(v, r.at(pr, j)));
    }
    piv.push_back(c);
    ++pr;
  }
  return {r, piv};
}

int rank(const Mat& m) {
  // forward elimination only, destructive on a copy
  Mat r = m;
  const PrimeField f = r.fld;
  int rk = 0;
  for (int c = 0; c < r.cols && rk < r.rows; ++c) {
    int sel = -1;
    for (int i = rk; i < r.rows; ++i)
      if (r.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != rk)
      for (int j = c; j < r.cols; ++j) std::swap(r.at(sel, j), r.at(rk, j));
    u32 s = f.inv(r.at(rk, c));
    for (int i = rk + 1; i < r.rows; ++i) {
      u32 v = r.at(i, c);
      if (!v) continue;
      u32 t = f.mul(v, s);
      for (int j = c; j < r.cols; ++j) r.at(i, j) = f.sub(r.at(i, j), f.mul(t, r.at(rk, j)));
    }
    ++rk;
  }
  return rk;
}

Mat kernel_basis(const Mat& m) {
  auto [r, piv] = rref(m);
  const PrimeField f = m.fld;
  std::vector<char> is_piv(m.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Mat k(f, m.cols, (int)free_cols.size());
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.at(fc, (int)j) = 1;
    for (size_t t = 0; t < piv.size(); ++t) k.at(piv[t], (int)j) = f.neg(r.at((int)t, fc));
  }
  return k;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  check_field(m, b);
  if (m.rows != b.rows) fail(errc::shape_mismatch, "solve: rhs row count mismatch");
  Mat aug = hstack({m, b});
  auto [r, piv] = rref(aug);
  for (int c : piv)
    if (c >= m.cols) return std::nullopt;
  Mat x(m.fld, m.cols, b.cols);
  for (size_t t = 0; t < piv.size(); ++t)
    for (int j = 0; j < b.cols; ++j) x.at(piv[t], j) = r.at((int)t, m.cols + j);
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  auto x = solve(m, Mat::identity(m.fld, m.rows));
  if (!x) return std::nullopt;
  if (!(mul(m, *x) == Mat::identity(m.fld, m.rows))) return std::nullopt;
  return x;
}

RowBasis row_basis_from_columns(const Mat& span_cols) {
  auto [r, piv] = rref(transpose(span_cols));
  RowBasis rb;
  rb.rows = Mat(span_cols.fld, (int)piv.size(), span_cols.rows);
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < span_cols.rows; ++j) rb.rows.at((int)i, j) = r.at((int)i, j);
  rb.pivots = piv;
  std::vector<char> is_piv(span_cols.rows, 0);
  for (int c : piv) is_piv[c] = 1;
  for (int c = 0; c < span_cols.rows; ++c)
    if (!is_piv[c]) rb.complement.push_back(c);
  return rb;
}

Vec RowBasis::reduce(const Vec& v) const {
  const PrimeField f = rows.fld;
  Vec r = v;
  for (int t = 0; t < dim(); ++t) {
    u32 c = r[pivots[t]];
    if (!c) continue;
    for (int j = 0; j < ambient(); ++j) r[j] = f.sub(r[j], f.mul(c, rows.at(t, j)));
  }
  return r;
}

Vec RowBasis::project(const Vec& v) const {
  Vec red = reduce(v);
  Vec r(complement.size());
  for (size_t i = 0; i < complement.size(); ++i) r[i] = red[complement[i]];
  return r;
}

bool RowBasis::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

Mat basis_cols(const RowBasis& rb) { return transpose(rb.rows); }

Mat projection_matrix(const RowBasis& rb) {
  Mat p(rb.rows.fld, (int)rb.complement.size(), rb.ambient());
  for (int j = 0; j < rb.ambient(); ++j) {
    Vec e(rb.ambient(), 0);
    e[j] = 1;
    Vec q = rb.project(e);
    for (size_t i = 0; i < q.size(); ++i) p.at((int)i, j) = q[i];
  }
  return p;
}

Mat embedding_matrix(const RowBasis& rb) {
  Mat e(rb.rows.fld, rb.ambient(), (int)rb.complement.size());
  for (size_t i = 0; i < rb.complement.size(); ++i) e.at(rb.complement[i], (int)i) = 1;
  return e;
}

}  // namespace tatekit
