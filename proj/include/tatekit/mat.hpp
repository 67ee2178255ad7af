#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tatekit/fp.hpp"

namespace tatekit {

using Vec = std::vector<u32>;

// Dense row-major matrix over F_p. Entries are canonical residues.
struct Mat {
  PrimeField fld{2};
  int rows = 0, cols = 0;
  std::vector<u32> a;

  Mat() = default;
  Mat(PrimeField f, int r, int c) : fld(f), rows(r), cols(c), a((size_t)r * c, 0) {}

  u32& at(int i, int j) { return a[(size_t)i * cols + j]; }
  u32 at(int i, int j) const { return a[(size_t)i * cols + j]; }

  static Mat zero(PrimeField f, int r, int c) { return Mat(f, r, c); }
  static Mat identity(PrimeField f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_zero() const {
    for (u32 v : a)
      if (v) return false;
    return true;
  }
  bool operator==(const Mat& o) const {
    return fld == o.fld && rows == o.rows && cols == o.cols && a == o.a;
  }
};

Mat mul(const Mat& x, const Mat& y);
Mat add(const Mat& x, const Mat& y);
Mat sub(const Mat& x, const Mat& y);
Mat neg(const Mat& x);
Mat scale(const Mat& x, u32 c);
Mat transpose(const Mat& x);

Vec mul_vec(const Mat& x, const Vec& v);
Vec vec_add(PrimeField f, const Vec& a, const Vec& b);
Vec vec_sub(PrimeField f, const Vec& a, const Vec& b);
Vec vec_scale(PrimeField f, const Vec& a, u32 c);
bool vec_is_zero(const Vec& v);

Vec get_col(const Mat& m, int j);
void set_col(Mat& m, int j, const Vec& v);
Mat from_cols(PrimeField f, int rows, const std::vector<Vec>& cols);
Mat hstack(const std::vector<Mat>& parts);
Mat vstack(const std::vector<Mat>& parts);
Mat select_cols(const Mat& m, const std::vector<int>& idx);

// Reduced row echelon form with deterministic pivoting: scan columns left to
// right, take the first nonzero entry at or below the current pivot row.
// Returns the reduced matrix and the pivot column indices in order.
std::pair<Mat, std::vector<int>> rref(const Mat& m);

int rank(const Mat& m);

// Columns form a basis of the right null space {v : m v = 0}.
// Basis vectors are indexed by the free (non-pivot) columns in ascending
// order, each with a 1 in its free coordinate.
Mat kernel_basis(const Mat& m);

// Solve m X = b for one X if consistent (free coordinates set to zero).
std::optional<Mat> solve(const Mat& m, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

// Canonical form of a subspace of k^n: reduced row-echelon basis rows.
// reduce() maps a vector to its unique coset representative supported away
// from the pivot coordinates; project() restricts that representative to the
// complement coordinates, giving canonical quotient coordinates.
struct RowBasis {
  Mat rows;                    // r x n, rref with no zero rows
  std::vector<int> pivots;     // size r
  std::vector<int> complement; // size n - r, ascending

  int ambient() const { return rows.cols; }
  int dim() const { return rows.rows; }

  Vec reduce(const Vec& v) const;
  Vec project(const Vec& v) const;
  bool contains(const Vec& v) const;
};

RowBasis row_basis_from_columns(const Mat& span_cols);

// ambient x dim matrix whose columns are the canonical basis vectors of the subspace.
Mat basis_cols(const RowBasis& rb);

// (dim complement) x n matrix of the projection k^n -> quotient coordinates.
Mat projection_matrix(const RowBasis& rb);

// n x (dim complement) embedding of quotient coordinates as standard vectors.
Mat embedding_matrix(const RowBasis& rb);

}  // namespace tatekit
