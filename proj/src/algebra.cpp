#include "tatekit/algebra.hpp"

#include <algorithm>
#include <map>

namespace tatekit {

Vec Algebra::mul_elems(const Vec& x, const Vec& y) const {
  Vec r(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < dim; ++j) {
      if (!y[j]) continue;
      u32 c = fld.mul(x[i], y[j]);
      const Vec& prod = sc[i][j];
      for (int k = 0; k < dim; ++k)
        if (prod[k]) r[k] = fld.add(r[k], fld.mul(c, prod[k]));
    }
  }
  return r;
}

Mat Algebra::lmul_of(const Vec& x) const {
  Mat r(fld, dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (size_t t = 0; t < lmul[i].a.size(); ++t)
      r.a[t] = fld.add(r.a[t], fld.mul(x[i], lmul[i].a[t]));
  }
  return r;
}

u32 Algebra::residue(const Vec& x) const {
  Vec red = radical.reduce(x);
  return fld.mul(residue_scale, red[radical.complement[0]]);
}

namespace {

Vec pow_elem(const Algebra& a, const Vec& v, u64 e) {
  Vec r = a.unit;
  Vec base = v;
  while (e) {
    if (e & 1) r = a.mul_elems(r, base);
    base = a.mul_elems(base, base);
    e >>= 1;
  }
  return r;
}

// Nilpotent part of a commutative algebra over the prime field: x -> x^p is
// F_p-linear, and an element is nilpotent iff its p^k-th power vanishes once
// p^k reaches dim. The kernel of the iterated Frobenius map is the nilradical.
Mat nilradical_cols(const Algebra& a) {
  Mat frob(a.fld, a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    Vec e(a.dim, 0);
    e[i] = 1;
    set_col(frob, i, pow_elem(a, e, a.fld.p()));
  }
  int k = 0;
  u64 pk = 1;
  while (pk < (u64)a.dim) {
    pk *= a.fld.p();
    ++k;
  }
  Mat it = Mat::identity(a.fld, a.dim);
  for (int t = 0; t < k; ++t) it = mul(frob, it);
  return kernel_basis(it);
}

// Columns of S span a submodule of the regular module; pick the columns that
// minimally generate it as an ideal (first independent modulo m*span + earlier picks).
std::vector<int> ideal_min_gen_columns(const Algebra& a, const Mat& rad_cols, const Mat& S) {
  if (S.cols == 0) return {};
  std::vector<Mat> parts;
  for (int j = 0; j < rad_cols.cols; ++j) parts.push_back(mul(a.lmul_of(get_col(rad_cols, j)), S));
  parts.push_back(S);
  auto [r, piv] = rref(hstack(parts));
  (void)r;
  int offset = rad_cols.cols * S.cols;
  std::vector<int> out;
  for (int c : piv)
    if (c >= offset) out.push_back(c - offset);
  return out;
}

}  // namespace

AlgebraPtr algebra_from_structure_constants(PrimeField fld, std::vector<std::string> labels,
                                            std::vector<std::vector<Vec>> sc, Vec unit,
                                            std::string name) {
  auto a = std::make_shared<Algebra>();
  a->fld = fld;
  a->dim = (int)labels.size();
  if (a->dim < 1) fail(errc::bad_dimension, "algebra dimension must be at least 1");
  a->labels = std::move(labels);
  if ((int)sc.size() != a->dim) fail(errc::shape_mismatch, "structure constant table has wrong size");
  for (auto& row : sc) {
    if ((int)row.size() != a->dim) fail(errc::shape_mismatch, "structure constant row has wrong size");
    for (auto& v : row) {
      if ((int)v.size() != a->dim) fail(errc::shape_mismatch, "structure constant vector has wrong size");
      for (u32& x : v) x %= fld.p();
    }
  }
  a->sc = std::move(sc);
  if ((int)unit.size() != a->dim) fail(errc::bad_unit, "unit vector has wrong length");
  for (u32& x : unit) x %= fld.p();
  a->unit = std::move(unit);
  a->name = name.empty() ? ("algebra(p=" + std::to_string(fld.p()) + ",dim=" + std::to_string(a->dim) + ")")
                         : std::move(name);

  // commutativity first; later checks assume it
  for (int i = 0; i < a->dim; ++i)
    for (int j = i + 1; j < a->dim; ++j)
      if (a->sc[i][j] != a->sc[j][i])
        fail(errc::non_commutative,
             a->name + ": " + a->labels[i] + "*" + a->labels[j] + " differs from " + a->labels[j] +
                 "*" + a->labels[i]);

  a->lmul.reserve(a->dim);
  for (int i = 0; i < a->dim; ++i) {
    Mat l(fld, a->dim, a->dim);
    for (int j = 0; j < a->dim; ++j) set_col(l, j, a->sc[i][j]);
    a->lmul.push_back(std::move(l));
  }

  if (!(a->lmul_of(a->unit) == Mat::identity(fld, a->dim)))
    fail(errc::bad_unit, a->name + ": unit element does not act as identity");

  // exhaustive associativity: (b_i b_j) b_l = b_i (b_j b_l) for all triples,
  // phrased as one operator identity per ordered pair
  for (int i = 0; i < a->dim; ++i)
    for (int j = 0; j < a->dim; ++j)
      if (!(mul(a->lmul[i], a->lmul[j]) == a->lmul_of(a->sc[i][j])))
        fail(errc::non_associative,
             a->name + ": associativity fails at pair (" + a->labels[i] + ", " + a->labels[j] + ")");

  Mat rad = nilradical_cols(*a);
  if (rad.cols != a->dim - 1)
    fail(errc::non_local, a->name + ": nilpotents span dimension " + std::to_string(rad.cols) +
                              ", expected codimension 1");
  a->radical = row_basis_from_columns(rad);
  a->radical_cols = basis_cols(a->radical);

  for (int j : ideal_min_gen_columns(*a, a->radical_cols, a->radical_cols))
    a->mgens.push_back(get_col(a->radical_cols, j));
  for (const Vec& g : a->mgens) a->mgen_lmul.push_back(a->lmul_of(g));

  if (a->mgens.empty()) {
    a->socle_cols = Mat::identity(fld, a->dim);  // A = k
  } else {
    std::vector<Mat> stacked = a->mgen_lmul;
    a->socle_cols = kernel_basis(vstack(stacked));
  }
  a->gorenstein = (a->socle_cols.cols == 1);

  u32 lam = a->radical.reduce(a->unit)[a->radical.complement[0]];
  a->residue_scale = fld.inv(lam);
  return a;
}

namespace {

struct MonomialBasis {
  std::vector<std::vector<int>> expo;          // basis exponent tuples in order
  std::map<std::vector<int>, int> index;       // tuple -> basis position
  std::vector<int> caps;                       // minimal pure power per variable
};

bool divisible_by_any(const std::vector<int>& e, const std::vector<std::vector<int>>& gens) {
  for (const auto& g : gens) {
    bool div = true;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] < g[i]) {
        div = false;
        break;
      }
    if (div) return true;
  }
  return false;
}

std::string monomial_label(const std::vector<std::string>& vars, const std::vector<int>& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

MonomialBasis standard_monomials(const std::vector<std::string>& vars,
                                 const std::vector<std::vector<int>>& gens) {
  size_t v = vars.size();
  MonomialBasis mb;
  mb.caps.assign(v, -1);
  for (const auto& g : gens) {
    if (g.size() != v) fail(errc::shape_mismatch, "monomial generator has wrong arity");
    int nz = -1;
    bool pure = true;
    for (size_t i = 0; i < v; ++i) {
      if (g[i] < 0) fail(errc::bad_input, "negative exponent");
      if (g[i] > 0) {
        if (nz >= 0) pure = false;
        nz = (int)i;
      }
    }
    if (nz < 0) fail(errc::improper_ideal, "monomial ideal contains 1");
    if (pure && (mb.caps[nz] < 0 || g[nz] < mb.caps[nz])) mb.caps[nz] = g[nz];
  }
  for (size_t i = 0; i < v; ++i)
    if (mb.caps[i] < 0)
      fail(errc::bad_dimension, "no pure power of " + vars[i] + ": quotient is not finite-dimensional");

  // enumerate exponent boxes, keep standard monomials, order by degree then
  // lexicographically (x before y within a degree)
  std::vector<std::vector<int>> all;
  std::vector<int> e(v, 0);
  while (true) {
    if (!divisible_by_any(e, gens)) all.push_back(e);
    size_t i = 0;
    for (; i < v; ++i) {
      if (++e[i] < mb.caps[i]) break;
      e[i] = 0;
    }
    if (i == v) break;
  }
  std::sort(all.begin(), all.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
    int dx = 0, dy = 0;
    for (int t : x) dx += t;
    for (int t : y) dy += t;
    if (dx != dy) return dx < dy;
    return x > y;  // within a degree, higher x-exponent first
  });
  mb.expo = std::move(all);
  for (size_t i = 0; i < mb.expo.size(); ++i) mb.index[mb.expo[i]] = (int)i;
  return mb;
}

AlgebraPtr from_monomials(PrimeField fld, const std::vector<std::string>& vars,
                          const std::vector<std::vector<int>>& gens, const std::string& name) {
  MonomialBasis mb = standard_monomials(vars, gens);
  int n = (int)mb.expo.size();
  std::vector<std::string> labels;
  for (const auto& e : mb.expo) labels.push_back(monomial_label(vars, e));
  std::vector<std::vector<Vec>> sc(n, std::vector<Vec>(n, Vec(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> s(vars.size());
      for (size_t t = 0; t < vars.size(); ++t) s[t] = mb.expo[i][t] + mb.expo[j][t];
      bool over = false;
      for (size_t t = 0; t < vars.size(); ++t)
        if (s[t] >= mb.caps[t]) over = true;
      if (over || divisible_by_any(s, gens)) continue;  // product is zero
      sc[i][j][mb.index.at(s)] = 1;
    }
  Vec unit(n, 0);
  unit[mb.index.at(std::vector<int>(vars.size(), 0))] = 1;
  return algebra_from_structure_constants(fld, std::move(labels), std::move(sc), std::move(unit),
                                          name);
}

}  // namespace

std::vector<std::string> default_variable_names(size_t v) {
  static const char* few[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  if (v <= 4)
    for (size_t i = 0; i < v; ++i) out.push_back(few[i]);
  else
    for (size_t i = 0; i < v; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

AlgebraPtr monomial_complete_intersection(PrimeField fld, std::vector<int> powers,
                                          std::vector<std::string> vars) {
  if (powers.empty()) fail(errc::bad_dimension, "need at least one variable");
  if (vars.empty()) vars = default_variable_names(powers.size());
  if (vars.size() != powers.size()) fail(errc::shape_mismatch, "variable/power count mismatch");
  std::vector<std::vector<int>> gens;
  std::string ideal_str;
  for (size_t i = 0; i < powers.size(); ++i) {
    if (powers[i] < 1) fail(errc::bad_input, "powers must be positive");
    std::vector<int> g(powers.size(), 0);
    g[i] = powers[i];
    gens.push_back(g);
    if (!ideal_str.empty()) ideal_str += ",";
    ideal_str += vars[i] + (powers[i] > 1 ? "^" + std::to_string(powers[i]) : "");
  }
  std::string vars_str;
  for (const auto& v : vars) {
    if (!vars_str.empty()) vars_str += ",";
    vars_str += v;
  }
  std::string name =
      "F" + std::to_string(fld.p()) + "[" + vars_str + "]/(" + ideal_str + ")";
  return from_monomials(fld, vars, gens, name);
}

AlgebraPtr monomial_quotient(PrimeField fld, std::vector<std::string> vars,
                             std::vector<std::vector<int>> gen_exponents) {
  if (vars.empty()) fail(errc::bad_dimension, "need at least one variable");
  std::string vars_str, ideal_str;
  for (const auto& v : vars) {
    if (!vars_str.empty()) vars_str += ",";
    vars_str += v;
  }
  for (const auto& g : gen_exponents) {
    if (!ideal_str.empty()) ideal_str += ",";
    ideal_str += monomial_label(vars, g);
  }
  std::string name =
      "F" + std::to_string(fld.p()) + "[" + vars_str + "]/(" + ideal_str + ")";
  return from_monomials(fld, vars, gen_exponents, name);
}

bool is_gorenstein(const Algebra& a) { return a.gorenstein; }

bool same_algebra(const Algebra& x, const Algebra& y) {
  if (&x == &y) return true;
  return x.fld == y.fld && x.dim == y.dim && x.sc == y.sc && x.unit == y.unit;
}

int label_index(const Algebra& a, const std::string& label) {
  for (int i = 0; i < a.dim; ++i)
    if (a.labels[i] == label) return i;
  return -1;
}

Vec label_vec(const Algebra& a, const std::string& label) {
  int i = label_index(a, label);
  if (i < 0) fail(errc::bad_input, "no basis element labeled " + label + " in " + a.name);
  Vec v(a.dim, 0);
  v[i] = 1;
  return v;
}

Ideal ideal_from_generators(AlgebraPtr a, std::vector<Vec> gens) {
  Ideal i;
  i.alg = a;
  for (auto& g : gens) {
    if ((int)g.size() != a->dim) fail(errc::shape_mismatch, "ideal generator has wrong length");
    for (u32& x : g) x %= a->fld.p();
  }
  i.gens = std::move(gens);
  if (i.gens.empty()) {
    i.span = row_basis_from_columns(Mat(a->fld, a->dim, 0));
    return i;
  }
  std::vector<Mat> parts;
  for (const Vec& g : i.gens) parts.push_back(a->lmul_of(g));
  i.span = row_basis_from_columns(hstack(parts));
  return i;
}

Ideal ideal_from_span(AlgebraPtr a, const Mat& span_cols) {
  RowBasis rb = row_basis_from_columns(span_cols);
  Mat cols = basis_cols(rb);
  // closure under the algebra action; generators of m suffice
  for (const Mat& gl : a->mgen_lmul) {
    Mat moved = mul(gl, cols);
    for (int j = 0; j < moved.cols; ++j)
      if (!rb.contains(get_col(moved, j)))
        fail(errc::improper_ideal, "subspace is not closed under multiplication");
  }
  Ideal i;
  i.alg = a;
  i.span = rb;
  for (int j : ideal_min_gen_columns(*a, a->radical_cols, cols)) i.gens.push_back(get_col(cols, j));
  // a subspace containing a unit is the whole ring; minimal generators then
  // reduce to the unit itself
  if (rb.dim() == a->dim) i.gens = {a->unit};
  return i;
}

Ideal zero_ideal(AlgebraPtr a) { return ideal_from_generators(a, {}); }

Ideal maximal_ideal(AlgebraPtr a) {
  std::vector<Vec> gens = a->mgens;
  return ideal_from_generators(a, std::move(gens));
}

Ideal socle_ideal(AlgebraPtr a) { return ideal_from_span(a, a->socle_cols); }

bool ideal_equal(const Ideal& x, const Ideal& y) {
  if (x.span.dim() != y.span.dim()) return false;
  Mat xb = basis_cols(x.span);
  for (int j = 0; j < xb.cols; ++j)
    if (!y.span.contains(get_col(xb, j))) return false;
  return true;
}

Ideal annihilator_ideal(const Ideal& i) {
  const Algebra& a = *i.alg;
  if (i.gens.empty()) {
    // (0 : 0) is the whole ring
    return ideal_from_span(i.alg, Mat::identity(a.fld, a.dim));
  }
  std::vector<Mat> parts;
  for (const Vec& g : i.gens) parts.push_back(a.lmul_of(g));
  return ideal_from_span(i.alg, kernel_basis(vstack(parts)));
}

QuotientAlgebra quotient_algebra(AlgebraPtr a, const Ideal& i, std::string name) {
  if (i.span.dim() == a->dim) fail(errc::improper_ideal, "cannot quotient by the whole ring");
  if (i.span.dim() == 0) return {a, Mat::identity(a->fld, a->dim)};
  const RowBasis& rb = i.span;
  int q = (int)rb.complement.size();
  std::vector<std::string> labels;
  for (int c : rb.complement) labels.push_back(a->labels[c]);
  std::vector<std::vector<Vec>> sc(q, std::vector<Vec>(q));
  for (int bi = 0; bi < q; ++bi)
    for (int bj = 0; bj < q; ++bj) {
      Vec x(a->dim, 0), y(a->dim, 0);
      x[rb.complement[bi]] = 1;
      y[rb.complement[bj]] = 1;
      sc[bi][bj] = rb.project(a->mul_elems(x, y));
    }
  Vec unit = rb.project(a->unit);
  if (name.empty()) name = a->name + "/(ideal dim " + std::to_string(rb.dim()) + ")";
  QuotientAlgebra out;
  out.alg = algebra_from_structure_constants(a->fld, std::move(labels), std::move(sc),
                                             std::move(unit), std::move(name));
  out.projection = projection_matrix(rb);
  return out;
}

}  // namespace tatekit
