#include "tatekit/module.hpp"

#include <random>

namespace tatekit {

namespace {

// Fast path for constructions whose operators are correct by shape
// (block-diagonal, transposed, conjugated). Shapes are still checked.
Module trusted(AlgebraPtr a, std::vector<Mat> action, std::string name) {
  Module m;
  m.alg = std::move(a);
  m.kdim = action.empty() ? 0 : action[0].rows;
  m.action = std::move(action);
  m.name = std::move(name);
  for (const Mat& x : m.action)
    if (x.rows != m.kdim || x.cols != m.kdim)
      fail(errc::shape_mismatch, "operator shapes disagree in " + m.name);
  return m;
}

void check_same_algebra(const Module& m, const Module& n) {
  if (!m.alg || !n.alg || !same_algebra(*m.alg, *n.alg))
    fail(errc::bad_input, "modules live over different algebras");
}

// Ensures span_cols is closed under the action before sub/quotient formation.
RowBasis invariant_span(const Module& m, const Mat& span_cols) {
  if (span_cols.rows != m.kdim)
    fail(errc::shape_mismatch, "span has wrong ambient dimension");
  RowBasis rb = row_basis_from_columns(span_cols);
  Mat bas = basis_cols(rb);
  for (const Vec& g : m.alg->mgens) {
    Mat op = m.act(g);
    for (int t = 0; t < rb.dim(); ++t)
      if (!rb.contains(mul_vec(op, get_col(bas, t))))
        fail(errc::non_invariant_subspace,
             "subspace of " + m.name + " is not closed under the action");
  }
  return rb;
}

}  // namespace

Mat Module::act(const Vec& a) const {
  if ((int)a.size() != alg->dim) fail(errc::shape_mismatch, "element has wrong length");
  Mat r = Mat::zero(alg->fld, kdim, kdim);
  for (int i = 0; i < alg->dim; ++i) {
    if (a[i] == 0) continue;
    r = add(r, scale(action[i], a[i]));
  }
  return r;
}

void validate_module(const Module& m) {
  if (!m.alg) fail(errc::bad_input, "module has no algebra");
  const Algebra& a = *m.alg;
  if ((int)m.action.size() != a.dim)
    fail(errc::shape_mismatch, "need one operator per basis element");
  for (const Mat& x : m.action) {
    if (!(x.fld == a.fld)) fail(errc::field_mismatch, "operator over the wrong field");
    if (x.rows != m.kdim || x.cols != m.kdim)
      fail(errc::shape_mismatch, "operators must be square of size kdim");
  }
  if (!(m.act(a.unit) == Mat::identity(a.fld, m.kdim)))
    fail(errc::not_a_module, "unit does not act as the identity on " + m.name);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (!(mul(m.action[i], m.action[j]) == m.act(a.sc[i][j])))
        fail(errc::not_a_module,
             "operators of " + m.name + " do not follow the multiplication table");
}

Module make_module(AlgebraPtr a, std::vector<Mat> action, std::string name) {
  Module m = trusted(std::move(a), std::move(action), std::move(name));
  validate_module(m);
  return m;
}

Module zero_module(AlgebraPtr a) {
  std::vector<Mat> act(a->dim, Mat::zero(a->fld, 0, 0));
  return trusted(std::move(a), std::move(act), "0");
}

Module free_module(AlgebraPtr a, int rank) {
  if (rank < 0) fail(errc::bad_dimension, "free rank must be nonnegative");
  const int d = a->dim;
  const int n = rank * d;
  std::vector<Mat> act;
  act.reserve(d);
  for (int i = 0; i < d; ++i) {
    Mat b = Mat::zero(a->fld, n, n);
    for (int l = 0; l < rank; ++l)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) b.at(l * d + r, l * d + c) = a->lmul[i].at(r, c);
    act.push_back(std::move(b));
  }
  std::string name = rank == 1 ? "A" : "A^" + std::to_string(rank);
  return trusted(std::move(a), std::move(act), std::move(name));
}

Module residue_field(AlgebraPtr a) {
  std::vector<Mat> act;
  for (int i = 0; i < a->dim; ++i) {
    Vec e(a->dim, 0);
    e[i] = 1;
    Mat m(a->fld, 1, 1);
    m.at(0, 0) = a->residue(e);
    act.push_back(m);
  }
  return trusted(std::move(a), std::move(act), "k");
}

Module cyclic_module(AlgebraPtr a, const Ideal& rel, std::string name) {
  if (!same_algebra(*a, *rel.alg)) fail(errc::bad_input, "ideal over a different algebra");
  Mat span = basis_cols(rel.span);
  auto q = quotient_module(free_module(a, 1), span);
  q.quot.name = name.empty() ? "A/I" : std::move(name);
  return q.quot;
}

Module direct_sum(const Module& m, const Module& n) {
  check_same_algebra(m, n);
  const int d = m.alg->dim;
  std::vector<Mat> act;
  for (int i = 0; i < d; ++i) {
    Mat b = Mat::zero(m.alg->fld, m.kdim + n.kdim, m.kdim + n.kdim);
    for (int r = 0; r < m.kdim; ++r)
      for (int c = 0; c < m.kdim; ++c) b.at(r, c) = m.action[i].at(r, c);
    for (int r = 0; r < n.kdim; ++r)
      for (int c = 0; c < n.kdim; ++c) b.at(m.kdim + r, m.kdim + c) = n.action[i].at(r, c);
    act.push_back(std::move(b));
  }
  return trusted(m.alg, std::move(act), m.name + "+" + n.name);
}

Module matlis_dual(const Module& m) {
  // (a f)(u) = f(a u), so operators transpose; commutativity keeps the table.
  std::vector<Mat> act;
  for (const Mat& x : m.action) act.push_back(transpose(x));
  return trusted(m.alg, std::move(act), m.name + "^v");
}

Module conjugate(const Module& m, const Mat& p) {
  if (p.rows != m.kdim || p.cols != m.kdim)
    fail(errc::shape_mismatch, "basis change has wrong shape");
  auto pi = inverse(p);
  if (!pi) fail(errc::bad_input, "basis change must be invertible");
  std::vector<Mat> act;
  for (const Mat& x : m.action) act.push_back(mul(p, mul(x, *pi)));
  return trusted(m.alg, std::move(act), m.name);
}

Module tensor_product(const Module& m, const Module& n) {
  check_same_algebra(m, n);
  const PrimeField f = m.alg->fld;
  const int mk = m.kdim, nk = n.kdim, big = mk * nk;
  // Relation subspace: (g u) x v - u x (g v) over the ideal generators of m;
  // these relations already force a x id = id x a for every algebra element.
  std::vector<Vec> rel;
  for (const Vec& g : m.alg->mgens) {
    Mat gm = m.act(g), gn = n.act(g);
    for (int i = 0; i < mk; ++i)
      for (int j = 0; j < nk; ++j) {
        Vec r(big, 0);
        for (int a = 0; a < mk; ++a) r[a * nk + j] = gm.at(a, i);
        for (int b = 0; b < nk; ++b) r[i * nk + b] = f.sub(r[i * nk + b], gn.at(b, j));
        rel.push_back(std::move(r));
      }
  }
  RowBasis rb = row_basis_from_columns(from_cols(f, big, rel));
  Mat p = projection_matrix(rb), e = embedding_matrix(rb);
  std::vector<Mat> act;
  for (int bi = 0; bi < m.alg->dim; ++bi) {
    Mat lift = Mat::zero(f, big, big);  // action through the left factor
    for (int i = 0; i < mk; ++i)
      for (int a = 0; a < mk; ++a) {
        u32 v = m.action[bi].at(i, a);
        if (v == 0) continue;
        for (int j = 0; j < nk; ++j) lift.at(i * nk + j, a * nk + j) = v;
      }
    act.push_back(mul(p, mul(lift, e)));
  }
  return make_module(m.alg, std::move(act), m.name + " (x) " + n.name);
}

std::vector<Mat> hom_space(const Module& m, const Module& n) {
  check_same_algebra(m, n);
  const PrimeField f = m.alg->fld;
  const int mk = m.kdim, nk = n.kdim, vars = nk * mk;
  if (vars == 0) return {};
  // One block of constraints per ideal generator g: F rho_m(g) = rho_n(g) F.
  std::vector<Mat> blocks;
  for (const Vec& g : m.alg->mgens) {
    Mat gm = m.act(g), gn = n.act(g);
    Mat c = Mat::zero(f, vars, vars);  // row (i,l); unknown F[a][b] at a*mk+b
    for (int i = 0; i < nk; ++i)
      for (int l = 0; l < mk; ++l) {
        int row = i * mk + l;
        for (int b = 0; b < mk; ++b)
          c.at(row, i * mk + b) = f.add(c.at(row, i * mk + b), gm.at(b, l));
        for (int a = 0; a < nk; ++a)
          c.at(row, a * mk + l) = f.sub(c.at(row, a * mk + l), gn.at(i, a));
      }
    blocks.push_back(std::move(c));
  }
  Mat k = kernel_basis(blocks.empty() ? Mat::zero(f, 0, vars) : vstack(blocks));
  std::vector<Mat> basis;
  for (int j = 0; j < k.cols; ++j) {
    Mat h(f, nk, mk);
    for (int i = 0; i < nk; ++i)
      for (int l = 0; l < mk; ++l) h.at(i, l) = k.at(i * mk + l, j);
    basis.push_back(std::move(h));
  }
  return basis;
}

bool is_equivariant(const Module& src, const Module& tgt, const Mat& f) {
  if (f.rows != tgt.kdim || f.cols != src.kdim) return false;
  for (const Vec& g : src.alg->mgens)
    if (!(mul(f, src.act(g)) == mul(tgt.act(g), f))) return false;
  return true;
}

ModuleHom make_hom(Module src, Module tgt, Mat f) {
  check_same_algebra(src, tgt);
  if (f.rows != tgt.kdim || f.cols != src.kdim)
    fail(errc::shape_mismatch, "homomorphism has wrong shape");
  if (!is_equivariant(src, tgt, f))
    fail(errc::not_a_module, "matrix is not A-linear");
  return ModuleHom{std::move(src), std::move(tgt), std::move(f)};
}

SubmoduleData submodule(const Module& m, const Mat& span_cols) {
  RowBasis rb = invariant_span(m, span_cols);
  Mat inc = basis_cols(rb);
  const int s = rb.dim();
  std::vector<Mat> act;
  for (int bi = 0; bi < m.alg->dim; ++bi) {
    Mat b(m.alg->fld, s, s);
    for (int t = 0; t < s; ++t) {
      Vec v = mul_vec(m.action[bi], get_col(inc, t));
      // rref rows carry the identity on pivot coordinates
      for (int r = 0; r < s; ++r) b.at(r, t) = v[rb.pivots[r]];
    }
    act.push_back(std::move(b));
  }
  Module sub = make_module(m.alg, std::move(act), "sub(" + m.name + ")");
  return SubmoduleData{std::move(sub), std::move(inc)};
}

QuotientModuleData quotient_module(const Module& m, const Mat& span_cols) {
  RowBasis rb = invariant_span(m, span_cols);
  Mat p = projection_matrix(rb), e = embedding_matrix(rb);
  std::vector<Mat> act;
  for (int bi = 0; bi < m.alg->dim; ++bi) act.push_back(mul(p, mul(m.action[bi], e)));
  Module q = make_module(m.alg, std::move(act), "quot(" + m.name + ")");
  return QuotientModuleData{std::move(q), std::move(p)};
}

RowBasis radical_subspace(const Module& m) {
  std::vector<Mat> parts;
  for (const Vec& g : m.alg->mgens) parts.push_back(m.act(g));
  if (parts.empty()) parts.push_back(Mat::zero(m.alg->fld, m.kdim, 0));
  return row_basis_from_columns(hstack(parts));
}

std::vector<int> minimal_generator_columns(const Module& m, const Mat& span_cols) {
  // Pivot columns of [ g1 S | g2 S | ... | S ] landing in the trailing block
  // are independent modulo m * span + earlier picks, so they generate
  // minimally. Requires the span to be a submodule.
  std::vector<Mat> parts;
  for (const Vec& g : m.alg->mgens) parts.push_back(mul(m.act(g), span_cols));
  const int off = (int)parts.size() * span_cols.cols;
  parts.push_back(span_cols);
  auto [r, piv] = rref(hstack(parts));
  (void)r;
  std::vector<int> picks;
  for (int c : piv)
    if (c >= off) picks.push_back(c - off);
  return picks;
}

Mat minimal_generators(const Module& m) {
  Mat id = Mat::identity(m.alg->fld, m.kdim);
  return select_cols(id, minimal_generator_columns(m, id));
}

int min_gen_count(const Module& m) { return m.kdim - radical_subspace(m).dim(); }

Mat socle_columns(const Module& m) {
  std::vector<Mat> parts;
  for (const Vec& g : m.alg->mgens) parts.push_back(m.act(g));
  if (parts.empty()) return Mat::identity(m.alg->fld, m.kdim);
  return kernel_basis(vstack(parts));
}

Ideal annihilator(const Module& m) {
  const PrimeField f = m.alg->fld;
  Mat c(f, m.kdim * m.kdim, m.alg->dim);
  for (int i = 0; i < m.alg->dim; ++i)
    for (int r = 0; r < m.kdim; ++r)
      for (int j = 0; j < m.kdim; ++j) c.at(r * m.kdim + j, i) = m.action[i].at(r, j);
  Mat k = kernel_basis(c);
  std::vector<Vec> gens;
  for (int j = 0; j < k.cols; ++j) gens.push_back(get_col(k, j));
  if (gens.empty()) return zero_ideal(m.alg);
  return ideal_from_span(m.alg, from_cols(f, m.alg->dim, gens));
}

DualData a_dual_data(const Module& m) {
  const PrimeField f = m.alg->fld;
  const int d = m.alg->dim;
  Module free1 = free_module(m.alg, 1);
  std::vector<Mat> basis = hom_space(m, free1);
  const int hd = (int)basis.size();
  Mat h(f, d * m.kdim, hd);  // columns: flattened basis functionals
  for (int j = 0; j < hd; ++j)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < m.kdim; ++c) h.at(r * m.kdim + c, j) = basis[j].at(r, c);
  std::vector<Mat> act;
  for (int bi = 0; bi < d; ++bi) {
    Mat rhs(f, d * m.kdim, hd);  // (b_i f_j) = L(b_i) f_j, expressed in the basis
    for (int j = 0; j < hd; ++j) {
      Mat lf = mul(m.alg->lmul[bi], basis[j]);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < m.kdim; ++c) rhs.at(r * m.kdim + c, j) = lf.at(r, c);
    }
    auto sol = solve(h, rhs);
    if (!sol) fail(errc::not_a_module, "dual action left the homomorphism space");
    act.push_back(std::move(*sol));
  }
  Module dual = make_module(m.alg, std::move(act), m.name + "^*");
  return DualData{std::move(dual), std::move(basis)};
}

Module a_dual(const Module& m) { return a_dual_data(m).dual; }

Mat biduality_map(const Module& m) {
  const PrimeField f = m.alg->fld;
  const int d = m.alg->dim;
  DualData star = a_dual_data(m);
  DualData dstar = a_dual_data(star.dual);
  const int hd = (int)star.basis.size(), hdd = (int)dstar.basis.size();
  Mat h(f, d * hd, hdd);
  for (int j = 0; j < hdd; ++j)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < hd; ++c) h.at(r * hd + c, j) = dstar.basis[j].at(r, c);
  Mat rhs(f, d * hd, m.kdim);  // column u: the functional f -> f(u)
  for (int u = 0; u < m.kdim; ++u)
    for (int j = 0; j < hd; ++j)
      for (int r = 0; r < d; ++r) rhs.at(r * hd + j, u) = star.basis[j].at(r, u);
  auto sol = solve(h, rhs);
  if (!sol) fail(errc::not_a_module, "evaluation map escaped the double dual");
  return *sol;
}

StripResult strip_free(const Module& m) {
  Module cur = m;
  int stripped = 0;
  for (;;) {
    if (cur.kdim == 0) break;
    Module free1 = free_module(cur.alg, 1);
    std::vector<Mat> homs = hom_space(cur, free1);
    int found = -1;
    for (int j = 0; j < (int)homs.size() && found < 0; ++j)
      for (int c = 0; c < homs[j].cols; ++c)
        if (!cur.alg->in_radical(get_col(homs[j], c))) {
          found = j;
          break;
        }
    if (found < 0) break;
    // image not inside m means onto A, so the kernel splits off
    cur = submodule(cur, kernel_basis(homs[found])).sub;
    ++stripped;
  }
  if (stripped > 0) cur.name = "stab(" + m.name + ")";
  return StripResult{std::move(cur), stripped};
}

bool is_stable(const Module& m) {
  if (m.kdim == 0) return true;
  std::vector<Mat> homs = hom_space(m, free_module(m.alg, 1));
  for (const Mat& h : homs)
    for (int c = 0; c < h.cols; ++c)
      if (!m.alg->in_radical(get_col(h, c))) return false;
  return true;
}

IsoResult is_isomorphic(const Module& m, const Module& n, const IsoOptions& opt) {
  check_same_algebra(m, n);
  const PrimeField f = m.alg->fld;
  if (m.kdim != n.kdim)
    return {IsoVerdict::no, std::nullopt, "k-dimensions differ"};
  if (m.kdim == 0) return {IsoVerdict::yes, Mat(f, 0, 0), ""};
  if (min_gen_count(m) != min_gen_count(n))
    return {IsoVerdict::no, std::nullopt, "generator counts differ"};
  for (int i = 0; i < m.alg->dim; ++i)
    if (rank(m.action[i]) != rank(n.action[i]))
      return {IsoVerdict::no, std::nullopt,
              "operator ranks differ at " + m.alg->labels[i]};
  if (socle_columns(m).cols != socle_columns(n).cols)
    return {IsoVerdict::no, std::nullopt, "socle dimensions differ"};
  if (annihilator(m).subspace_dim() != annihilator(n).subspace_dim())
    return {IsoVerdict::no, std::nullopt, "annihilators differ"};

  std::vector<Mat> homs = hom_space(m, n);
  const int hd = (int)homs.size();
  if (hd == 0) return {IsoVerdict::no, std::nullopt, "no homomorphisms at all"};

  auto combine = [&](const std::vector<u32>& c) {
    Mat t = Mat::zero(f, n.kdim, m.kdim);
    for (int j = 0; j < hd; ++j)
      if (c[j]) t = add(t, scale(homs[j], c[j]));
    return t;
  };

  // exhaustive when the coefficient space is small enough
  u64 total = 1;
  bool fits = true;
  for (int j = 0; j < hd && fits; ++j) {
    total *= f.p();
    if (total > opt.enumerate_limit) fits = false;
  }
  if (fits) {
    std::vector<u32> c(hd, 0);
    for (u64 t = 1; t < total; ++t) {
      int j = 0;
      while (true) {
        c[j] = (c[j] + 1) % f.p();
        if (c[j] != 0) break;
        ++j;
      }
      Mat cand = combine(c);
      if (rank(cand) == m.kdim) return {IsoVerdict::yes, std::move(cand), ""};
    }
    return {IsoVerdict::no, std::nullopt, "no invertible homomorphism exists"};
  }

  std::mt19937_64 rng(opt.seed);
  for (int t = 0; t < opt.samples; ++t) {
    std::vector<u32> c(hd);
    for (int j = 0; j < hd; ++j) c[j] = (u32)(rng() % f.p());
    Mat cand = combine(c);
    if (rank(cand) == m.kdim) return {IsoVerdict::yes, std::move(cand), ""};
  }
  return {IsoVerdict::undetermined, std::nullopt, "search-budget-exhausted"};
}

}  // namespace tatekit
