#include "tatekit/homology.hpp"

#include <algorithm>

namespace tatekit {

AMat AMat::zero(AlgebraPtr a, int r, int c) {
  AMat m;
  m.rows = r;
  m.cols = c;
  m.e.assign((size_t)r * c, Vec(a->dim, 0));
  m.alg = std::move(a);
  return m;
}

AMat amat_mul(const AMat& x, const AMat& y) {
  if (x.cols != y.rows) fail(errc::shape_mismatch, "free maps do not compose");
  AMat r = AMat::zero(x.alg, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (vec_is_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) =
            vec_add(x.alg->fld, r.at(i, j), x.alg->mul_elems(x.at(i, k), y.at(k, j)));
    }
  return r;
}

bool amat_is_zero(const AMat& x) {
  for (const Vec& v : x.e)
    if (!vec_is_zero(v)) return false;
  return true;
}

bool amat_entries_in_radical(const AMat& x) {
  for (const Vec& v : x.e)
    if (!x.alg->in_radical(v)) return false;
  return true;
}

Mat kmat(const AMat& x) {
  const int d = x.alg->dim;
  Mat r = Mat::zero(x.alg->fld, x.rows * d, x.cols * d);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (vec_is_zero(x.at(i, j))) continue;
      Mat op = x.alg->lmul_of(x.at(i, j));
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) r.at(i * d + a, j * d + b) = op.at(a, b);
    }
  return r;
}

AMat a_transpose(const AMat& x) {
  AMat r = AMat::zero(x.alg, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Mat hom_matrix(const AMat& d, const Module& n) {
  const int nk = n.kdim;
  Mat r = Mat::zero(n.alg->fld, d.cols * nk, d.rows * nk);
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j) {
      if (vec_is_zero(d.at(i, j))) continue;
      Mat op = n.act(d.at(i, j));
      for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nk; ++b) r.at(j * nk + a, i * nk + b) = op.at(a, b);
    }
  return r;
}

Mat tensor_matrix(const AMat& d, const Module& n) {
  const int nk = n.kdim;
  Mat r = Mat::zero(n.alg->fld, d.rows * nk, d.cols * nk);
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j) {
      if (vec_is_zero(d.at(i, j))) continue;
      Mat op = n.act(d.at(i, j));
      for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nk; ++b) r.at(i * nk + a, j * nk + b) = op.at(a, b);
    }
  return r;
}

namespace {

// k-matrix of the cover F_0 -> m sending block j to multiples of generator j
Mat cover_matrix(const Module& m, const Mat& gens) {
  const int d = m.alg->dim;
  Mat c(m.alg->fld, m.kdim, gens.cols * d);
  for (int j = 0; j < gens.cols; ++j) {
    Vec u = get_col(gens, j);
    for (int t = 0; t < d; ++t) {
      Vec v = mul_vec(m.action[t], u);
      for (int r = 0; r < m.kdim; ++r) c.at(r, j * d + t) = v[r];
    }
  }
  return c;
}

// read algebra coordinates of chosen generator columns block by block
AMat diff_from_columns(AlgebraPtr a, int tgt_rank, const Mat& gen_cols) {
  const int d = a->dim;
  AMat m = AMat::zero(a, tgt_rank, gen_cols.cols);
  for (int j = 0; j < gen_cols.cols; ++j)
    for (int i = 0; i < tgt_rank; ++i) {
      Vec v((size_t)d);
      for (int t = 0; t < d; ++t) v[t] = gen_cols.at(i * d + t, j);
      m.at(i, j) = std::move(v);
    }
  return m;
}

void extend_impl(MinimalResolution& r, int length) {
  AlgebraPtr a = r.m.alg;
  while (r.length() < length) {
    const int i = r.length();  // about to build d_{i+1}
    Mat bd = i == 0 ? r.cover : kmat(r.diffs[i - 1]);
    Mat ker = kernel_basis(bd);
    Module fr = free_module(a, r.ranks[i]);
    Mat gens = select_cols(ker, minimal_generator_columns(fr, ker));
    AMat d = diff_from_columns(a, r.ranks[i], gens);
    if (!amat_entries_in_radical(d))
      fail(errc::not_a_module, "differential escaped the maximal ideal");
    r.syzygy_cols.push_back(std::move(ker));
    r.ranks.push_back(gens.cols);
    r.diffs.push_back(std::move(d));
  }
}

}  // namespace

MinimalResolution minimal_resolution(const Module& m, int length) {
  if (length < 0) fail(errc::bad_input, "resolution length must be nonnegative");
  MinimalResolution r;
  r.m = m;
  Mat gens = minimal_generators(m);
  r.ranks.push_back(gens.cols);
  r.cover = cover_matrix(m, gens);
  extend_impl(r, length);
  return r;
}

void extend_resolution(MinimalResolution& r, int length) { extend_impl(r, length); }

Module syzygy(const MinimalResolution& r, int i) {
  if (i == 0) return r.m;
  if (i < 0 || i > r.length()) fail(errc::bad_input, "syzygy index outside the resolution");
  Module fr = free_module(r.m.alg, r.ranks[i - 1]);
  Module s = submodule(fr, r.syzygy_cols[i - 1]).sub;
  s.name = "syz" + std::to_string(i) + "(" + r.m.name + ")";
  return s;
}

Module transpose_module(const Module& m) {
  MinimalResolution r = minimal_resolution(m, 1);
  Module f1d = free_module(m.alg, r.ranks[1]);
  Module t = quotient_module(f1d, kmat(a_transpose(r.diffs[0]))).quot;
  t.name = "tr(" + m.name + ")";
  return t;
}

Module cosyzygy(const Module& m, int j) {
  if (!is_gorenstein(*m.alg))
    fail(errc::non_gorenstein, "cosyzygies need a Gorenstein algebra");
  if (j < 0) fail(errc::bad_input, "cosyzygy index must be nonnegative");
  MinimalResolution r = minimal_resolution(a_dual(m), j);
  Module c = a_dual(syzygy(r, j));
  c.name = "cosyz" + std::to_string(j) + "(" + m.name + ")";
  return c;
}

int CompleteResolutionWindow::rank_at(int i) const {
  if (i < lo || i > hi) fail(errc::bad_input, "degree outside the window");
  return ranks[(size_t)(i - lo)];
}

const AMat& CompleteResolutionWindow::diff_at(int i) const {
  if (i <= lo || i > hi) fail(errc::bad_input, "differential outside the window");
  return diffs[(size_t)(i - lo - 1)];
}

namespace {

// Welding map T_0 = F_0 -> T_{-1} = G_0^*: send generator u_j of the stable
// module to evaluation at u_j, written on the chosen generators g_l of the
// dual. Entries g_l(u_j) stay in the maximal ideal exactly because the
// module is stable.
AMat weld_map(const Module& stable, const DualData& dd) {
  const PrimeField f = stable.alg->fld;
  std::vector<int> ucols =
      minimal_generator_columns(stable, Mat::identity(f, stable.kdim));
  std::vector<int> gsel =
      minimal_generator_columns(dd.dual, Mat::identity(f, dd.dual.kdim));
  AMat w = AMat::zero(stable.alg, (int)gsel.size(), (int)ucols.size());
  for (size_t l = 0; l < gsel.size(); ++l)
    for (size_t j = 0; j < ucols.size(); ++j) {
      Vec v((size_t)stable.alg->dim);
      for (int t = 0; t < stable.alg->dim; ++t) v[t] = dd.basis[gsel[l]].at(t, ucols[j]);
      w.at((int)l, (int)j) = std::move(v);
    }
  return w;
}

}  // namespace

CompleteResolutionWindow complete_resolution(const Module& m, int lo, int hi) {
  if (lo > hi) fail(errc::bad_input, "window is empty");
  if (!is_gorenstein(*m.alg))
    fail(errc::non_gorenstein, "complete resolutions need a Gorenstein algebra");
  CompleteResolutionWindow w;
  w.alg = m.alg;
  w.m = m;
  StripResult sr = strip_free(m);
  w.stable = sr.stable;
  w.stripped_rank = sr.stripped_rank;
  w.lo = lo;
  w.hi = hi;
  if (w.stable.kdim == 0) {  // free modules have the zero complete resolution
    w.ranks.assign((size_t)(hi - lo + 1), 0);
    for (int i = lo + 1; i <= hi; ++i) w.diffs.push_back(AMat::zero(w.alg, 0, 0));
    return w;
  }
  MinimalResolution pos = minimal_resolution(w.stable, std::max(hi, 0));
  std::optional<MinimalResolution> neg;
  DualData dd;
  if (lo < 0) {
    dd = a_dual_data(w.stable);
    neg = minimal_resolution(dd.dual, -lo - 1);
  }
  for (int i = lo; i <= hi; ++i)
    w.ranks.push_back(i >= 0 ? pos.ranks[(size_t)i] : neg->ranks[(size_t)(-1 - i)]);
  for (int i = lo + 1; i <= hi; ++i) {
    if (i >= 1)
      w.diffs.push_back(pos.diffs[(size_t)(i - 1)]);
    else if (i == 0)
      w.diffs.push_back(weld_map(w.stable, dd));
    else
      w.diffs.push_back(a_transpose(neg->diffs[(size_t)(-i - 1)]));
  }
  return w;
}

void validate_complete_resolution(const CompleteResolutionWindow& w) {
  const int d = w.alg->dim;
  for (int i = w.lo + 1; i <= w.hi; ++i) {
    const AMat& di = w.diff_at(i);
    if (di.rows != w.rank_at(i - 1) || di.cols != w.rank_at(i))
      fail(errc::shape_mismatch,
           "differential shapes break at degree " + std::to_string(i));
    if (!amat_entries_in_radical(di))
      fail(errc::not_a_module, "a differential entry escapes the maximal ideal");
  }
  for (int i = w.lo + 2; i <= w.hi; ++i)
    if (!amat_is_zero(amat_mul(w.diff_at(i - 1), w.diff_at(i))))
      fail(errc::not_a_module, "the complex fails d o d = 0 at degree " + std::to_string(i));
  for (int i = w.lo + 1; i < w.hi; ++i)
    if (rank(kmat(w.diff_at(i))) + rank(kmat(w.diff_at(i + 1))) != w.rank_at(i) * d)
      fail(errc::not_a_module, "the complex is not exact at degree " + std::to_string(i));
}

std::optional<Periodicity> detect_periodicity(const Module& m,
                                              const PeriodicityOptions& opt) {
  Module s0 = strip_free(m).stable;
  if (s0.kdim == 0) return Periodicity{1, 0};
  const int reach = opt.max_shift + opt.max_period;
  MinimalResolution r = minimal_resolution(s0, reach);
  std::vector<Module> syz;
  for (int s = 0; s <= reach; ++s) syz.push_back(syzygy(r, s));
  // syzygies inside radical covers are already stable, so compare directly
  for (int p = 1; p <= opt.max_period; ++p)
    for (int s = 0; s <= opt.max_shift; ++s)
      if (is_isomorphic(syz[(size_t)s], syz[(size_t)(s + p)], opt.iso).verdict ==
          IsoVerdict::yes)
        return Periodicity{p, s};
  return std::nullopt;
}

bool TateTable::all_zero() const {
  for (int v : dims)
    if (v) return false;
  return true;
}

namespace {

void check_table_window(const CompleteResolutionWindow& w, const Module& n, int lo,
                        int hi) {
  if (lo > hi) fail(errc::bad_input, "table window is empty");
  if (w.lo > lo - 1 || w.hi < hi + 1)
    fail(errc::bad_input, "complete resolution window too small for the table");
  if (!same_algebra(*w.alg, *n.alg))
    fail(errc::bad_input, "table arguments live over different algebras");
}

}  // namespace

TateTable tate_ext(const CompleteResolutionWindow& w, const Module& n, int lo, int hi) {
  check_table_window(w, n, lo, hi);
  TateTable t;
  t.kind = TateTable::Kind::ext;
  t.lo = lo;
  t.hi = hi;
  std::vector<int> rk;  // rank of the cochain map out of degree i, i in [lo-1, hi]
  for (int i = lo - 1; i <= hi; ++i) rk.push_back(rank(hom_matrix(w.diff_at(i + 1), n)));
  for (int i = lo; i <= hi; ++i)
    t.dims.push_back(w.rank_at(i) * n.kdim - rk[(size_t)(i - lo + 1)] -
                     rk[(size_t)(i - lo)]);
  return t;
}

TateTable tate_tor(const CompleteResolutionWindow& w, const Module& n, int lo, int hi) {
  check_table_window(w, n, lo, hi);
  TateTable t;
  t.kind = TateTable::Kind::tor;
  t.lo = lo;
  t.hi = hi;
  std::vector<int> rk;  // rank of the boundary out of degree i, i in [lo, hi+1]
  for (int i = lo; i <= hi + 1; ++i) rk.push_back(rank(tensor_matrix(w.diff_at(i), n)));
  for (int i = lo; i <= hi; ++i)
    t.dims.push_back(w.rank_at(i) * n.kdim - rk[(size_t)(i - lo)] -
                     rk[(size_t)(i - lo + 1)]);
  return t;
}

TateTable tate_ext(const Module& m, const Module& n, int lo, int hi) {
  return tate_ext(complete_resolution(m, lo - 1, hi + 1), n, lo, hi);
}

TateTable tate_tor(const Module& m, const Module& n, int lo, int hi) {
  return tate_tor(complete_resolution(m, lo - 1, hi + 1), n, lo, hi);
}

std::vector<int> ordinary_ext_dims(const Module& m, const Module& n, int hi) {
  if (hi < 0) fail(errc::bad_input, "degree bound must be nonnegative");
  MinimalResolution r = minimal_resolution(m, hi + 1);
  std::vector<int> rk;  // rank of delta^i for i in [0, hi]
  for (int i = 0; i <= hi; ++i) rk.push_back(rank(hom_matrix(r.diffs[(size_t)i], n)));
  std::vector<int> out;
  for (int i = 0; i <= hi; ++i)
    out.push_back(r.ranks[(size_t)i] * n.kdim - rk[(size_t)i] - (i ? rk[(size_t)(i - 1)] : 0));
  return out;
}

std::vector<int> ordinary_tor_dims(const Module& m, const Module& n, int hi) {
  if (hi < 0) fail(errc::bad_input, "degree bound must be nonnegative");
  MinimalResolution r = minimal_resolution(m, hi + 1);
  std::vector<int> rk(1, 0);  // rank of the boundary into degree i-1, i in [1, hi+1]
  for (int i = 1; i <= hi + 1; ++i)
    rk.push_back(rank(tensor_matrix(r.diffs[(size_t)(i - 1)], n)));
  std::vector<int> out;
  for (int i = 0; i <= hi; ++i)
    out.push_back(r.ranks[(size_t)i] * n.kdim - rk[(size_t)i] - rk[(size_t)(i + 1)]);
  return out;
}

std::vector<int> betti_numbers(const Module& m, int hi) {
  return minimal_resolution(m, hi).ranks;
}

std::vector<int> bass_numbers(const Module& m, int hi) {
  return betti_numbers(matlis_dual(m), hi);
}

std::vector<Vec> ext_class_reps(const MinimalResolution& r, const Module& n, int q) {
  if (q < 0 || q + 1 > r.length())
    fail(errc::bad_input, "resolution too short for this degree");
  if (!same_algebra(*r.m.alg, *n.alg))
    fail(errc::bad_input, "coefficients live over a different algebra");
  Mat cocy = kernel_basis(hom_matrix(r.diffs[(size_t)q], n));
  std::vector<Vec> reps;
  if (q == 0) {
    for (int c = 0; c < cocy.cols; ++c) reps.push_back(get_col(cocy, c));
    return reps;
  }
  Mat cob = hom_matrix(r.diffs[(size_t)(q - 1)], n);
  auto piv = rref(hstack({cob, cocy})).second;
  for (int c : piv)
    if (c >= cob.cols) reps.push_back(get_col(cocy, c - cob.cols));
  return reps;
}

Module extension_pushout(const MinimalResolution& r, const Module& n, int q,
                         const Vec& cocycle) {
  if (q < 1 || q + 1 > r.length())
    fail(errc::bad_input, "need a positive degree inside the resolution");
  if (!same_algebra(*r.m.alg, *n.alg))
    fail(errc::bad_input, "coefficients live over a different algebra");
  const PrimeField f = n.alg->fld;
  const int d = n.alg->dim, nk = n.kdim, rq = r.ranks[(size_t)q];
  if ((int)cocycle.size() != rq * nk) fail(errc::shape_mismatch, "cocycle has wrong length");
  if (!vec_is_zero(mul_vec(hom_matrix(r.diffs[(size_t)q], n), cocycle)))
    fail(errc::bad_cocycle, "vector does not vanish on the next syzygy");
  Module fq1 = free_module(n.alg, r.ranks[(size_t)(q - 1)]);
  auto om = submodule(fq1, r.syzygy_cols[(size_t)(q - 1)]);
  auto x = solve(kmat(r.diffs[(size_t)(q - 1)]), om.inclusion);
  if (!x) fail(errc::bad_input, "syzygy generators failed to lift");
  Mat zmat(f, nk, rq * d);  // the cocycle as a k-map F_q -> n
  for (int j = 0; j < rq; ++j) {
    Vec nj(cocycle.begin() + (size_t)j * nk, cocycle.begin() + (size_t)(j + 1) * nk);
    for (int t = 0; t < d; ++t) {
      Vec col = mul_vec(n.action[t], nj);
      for (int a = 0; a < nk; ++a) zmat.at(a, j * d + t) = col[a];
    }
  }
  Mat fmat = mul(zmat, *x);  // the class as a map off the syzygy
  Module dsum = direct_sum(fq1, n);
  Mat rel(f, dsum.kdim, om.sub.kdim);  // graph relations glue along the class
  for (int t = 0; t < om.sub.kdim; ++t) {
    for (int a = 0; a < fq1.kdim; ++a) rel.at(a, t) = om.inclusion.at(a, t);
    for (int b = 0; b < nk; ++b) rel.at(fq1.kdim + b, t) = f.neg(fmat.at(b, t));
  }
  Module k = quotient_module(dsum, rel).quot;
  k.name = "ext-middle(" + r.m.name + "," + n.name + ")";
  return k;
}

}  // namespace tatekit
