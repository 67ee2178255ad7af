#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tatekit/module.hpp"

namespace tatekit {

// A matrix with entries in the algebra, giving a map A^cols -> A^rows of free
// modules. The k-coordinates of A^r put component i at block [i*dim, (i+1)*dim).
struct AMat {
  AlgebraPtr alg;
  int rows = 0, cols = 0;
  std::vector<Vec> e;  // row-major algebra elements

  Vec& at(int i, int j) { return e[(size_t)i * cols + j]; }
  const Vec& at(int i, int j) const { return e[(size_t)i * cols + j]; }
  static AMat zero(AlgebraPtr a, int r, int c);
};

AMat amat_mul(const AMat& x, const AMat& y);
bool amat_is_zero(const AMat& x);
bool amat_entries_in_radical(const AMat& x);

// k-matrix of the free map itself; block (i,j) is the multiplication
// operator of the entry.
Mat kmat(const AMat& x);

// The dual map Hom(A^rows, A) -> Hom(A^cols, A) in dual coordinates
// (a functional is its value list on the standard generators). Plain entry
// transposition; commutativity needs no twist.
AMat a_transpose(const AMat& x);

// k-matrix of Hom(d, N): N^rows -> N^cols. A vector in N^r lays out the
// component at block j as [j*n.kdim, (j+1)*n.kdim).
Mat hom_matrix(const AMat& d, const Module& n);
// k-matrix of d (x) N: N^cols -> N^rows.
Mat tensor_matrix(const AMat& d, const Module& n);

// Minimal free resolution F_length -> ... -> F_0 -> m. Generators of each
// syzygy are chosen deterministically, so resolutions are reproducible.
struct MinimalResolution {
  Module m;
  std::vector<int> ranks;       // ranks[i] = rank F_i, i in [0, length]
  std::vector<AMat> diffs;      // diffs[i] = d_{i+1} : F_{i+1} -> F_i
  Mat cover;                    // F_0 -> m in k-coordinates
  std::vector<Mat> syzygy_cols; // columns spanning Omega^{i+1} inside F_i

  int length() const { return (int)diffs.size(); }
};

MinimalResolution minimal_resolution(const Module& m, int length);
void extend_resolution(MinimalResolution& r, int length);

Module syzygy(const MinimalResolution& r, int i);  // Omega^i, 0 <= i <= length
Module transpose_module(const Module& m);          // coker of the dualized first map
// (Omega_j of the dual)^*; the j-th cosyzygy. Needs a Gorenstein algebra.
Module cosyzygy(const Module& m, int j);

// Window of a complete resolution: T_i for i in [lo, hi] with differentials
// d_i : T_i -> T_{i-1} for lo < i <= hi. Built by resolving the stable part
// on the right and splicing the dualized resolution of its dual on the left.
struct CompleteResolutionWindow {
  AlgebraPtr alg;
  Module m;        // the module handed in
  Module stable;   // its stable part; the window resolves this
  int stripped_rank = 0;
  int lo = 0, hi = 0;
  std::vector<int> ranks;
  std::vector<AMat> diffs;

  int rank_at(int i) const;
  const AMat& diff_at(int i) const;  // d_i, lo < i <= hi
};

CompleteResolutionWindow complete_resolution(const Module& m, int lo, int hi);

// d o d = 0, entries inside the maximal ideal, and exactness at every
// interior degree of the window.
void validate_complete_resolution(const CompleteResolutionWindow& w);

struct Periodicity {
  int p = 1;     // period
  int from = 0;  // syzygy shift where the repetition starts
};

struct PeriodicityOptions {
  int max_period = 6;
  int max_shift = 4;
  IsoOptions iso;
};

// A certified periodicity: the from-th and (from+p)-th syzygies of the stable
// part are isomorphic, which repeats the whole complete resolution with
// period p and makes every Tate table p-periodic across all degrees.
std::optional<Periodicity> detect_periodicity(const Module& m,
                                              const PeriodicityOptions& opt = {});

struct TateTable {
  enum class Kind { ext, tor };
  Kind kind = Kind::ext;
  int lo = 0, hi = 0;
  std::vector<int> dims;  // dims[i - lo]
  std::optional<Periodicity> period;

  int at(int i) const { return dims[(size_t)(i - lo)]; }
  bool all_zero() const;
};

// Degreewise dimensions on [lo, hi]; the window must cover [lo-1, hi+1].
TateTable tate_ext(const CompleteResolutionWindow& w, const Module& n, int lo, int hi);
TateTable tate_tor(const CompleteResolutionWindow& w, const Module& n, int lo, int hi);
TateTable tate_ext(const Module& m, const Module& n, int lo, int hi);
TateTable tate_tor(const Module& m, const Module& n, int lo, int hi);

// Ordinary derived functor dimensions for degrees 0..hi.
std::vector<int> ordinary_ext_dims(const Module& m, const Module& n, int hi);
std::vector<int> ordinary_tor_dims(const Module& m, const Module& n, int hi);

std::vector<int> betti_numbers(const Module& m, int hi);
std::vector<int> bass_numbers(const Module& m, int hi);

// Basis cocycles of Ext^q(m, n) read off a fixed resolution of m; each is a
// vector in N^{r_q}. The resolution must reach length q+1.
std::vector<Vec> ext_class_reps(const MinimalResolution& r, const Module& n, int q);

// The middle term of the extension of Omega^{q-1} by n classified by a
// degree-q cocycle: the pushout of F_{q-1} <- Omega^q -> n.
Module extension_pushout(const MinimalResolution& r, const Module& n, int q,
                         const Vec& cocycle);

}  // namespace tatekit
