#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tatekit/mat.hpp"

namespace tatekit {

// A finite-dimensional commutative local k-algebra over a prime field,
// presented by structure constants on a fixed basis. Construction validates
// commutativity, associativity, the unit law, and locality (the nilpotent
// elements must form an ideal of codimension one, so the residue field is k).
struct Algebra {
  PrimeField fld;
  int dim = 0;
  std::vector<std::string> labels;
  std::string name;
  std::vector<std::vector<Vec>> sc;  // sc[i][j] = coordinates of b_i * b_j
  Vec unit;

  // caches filled at construction
  std::vector<Mat> lmul;       // multiplication operator of each basis element
  RowBasis radical;            // the maximal ideal m as a subspace
  Mat radical_cols;            // column basis of m
  std::vector<Vec> mgens;      // minimal ideal generators of m
  std::vector<Mat> mgen_lmul;  // their multiplication operators
  Mat socle_cols;              // column basis of (0 : m)
  bool gorenstein = false;
  u32 residue_scale = 1;       // normalizes the residue functional so pi(1) = 1

  Vec mul_elems(const Vec& x, const Vec& y) const;
  Mat lmul_of(const Vec& x) const;  // multiplication operator of an element
  u32 residue(const Vec& x) const;  // image in A/m = k
  bool in_radical(const Vec& x) const { return radical.contains(x); }
  Vec unit_vec() const { return unit; }
  int socle_dim() const { return socle_cols.cols; }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr algebra_from_structure_constants(PrimeField fld,
                                            std::vector<std::string> labels,
                                            std::vector<std::vector<Vec>> sc, Vec unit,
                                            std::string name = "");

// Monomial exponent vectors over named variables; used by both constructors.
struct MonomialSpec {
  std::vector<std::string> vars;
  std::vector<std::vector<int>> gens;  // exponent vectors of the ideal generators
};

// k[x_1..x_v]/(x_1^{a_1}, ..., x_v^{a_v}); always local and Gorenstein.
AlgebraPtr monomial_complete_intersection(PrimeField fld, std::vector<int> powers,
                                          std::vector<std::string> vars = {});

// k[x_1..x_v]/I for any monomial ideal I containing a power of each variable.
// Standard monomials (those outside I) form the basis; products reduce to a
// standard monomial or zero.
AlgebraPtr monomial_quotient(PrimeField fld, std::vector<std::string> vars,
                             std::vector<std::vector<int>> gen_exponents);

// x, y, z, w for up to four variables, x1..xn beyond
std::vector<std::string> default_variable_names(size_t n);

bool is_gorenstein(const Algebra& a);

// Structural equality: same characteristic, dimension, table, and unit.
bool same_algebra(const Algebra& x, const Algebra& y);

int label_index(const Algebra& a, const std::string& label);  // -1 when absent
Vec label_vec(const Algebra& a, const std::string& label);    // basis vector by label

// An ideal, carried as a generating set plus the subspace it spans.
struct Ideal {
  AlgebraPtr alg;
  std::vector<Vec> gens;
  RowBasis span;

  int subspace_dim() const { return span.dim(); }
  bool contains(const Vec& v) const { return span.contains(v); }
};

Ideal ideal_from_generators(AlgebraPtr a, std::vector<Vec> gens);
Ideal ideal_from_span(AlgebraPtr a, const Mat& span_cols);  // validates closure
Ideal zero_ideal(AlgebraPtr a);
Ideal maximal_ideal(AlgebraPtr a);
Ideal socle_ideal(AlgebraPtr a);
bool ideal_equal(const Ideal& x, const Ideal& y);

// (0 : i) = { r : r i = 0 }
Ideal annihilator_ideal(const Ideal& i);

// Quotient by a proper ideal, with the coordinate projection onto the
// complement-coordinate basis. Quotient by (0) returns the algebra itself.
struct QuotientAlgebra {
  AlgebraPtr alg;
  Mat projection;  // dim(quotient) x dim(parent)
};
QuotientAlgebra quotient_algebra(AlgebraPtr a, const Ideal& i, std::string name = "");

}  // namespace tatekit
