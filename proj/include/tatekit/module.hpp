#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tatekit/algebra.hpp"

namespace tatekit {

// A finite A-module: a k-space with one operator per algebra basis element.
struct Module {
  AlgebraPtr alg;
  int kdim = 0;
  std::vector<Mat> action;  // action[i] is the operator of basis element i
  std::string name;

  Mat act(const Vec& a) const;  // operator of a general algebra element
};

// Checks that the operators define an A-module: the unit acts as the
// identity and products of operators follow the structure constants.
void validate_module(const Module& m);
Module make_module(AlgebraPtr a, std::vector<Mat> action, std::string name = "");

Module zero_module(AlgebraPtr a);
Module free_module(AlgebraPtr a, int rank);
Module residue_field(AlgebraPtr a);  // k = A/m
Module cyclic_module(AlgebraPtr a, const Ideal& rel, std::string name = "");
Module direct_sum(const Module& m, const Module& n);
Module matlis_dual(const Module& m);  // Hom_k(M, k), operators transposed
Module conjugate(const Module& m, const Mat& p);  // basis change by invertible p
Module tensor_product(const Module& m, const Module& n);  // over A

// k-basis of Hom_A(m, n); each element is an n.kdim x m.kdim matrix.
// Equivariance is imposed against the minimal generators of the maximal
// ideal, which generate the whole algebra together with the unit.
std::vector<Mat> hom_space(const Module& m, const Module& n);
bool is_equivariant(const Module& src, const Module& tgt, const Mat& f);

struct ModuleHom {
  Module src, tgt;
  Mat mat;  // tgt.kdim x src.kdim
};
ModuleHom make_hom(Module src, Module tgt, Mat f);  // rejects non-A-linear f

struct SubmoduleData {
  Module sub;
  Mat inclusion;  // m.kdim x sub.kdim, columns are the chosen basis
};
SubmoduleData submodule(const Module& m, const Mat& span_cols);

struct QuotientModuleData {
  Module quot;
  Mat projection;  // quot.kdim x m.kdim
};
QuotientModuleData quotient_module(const Module& m, const Mat& span_cols);

// Generators. minimal_generator_columns expects span_cols to span a
// submodule; it picks the subset of columns that generates it minimally.
RowBasis radical_subspace(const Module& m);  // the subspace m * M
std::vector<int> minimal_generator_columns(const Module& m, const Mat& span_cols);
Mat minimal_generators(const Module& m);
int min_gen_count(const Module& m);
Mat socle_columns(const Module& m);  // { u : m u = 0 }
Ideal annihilator(const Module& m);

// Hom_A(m, A) with the pointwise action; basis[j] is the j-th functional
// as an alg->dim x m.kdim matrix.
struct DualData {
  Module dual;
  std::vector<Mat> basis;
};
DualData a_dual_data(const Module& m);
Module a_dual(const Module& m);
Mat biduality_map(const Module& m);  // m -> m**; invertible over Gorenstein algebras

// Splits off free rank-one summands until none remain. A summand exists
// exactly when some homomorphism to A has image not contained in m.
struct StripResult {
  Module stable;
  int stripped_rank = 0;
};
StripResult strip_free(const Module& m);
bool is_stable(const Module& m);

struct IsoOptions {
  u64 seed = 0xC0FFEE;
  int samples = 512;          // random combinations tried after enumeration
  u64 enumerate_limit = 4096; // exhaustive when p^(hom dim) fits
};
enum class IsoVerdict { yes, no, undetermined };
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::undetermined;
  std::optional<Mat> witness;  // invertible equivariant map when yes
  std::string note;
};
IsoResult is_isomorphic(const Module& m, const Module& n, const IsoOptions& opt = {});

}  // namespace tatekit
