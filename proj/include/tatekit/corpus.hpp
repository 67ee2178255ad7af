#pragma once

#include "tatekit/module.hpp"

namespace tatekit {

// The built-in test bed: Gorenstein algebras spanning periodic and
// polynomial-growth behavior, plus one non-Gorenstein control whose role is
// to be rejected by everything that needs Gorenstein.
struct CorpusAlgebra {
  AlgebraPtr alg;
  std::vector<Module> modules;
  std::vector<Ideal> gorenstein_ideals;  // ideals whose quotient is Gorenstein
};

struct Corpus {
  std::vector<CorpusAlgebra> algebras;
};

// Free of rank one, the residue field, and one cyclic module per radical
// generator (skipping duplicates of k). Names are derived from the labels.
std::vector<Module> standard_modules(AlgebraPtr a);

// The zero and maximal ideals plus every principal ideal on a radical
// generator whose quotient turns out Gorenstein.
std::vector<Ideal> standard_gorenstein_ideals(AlgebraPtr a);

Corpus builtin_corpus();

}  // namespace tatekit
