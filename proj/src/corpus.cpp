#include "tatekit/corpus.hpp"

#include "tatekit/errors.hpp"

namespace tatekit {

namespace {

std::string gen_label(const Algebra& a, const Vec& g) {
  int hits = 0, where = -1;
  for (int i = 0; i < a.dim; ++i)
    if (g[(size_t)i]) {
      ++hits;
      where = i;
    }
  if (hits == 1 && g[(size_t)where] == 1) return a.labels[(size_t)where];
  return "g";
}

Module cyclic_on(AlgebraPtr a, const Vec& g, const std::string& label) {
  return cyclic_module(a, ideal_from_generators(a, {g}), "A/(" + label + ")");
}

}  // namespace

std::vector<Module> standard_modules(AlgebraPtr a) {
  std::vector<Module> out;
  Module f = free_module(a, 1);
  f.name = "A";
  out.push_back(std::move(f));
  out.push_back(residue_field(a));
  for (const Vec& g : a->mgens) {
    Ideal rel = ideal_from_generators(a, {g});
    if (rel.span.dim() == a->radical.dim()) continue;  // that quotient is k again
    out.push_back(cyclic_on(a, g, gen_label(*a, g)));
  }
  return out;
}

std::vector<Ideal> standard_gorenstein_ideals(AlgebraPtr a) {
  std::vector<Ideal> out;
  out.push_back(zero_ideal(a));
  out.push_back(maximal_ideal(a));
  for (const Vec& g : a->mgens) {
    Ideal i = ideal_from_generators(a, {g});
    if (i.span.dim() == a->radical.dim()) continue;  // maximal again
    if (quotient_algebra(a, i).alg->gorenstein) out.push_back(std::move(i));
  }
  return out;
}

Corpus builtin_corpus() {
  Corpus c;

  {
    CorpusAlgebra e;
    e.alg = monomial_complete_intersection(PrimeField(2), {2});
    e.modules = standard_modules(e.alg);
    e.gorenstein_ideals = standard_gorenstein_ideals(e.alg);
    c.algebras.push_back(std::move(e));
  }

  {
    CorpusAlgebra e;
    e.alg = monomial_complete_intersection(PrimeField(3), {4});
    e.modules = standard_modules(e.alg);
    for (const char* lbl : {"x^2", "x^3"})
      e.modules.push_back(cyclic_on(e.alg, label_vec(*e.alg, lbl), lbl));
    e.gorenstein_ideals = standard_gorenstein_ideals(e.alg);
    for (const char* lbl : {"x^2", "x^3"})
      e.gorenstein_ideals.push_back(
          ideal_from_generators(e.alg, {label_vec(*e.alg, lbl)}));
    c.algebras.push_back(std::move(e));
  }

  {
    CorpusAlgebra e;
    e.alg = monomial_complete_intersection(PrimeField(2), {2, 2});
    e.modules = standard_modules(e.alg);
    e.modules.push_back(cyclic_on(e.alg, label_vec(*e.alg, "x*y"), "x*y"));
    // the first syzygy of k, a stable non-cyclic module
    Module m = submodule(free_module(e.alg, 1), e.alg->radical_cols).sub;
    m.name = "m";
    e.modules.push_back(std::move(m));
    e.gorenstein_ideals = standard_gorenstein_ideals(e.alg);
    c.algebras.push_back(std::move(e));
  }

  {
    CorpusAlgebra e;
    e.alg = monomial_complete_intersection(PrimeField(5), {3, 3});
    e.modules = standard_modules(e.alg);
    e.gorenstein_ideals = standard_gorenstein_ideals(e.alg);
    c.algebras.push_back(std::move(e));
  }

  {
    CorpusAlgebra e;  // the non-Gorenstein control
    e.alg = monomial_quotient(PrimeField(2), {"x", "y"}, {{2, 0}, {1, 1}, {0, 2}});
    Module f = free_module(e.alg, 1);
    f.name = "A";
    e.modules.push_back(std::move(f));
    e.modules.push_back(residue_field(e.alg));
    c.algebras.push_back(std::move(e));
  }

  return c;
}

}  // namespace tatekit
