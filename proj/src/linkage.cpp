#include "tatekit/linkage.hpp"

#include "tatekit/errors.hpp"

namespace tatekit {

LinkageDatum make_linkage_datum(AlgebraPtr a, Ideal c) {
  if (!a || !c.alg || !same_algebra(*a, *c.alg))
    fail(errc::bad_input, "linkage ideal lives over a different algebra");
  LinkageDatum d;
  d.ambient = a;
  d.ideal = std::move(c);
  if (d.ideal.subspace_dim() == 0) {
    d.quotient = a;
    d.projection = Mat::identity(a->fld, a->dim);
    d.section = Mat::identity(a->fld, a->dim);
  } else {
    QuotientAlgebra q = quotient_algebra(a, d.ideal);
    d.quotient = q.alg;
    d.projection = q.projection;
    d.section = embedding_matrix(d.ideal.span);
  }
  d.quotient_gorenstein = d.quotient->gorenstein;
  return d;
}

Module restrict_module(const Module& m, const LinkageDatum& d) {
  if (!m.alg || !d.ambient || !same_algebra(*m.alg, *d.ambient))
    fail(errc::bad_input, "module does not live over the datum's ambient algebra");
  const Mat& rows = d.ideal.span.rows;
  for (int r = 0; r < rows.rows; ++r) {
    Vec v(d.ambient->dim, 0);
    for (int c = 0; c < rows.cols; ++c) v[(size_t)c] = rows.at(r, c);
    if (!m.act(v).is_zero())
      fail(errc::annihilator_violation, "linkage ideal does not annihilate " + m.name);
  }
  if (d.ideal.subspace_dim() == 0) return m;
  std::vector<Mat> act;
  act.reserve((size_t)d.quotient->dim);
  for (int j = 0; j < d.quotient->dim; ++j) act.push_back(m.act(get_col(d.section, j)));
  return make_module(d.quotient, std::move(act), m.name);
}

Module link_operator(const Module& m) {
  if (!is_stable(m))
    fail(errc::unstable_module, "the link operator is defined on stable modules");
  if (m.kdim == 0) return zero_module(m.alg);
  MinimalResolution r = minimal_resolution(m, 1);
  // lambda M = Omega Tr M; the dual presentation map lands inside the radical
  // of the dual cover, so its image is the full first syzygy of Tr M.
  Mat image = kmat(a_transpose(r.diffs[0]));
  Module out = submodule(free_module(m.alg, r.ranks[1]), image).sub;
  out.name = "lambda(" + m.name + ")";
  return out;
}

bool is_linked(const Module& m, const Module& n, const LinkageDatum& d,
               const IsoOptions& opt) {
  Module mb = restrict_module(m, d);
  Module nb = restrict_module(n, d);
  if (!is_stable(mb) || !is_stable(nb)) return false;
  IsoResult fwd = is_isomorphic(mb, link_operator(nb), opt);
  if (fwd.verdict == IsoVerdict::undetermined)
    fail(errc::budget_exhausted, "isomorphism search inconclusive in is_linked");
  if (fwd.verdict == IsoVerdict::no) return false;
  IsoResult bwd = is_isomorphic(nb, link_operator(mb), opt);
  if (bwd.verdict == IsoVerdict::undetermined)
    fail(errc::budget_exhausted, "isomorphism search inconclusive in is_linked");
  return bwd.verdict == IsoVerdict::yes;
}

Module dagger(const Module& m) {
  if (!m.alg->gorenstein)
    fail(errc::non_gorenstein, "dagger needs a Gorenstein algebra");
  Module out = a_dual(m);
  out.name = m.name + "^+";
  return out;
}

std::vector<Module> even_link_chain(const Module& m,
                                    const std::vector<LinkageDatum>& data) {
  std::vector<Module> chain{m};
  for (const auto& d : data) chain.push_back(link_operator(restrict_module(chain.back(), d)));
  return chain;
}

}  // namespace tatekit
