#pragma once

#include "tatekit/homology.hpp"

namespace tatekit {

// Change-of-rings data for linkage through a quotient B = A/c. The section
// lifts quotient coordinates back along the projection; projection * section
// is the identity. For c = 0 the quotient is the ambient algebra itself.
struct LinkageDatum {
  AlgebraPtr ambient;
  Ideal ideal;
  AlgebraPtr quotient;
  Mat projection;  // ambient coords -> quotient coords
  Mat section;     // quotient coords -> ambient coords
  bool quotient_gorenstein = false;
};

LinkageDatum make_linkage_datum(AlgebraPtr a, Ideal c);

// Restriction of scalars through the datum. The ideal must act as zero on m;
// the underlying k-space is unchanged.
Module restrict_module(const Module& m, const LinkageDatum& d);

// lambda(M), the syzygy of the transpose: the column span of the transposed
// minimal presentation matrix inside the dual free cover. Defined on stable
// modules only; a free summand is rejected.
Module link_operator(const Module& m);

// Linked through d: each module restricts to lambda of the other's
// restriction over the quotient. Unstable restrictions are never linked.
bool is_linked(const Module& m, const Module& n, const LinkageDatum& d,
               const IsoOptions& opt = {});

// Hom_B(-, B) over a Gorenstein algebra; an involution preserving the
// annihilator.
Module dagger(const Module& m);

// m, lambda m, lambda lambda m, ... restricted through the data in order;
// the result has data.size() + 1 entries. Entries at even positions are
// evenly linked to m.
std::vector<Module> even_link_chain(const Module& m,
                                    const std::vector<LinkageDatum>& data);

}  // namespace tatekit
