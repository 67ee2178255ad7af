#include <doctest.h>

#include "tatekit/homology.hpp"

using namespace tatekit;

namespace {

AlgebraPtr dual_numbers() { return monomial_complete_intersection(PrimeField(2), {2}); }
AlgebraPtr ci22() { return monomial_complete_intersection(PrimeField(2), {2, 2}); }
AlgebraPtr chain4() { return monomial_complete_intersection(PrimeField(3), {4}); }

Module cyclic_by_labels(AlgebraPtr a, std::vector<std::string> gens, std::string name) {
  std::vector<Vec> v;
  for (const auto& g : gens) v.push_back(label_vec(*a, g));
  return cyclic_module(a, ideal_from_generators(a, v), std::move(name));
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("resolution of k over the dual numbers repeats x") {
    auto a = dual_numbers();
    auto r = minimal_resolution(residue_field(a), 6);
    CHECK(r.ranks == std::vector<int>{1, 1, 1, 1, 1, 1, 1});
    for (const AMat& d : r.diffs) {
      CHECK(d.rows == 1);
      CHECK(d.cols == 1);
      CHECK(d.at(0, 0) == label_vec(*a, "x"));
    }
  }

  TEST_CASE("resolution of k over k[x]/(x^4) alternates x and x^3") {
    auto a = chain4();
    auto r = minimal_resolution(residue_field(a), 5);
    CHECK(r.ranks == std::vector<int>{1, 1, 1, 1, 1, 1});
    for (int i = 0; i < 5; ++i)
      CHECK(r.diffs[i].at(0, 0) == label_vec(*a, i % 2 == 0 ? "x" : "x^3"));
  }

  TEST_CASE("betti numbers of k grow linearly over two exterior variables") {
    auto a = ci22();
    Module k = residue_field(a);
    CHECK(betti_numbers(k, 8) == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    auto r = minimal_resolution(k, 4);
    CHECK(r.diffs[0].at(0, 0) == label_vec(*a, "x"));
    CHECK(r.diffs[0].at(0, 1) == label_vec(*a, "y"));
    for (int i = 1; i < 4; ++i)
      CHECK(amat_is_zero(amat_mul(r.diffs[i - 1], r.diffs[i])));
    for (const AMat& d : r.diffs) CHECK(amat_entries_in_radical(d));
    // first syzygy is the maximal ideal, already stable
    Module s1 = syzygy(r, 1);
    CHECK(s1.kdim == 3);
    CHECK(is_stable(s1));
  }

  TEST_CASE("extending a resolution matches a fresh one") {
    auto a = ci22();
    auto r1 = minimal_resolution(residue_field(a), 2);
    extend_resolution(r1, 5);
    auto r2 = minimal_resolution(residue_field(a), 5);
    CHECK(r1.ranks == r2.ranks);
    for (int i = 0; i < 5; ++i) CHECK(r1.diffs[i].e == r2.diffs[i].e);
  }

  TEST_CASE("bass numbers come from the dual resolution") {
    auto a = ci22();
    CHECK(bass_numbers(residue_field(a), 4) == std::vector<int>{1, 2, 3, 4, 5});
    // the free module is injective here, so its bass numbers start at 1
    CHECK(bass_numbers(free_module(a, 1), 2) == std::vector<int>{1, 0, 0});
  }

  TEST_CASE("transpose of cyclic modules over k[x]/(x^4)") {
    auto a = chain4();
    Module t = transpose_module(residue_field(a));
    CHECK(t.kdim == 1);
    CHECK(is_isomorphic(t, cyclic_by_labels(a, {"x"}, "A/x")).verdict == IsoVerdict::yes);
    Module m2 = cyclic_by_labels(a, {"x^2"}, "A/x^2");
    CHECK(is_isomorphic(transpose_module(m2), m2).verdict == IsoVerdict::yes);
  }

  TEST_CASE("cosyzygies invert syzygies on stable modules") {
    auto a = chain4();
    Module k = residue_field(a);
    Module c1 = cosyzygy(k, 1);
    CHECK(c1.kdim == 3);
    CHECK(is_isomorphic(c1, cyclic_by_labels(a, {"x^3"}, "A/x^3")).verdict ==
          IsoVerdict::yes);
    auto b = ci22();
    auto rk = minimal_resolution(residue_field(b), 1);
    Module s1 = syzygy(rk, 1);
    CHECK(is_isomorphic(cosyzygy(s1, 1), residue_field(b)).verdict == IsoVerdict::yes);
    auto ng = monomial_quotient(PrimeField(2), {"x", "y"}, {{2, 0}, {1, 1}, {0, 2}});
    CHECK_THROWS_WITH_AS((void)cosyzygy(residue_field(ng), 1),
                         doctest::Contains("non-gorenstein"), tk_error);
  }

  TEST_CASE("complete resolution over the dual numbers is x everywhere") {
    auto a = dual_numbers();
    auto w = complete_resolution(residue_field(a), -6, 6);
    CHECK(w.stripped_rank == 0);
    for (int i = -6; i <= 6; ++i) CHECK(w.rank_at(i) == 1);
    for (int i = -5; i <= 6; ++i) CHECK(w.diff_at(i).at(0, 0) == label_vec(*a, "x"));
    validate_complete_resolution(w);
  }

  TEST_CASE("complete resolution of k over two exterior variables") {
    auto a = ci22();
    auto w = complete_resolution(residue_field(a), -5, 5);
    std::vector<int> expect = {5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6};
    for (int i = -5; i <= 5; ++i) CHECK(w.rank_at(i) == expect[(size_t)(i + 5)]);
    validate_complete_resolution(w);
  }

  TEST_CASE("complete resolution of A/x over k[x]/(x^4) has period two") {
    auto a = chain4();
    auto w = complete_resolution(cyclic_by_labels(a, {"x"}, "A/x"), -4, 4);
    for (int i = -4; i <= 4; ++i) CHECK(w.rank_at(i) == 1);
    for (int i = -3; i <= 4; ++i) {
      bool odd = ((i % 2) + 2) % 2 == 1;
      CHECK(w.diff_at(i).at(0, 0) == label_vec(*a, odd ? "x" : "x^3"));
    }
    validate_complete_resolution(w);
  }

  TEST_CASE("free modules have zero complete resolutions and zero tables") {
    auto a = ci22();
    auto w = complete_resolution(free_module(a, 2), -3, 3);
    CHECK(w.stripped_rank == 2);
    CHECK(w.stable.kdim == 0);
    for (int i = -3; i <= 3; ++i) CHECK(w.rank_at(i) == 0);
    CHECK(tate_ext(free_module(a, 1), residue_field(a), -3, 3).all_zero());
    CHECK(tate_tor(free_module(a, 1), residue_field(a), -3, 3).all_zero());
  }

  TEST_CASE("non-Gorenstein algebras are rejected") {
    auto ng = monomial_quotient(PrimeField(2), {"x", "y"}, {{2, 0}, {1, 1}, {0, 2}});
    CHECK_THROWS_WITH_AS((void)complete_resolution(residue_field(ng), -2, 2),
                         doctest::Contains("non-gorenstein"), tk_error);
  }

  TEST_CASE("stable ext of k with itself") {
    auto a = dual_numbers();
    auto t = tate_ext(residue_field(a), residue_field(a), -6, 6);
    CHECK(t.lo == -6);
    CHECK(t.hi == 6);
    for (int i = -6; i <= 6; ++i) CHECK(t.at(i) == 1);

    auto b = ci22();
    auto tb = tate_ext(residue_field(b), residue_field(b), -4, 4);
    CHECK(tb.dims == std::vector<int>{4, 3, 2, 1, 1, 2, 3, 4, 5});
    auto ub = tate_tor(residue_field(b), residue_field(b), -4, 4);
    CHECK(ub.dims == tb.dims);  // all induced maps vanish on k
  }

  TEST_CASE("stable tor of chain modules follows the min rule") {
    auto a = chain4();
    Module m1 = cyclic_by_labels(a, {"x"}, "A/x");
    Module m2 = cyclic_by_labels(a, {"x^2"}, "A/x^2");
    Module m3 = cyclic_by_labels(a, {"x^3"}, "A/x^3");
    auto t13 = tate_tor(m1, m3, -4, 4);
    for (int i = -4; i <= 4; ++i) CHECK(t13.at(i) == 1);  // min(1,3,4-1,4-3)
    auto t22 = tate_tor(m2, m2, -4, 4);
    for (int i = -4; i <= 4; ++i) CHECK(t22.at(i) == 2);  // min(2,2,4-2,4-2)
  }

  TEST_CASE("degree shift under a syzygy") {
    auto a = ci22();
    Module k = residue_field(a);
    auto r = minimal_resolution(k, 1);
    Module s1 = syzygy(r, 1);
    auto left = tate_ext(s1, k, -3, 3);
    auto right = tate_ext(k, k, -2, 4);
    for (int i = -3; i <= 3; ++i) CHECK(left.at(i) == right.at(i + 1));
  }

  TEST_CASE("stable and ordinary functors agree in positive degrees") {
    auto a = ci22();
    Module k = residue_field(a);
    Module mx = cyclic_by_labels(a, {"x"}, "A/x");
    auto oe = ordinary_ext_dims(k, mx, 6);
    auto ot = ordinary_tor_dims(k, mx, 6);
    auto se = tate_ext(k, mx, 1, 6);
    auto st = tate_tor(k, mx, 1, 6);
    for (int i = 1; i <= 6; ++i) {
      CHECK(se.at(i) == oe[(size_t)i]);
      CHECK(st.at(i) == ot[(size_t)i]);
    }
    // also for a module with a free summand: the stable tables ignore it
    Module mfree = direct_sum(mx, free_module(a, 1));
    auto oe2 = ordinary_ext_dims(mfree, k, 5);
    auto se2 = tate_ext(mfree, k, 1, 5);
    for (int i = 1; i <= 5; ++i) CHECK(se2.at(i) == oe2[(size_t)i]);
  }

  TEST_CASE("ordinary functors in degree zero") {
    auto a = chain4();
    Module k = residue_field(a);
    Module fr = free_module(a, 1);
    CHECK(ordinary_ext_dims(fr, k, 2) == std::vector<int>{1, 0, 0});
    CHECK(ordinary_tor_dims(fr, k, 2) == std::vector<int>{1, 0, 0});
    CHECK(ordinary_ext_dims(k, fr, 2) == std::vector<int>{1, 0, 0});
    CHECK(ordinary_ext_dims(k, k, 3) == std::vector<int>{1, 1, 1, 1});
  }

  TEST_CASE("periodicity detection") {
    auto a = dual_numbers();
    auto p1 = detect_periodicity(residue_field(a));
    REQUIRE(p1.has_value());
    CHECK(p1->p == 1);
    CHECK(p1->from == 0);

    auto b = chain4();
    auto p2 = detect_periodicity(residue_field(b));
    REQUIRE(p2.has_value());
    CHECK(p2->p == 2);
    CHECK(p2->from == 0);
    auto p3 = detect_periodicity(cyclic_by_labels(b, {"x^2"}, "A/x^2"));
    REQUIRE(p3.has_value());
    CHECK(p3->p == 1);

    auto c = ci22();
    CHECK_FALSE(detect_periodicity(residue_field(c), {3, 2, {}}).has_value());
    auto pf = detect_periodicity(free_module(c, 1));
    REQUIRE(pf.has_value());
    CHECK(pf->p == 1);
  }

  TEST_CASE("ext class representatives") {
    auto a = ci22();
    Module k = residue_field(a);
    auto r = minimal_resolution(k, 4);
    for (int q = 0; q <= 3; ++q)
      CHECK(ext_class_reps(r, k, q).size() == (size_t)(q + 1));
    // the algebra is self-injective: no higher classes against A
    CHECK(ext_class_reps(r, free_module(a, 1), 1).empty());
    CHECK(ext_class_reps(r, free_module(a, 1), 2).empty());
  }

  TEST_CASE("pushouts realize extension classes") {
    auto a = ci22();
    Module k = residue_field(a);
    auto r = minimal_resolution(k, 3);
    auto reps = ext_class_reps(r, k, 1);
    REQUIRE(reps.size() == 2);
    // the zero class gives the split extension
    Vec zero(reps[0].size(), 0);
    Module split = extension_pushout(r, k, 1, zero);
    CHECK(split.kdim == 2);
    CHECK(min_gen_count(split) == 2);
    for (const Vec& eta : reps) {
      Module mid = extension_pushout(r, k, 1, eta);
      CHECK(mid.kdim == 2);  // middle terms have additive dimension
      CHECK(min_gen_count(mid) == 1);  // nonsplit: cyclic middle term
    }
    // degree two: middle terms sit over the first syzygy
    auto reps2 = ext_class_reps(r, k, 2);
    REQUIRE(reps2.size() == 3);
    Module mid2 = extension_pushout(r, k, 2, reps2[0]);
    CHECK(mid2.kdim == 4);  // kdim of syzygy (3) plus one

    // a vector that does not vanish on the next syzygy is rejected
    Module fr = free_module(a, 1);
    Mat delta = hom_matrix(r.diffs[1], fr);
    Vec bad;
    for (int j = 0; j < r.ranks[1] * fr.kdim && bad.empty(); ++j) {
      Vec cand((size_t)(r.ranks[1] * fr.kdim), 0);
      cand[(size_t)j] = 1;
      if (!vec_is_zero(mul_vec(delta, cand))) bad = cand;
    }
    REQUIRE(!bad.empty());
    CHECK_THROWS_WITH_AS((void)extension_pushout(r, fr, 1, bad),
                         doctest::Contains("bad-cocycle"), tk_error);
  }
}
