// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "tatekit/checks.hpp"
#include "tatekit/corpus.hpp"
#include "tatekit/errors.hpp"
#include "tatekit/linkage.hpp"

using namespace tatekit;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string why;
  bool ok = false;
  try {
    ok = body(why);
  } catch (const std::exception& e) {
    why = e.what();
  }
  std::cout << (ok ? "[pass] " : "[FAIL] ") << name;
  if (!ok && !why.empty()) std::cout << " (" << why << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

Module cyclic_by_labels(AlgebraPtr a, const std::vector<std::string>& gens,
                        std::string name) {
  std::vector<Vec> v;
  for (const auto& g : gens) v.push_back(label_vec(*a, g));
  return cyclic_module(a, ideal_from_generators(a, v), std::move(name));
}

bool expect_code(errc want, const std::function<void()>& fn, std::string& why,
                 const std::string& what) {
  try {
    fn();
  } catch (const tk_error& e) {
    if (e.code() == want) return true;
    why = what + " threw the wrong error: " + e.what();
    return false;
  }
  why = what + " computed silently";
  return false;
}

Mat random_invertible(PrimeField f, int n, std::mt19937_64& rng) {
  for (;;) {
    Mat m(f, n, n);
    for (u32& x : m.a) x = (u32)(rng() % f.p());
    if (rank(m) == n) return m;
  }
}

}  // namespace

int main() {
  criterion("1. flat certified-periodic stable ext table over the dual numbers",
            [](std::string& why) {
              auto a = monomial_complete_intersection(PrimeField(2), {2});
              Module k = residue_field(a);
              TateTable t = tate_ext(k, k, -10, 10);
              for (int i = -10; i <= 10; ++i)
                if (t.at(i) != 1) {
                  why = "dim at degree " + std::to_string(i) + " is " +
                        std::to_string(t.at(i));
                  return false;
                }
              auto cert = detect_periodicity(k);
              if (!cert || cert->p != 1) {
                why = "no period-1 certificate";
                return false;
              }
              return true;
            });

  criterion("2. stable tor of truncated polynomial quotients matches the min formula",
            [](std::string& why) {
              const int cases[4][3] = {{4, 1, 1}, {4, 1, 3}, {4, 2, 2}, {5, 2, 3}};
              for (const auto& c : cases) {
                const int n = c[0], a = c[1], b = c[2];
                auto alg = monomial_complete_intersection(PrimeField(3), {n});
                auto power = [&](int e) {
                  return cyclic_by_labels(
                      alg, {e == 1 ? "x" : "x^" + std::to_string(e)},
                      "A/(x^" + std::to_string(e) + ")");
                };
                TateTable t = tate_tor(power(a), power(b), -8, 8);
                const int want = std::min(std::min(a, b), std::min(n - a, n - b));
                for (int i = -8; i <= 8; ++i)
                  if (t.at(i) != want) {
                    why = "n=" + std::to_string(n) + " a=" + std::to_string(a) +
                          " b=" + std::to_string(b) + " degree " + std::to_string(i) +
                          ": " + std::to_string(t.at(i)) + " != " +
                          std::to_string(want);
                    return false;
                  }
              }
              return true;
            });

  Corpus corpus = builtin_corpus();
  std::vector<CheckReport> battery = run_battery(corpus);

  criterion("3. symmetry suite clean over the corpus, non-vacuous on an orthogonal pair",
            [&](std::string& why) {
              int seen = 0;
              for (const auto& r : battery)
                if (r.id == "symmetry" || r.id == "full_symmetry") {
                  ++seen;
                  if (r.verdict == Verdict::refuted) {
                    why = render_report(r);
                    return false;
                  }
                }
              if (seen == 0) {
                why = "no symmetry reports";
                return false;
              }
              auto a = monomial_complete_intersection(PrimeField(2), {2, 2});
              TateCache c(8);
              Module mx = cyclic_by_labels(a, {"x"}, "A/(x)");
              Module my = cyclic_by_labels(a, {"y"}, "A/(y)");
              CheckReport r = check_symmetry(c, mx, my, -8, 8);
              if (r.verdict != Verdict::certified_all_degrees) {
                why = "orthogonal pair not certified: " + render_report(r);
                return false;
              }
              if (!c.ext(mx, my, -8, 8).all_zero() ||
                  !c.ext(my, mx, -8, 8).all_zero()) {
                why = "orthogonal pair tables are not identically zero";
                return false;
              }
              return true;
            });

  criterion("4. duality equalities hold degreewise across the corpus product set",
            [&](std::string& why) {
              const char* ids[] = {"matlis_duality", "balancedness", "ar_duality",
                                   "dagger_swap", "betti_bass_mirror"};
              int pairs = 0;
              for (const auto& r : battery)
                for (const char* id : ids)
                  if (r.id == id && r.qualifier != "rejected-non-gorenstein") {
                    if (r.verdict == Verdict::refuted) {
                      why = render_report(r);
                      return false;
                    }
                    if (r.id == std::string("matlis_duality")) ++pairs;
                  }
              if (pairs < 25) {
                why = "only " + std::to_string(pairs) + " pairs covered";
                return false;
              }
              return true;
            });

  criterion("5. betti numbers of k grow linearly and mirror across the splice",
            [](std::string& why) {
              auto a = monomial_complete_intersection(PrimeField(2), {2, 2});
              Module k = residue_field(a);
              std::vector<int> ord = betti_numbers(k, 8);
              TateTable t = tate_ext(k, k, -9, 8);
              for (int i = 0; i <= 8; ++i) {
                if (ord[(size_t)i] != i + 1 || t.at(i) != i + 1) {
                  why = "degree " + std::to_string(i) + ": ordinary " +
                        std::to_string(ord[(size_t)i]) + ", stable " +
                        std::to_string(t.at(i));
                  return false;
                }
              }
              for (int i = 0; i <= 7; ++i)
                if (t.at(-i - 1) != t.at(i)) {
                  why = "mirror fails at " + std::to_string(i);
                  return false;
                }
              return true;
            });

  criterion("6. linkage pairs off the chain quotients and its square fixes cyclics",
            [&](std::string& why) {
              auto a = monomial_complete_intersection(PrimeField(3), {4});
              Module mx = cyclic_by_labels(a, {"x"}, "A/(x)");
              Module mx3 = cyclic_by_labels(a, {"x^3"}, "A/(x^3)");
              LinkageDatum d = make_linkage_datum(a, zero_ideal(a));
              if (!is_linked(mx, mx3, d) || !is_linked(mx3, mx, d)) {
                why = "chain quotients are not linked";
                return false;
              }
              IsoResult w = is_isomorphic(mx, link_operator(mx3));
              if (w.verdict != IsoVerdict::yes || !w.witness) {
                why = "no isomorphism witness";
                return false;
              }
              TateCache c(8);
              if (check_even_linkage(c, mx, -8, 8).verdict == Verdict::refuted) {
                why = "profile changes along double linkage";
                return false;
              }
              for (const auto& ca : corpus.algebras) {
                if (!ca.alg->gorenstein) continue;
                for (const Module& m : ca.modules) {
                  if (!is_stable(m) || m.kdim == 0) continue;
                  if (minimal_generators(m).cols != 1) continue;
                  Module ll = link_operator(link_operator(m));
                  if (is_isomorphic(m, ll).verdict != IsoVerdict::yes) {
                    why = "double link moves " + m.name + " over " + ca.alg->name;
                    return false;
                  }
                }
              }
              return true;
            });

  criterion("7. a degree-two class flattens the resolution of k",
            [](std::string& why) {
              auto a = monomial_complete_intersection(PrimeField(2), {2, 2});
              Module k = residue_field(a);
              ReducingClassSearch s = find_reducing_class(k, 2, 10);
              if (!s.found) {
                why = "no reducing class found";
                return false;
              }
              if (s.tried > 8) {
                why = "search needed " + std::to_string(s.tried) + " candidates";
                return false;
              }
              if (s.after.value != 1) {
                why = "complexity estimate " + s.after.to_string();
                return false;
              }
              std::vector<int> b = betti_numbers(*s.middle, 8);
              for (int i = 3; i <= 8; ++i)
                if (b[(size_t)i] != b[2]) {
                  why = "betti not constant from degree 2";
                  return false;
                }
              return true;
            });

  criterion("8. basis-change invariance, window exactness, stable/ordinary agreement",
            [&](std::string& why) {
              auto a = monomial_complete_intersection(PrimeField(2), {2, 2});
              Module m = cyclic_by_labels(a, {"x"}, "A/(x)");
              Module n = cyclic_by_labels(a, {"y"}, "A/(y)");
              Module k = residue_field(a);
              std::vector<int> base_e = tate_ext(m, k, -4, 4).dims;
              std::vector<int> base_t = tate_tor(m, n, -4, 4).dims;
              std::mt19937_64 rng(0xC0FFEE);
              for (int trial = 0; trial < 100; ++trial) {
                Mat pm = random_invertible(a->fld, m.kdim, rng);
                Mat pn = random_invertible(a->fld, n.kdim, rng);
                Module mc = conjugate(m, pm);
                Module nc = conjugate(n, pn);
                if (tate_ext(mc, k, -4, 4).dims != base_e ||
                    tate_tor(mc, nc, -4, 4).dims != base_t) {
                  why = "dims moved under basis change, trial " + std::to_string(trial);
                  return false;
                }
              }
              for (const auto& ca : corpus.algebras) {
                if (!ca.alg->gorenstein) continue;
                for (const Module& mm : ca.modules)
                  validate_complete_resolution(complete_resolution(mm, -6, 6));
                for (const Module& mm : ca.modules)
                  for (const Module& nn : ca.modules) {
                    TateTable te = tate_ext(mm, nn, 1, 8);
                    std::vector<int> oe = ordinary_ext_dims(mm, nn, 8);
                    for (int i = 1; i <= 8; ++i)
                      if (te.at(i) != oe[(size_t)i]) {
                        why = "stable and ordinary ext disagree for (" + mm.name +
                              ", " + nn.name + ") over " + ca.alg->name +
                              " at degree " + std::to_string(i);
                        return false;
                      }
                  }
              }
              return true;
            });

  criterion("9. the non-Gorenstein control is rejected everywhere, never computed",
            [&](std::string& why) {
              auto ng = monomial_quotient(PrimeField(2), {"x", "y"},
                                          {{2, 0}, {1, 1}, {0, 2}});
              if (is_gorenstein(*ng)) {
                why = "control algebra reported Gorenstein";
                return false;
              }
              Module k = residue_field(ng);
              const errc want = errc::non_gorenstein;
              if (!expect_code(want, [&] { complete_resolution(k, -2, 2); }, why,
                               "complete_resolution"))
                return false;
              if (!expect_code(want, [&] { cosyzygy(k, 1); }, why, "cosyzygy"))
                return false;
              if (!expect_code(want, [&] { dagger(k); }, why, "dagger")) return false;
              TateCache c(8);
              Ideal z = zero_ideal(ng);
              const std::vector<std::pair<std::string, std::function<void()>>> ops = {
                  {"check_symmetry", [&] { check_symmetry(c, k, k, -8, 8); }},
                  {"check_full_symmetry", [&] { check_full_symmetry(c, k, k, -8, 8); }},
                  {"check_matlis_duality",
                   [&] { check_matlis_duality(c, k, k, -8, 8); }},
                  {"check_balancedness", [&] { check_balancedness(c, k, k, -8, 8); }},
                  {"check_ar_duality", [&] { check_ar_duality(c, k, k, -8, 8); }},
                  {"check_betti_bass_mirror",
                   [&] { check_betti_bass_mirror(c, k, -8, 8); }},
                  {"check_gorenstein_ideal_betti_bass",
                   [&] { check_gorenstein_ideal_betti_bass(c, z, -8, 8); }},
                  {"check_reducible_complexity",
                   [&] { check_reducible_complexity(c, k, k, -8, 8); }},
                  {"check_sup_inf", [&] { check_sup_inf(c, k, k, 8); }},
                  {"check_dagger_swap", [&] { check_dagger_swap(c, k, k, -8, 8); }},
                  {"check_gorenstein_pair",
                   [&] { check_gorenstein_pair(c, z, z, -8, 8); }},
                  {"check_linked_ext", [&] { check_linked_ext(c, k, k, -8, 8); }},
                  {"check_even_linkage", [&] { check_even_linkage(c, k, -8, 8); }},
              };
              for (const auto& [name, fn] : ops)
                if (!expect_code(want, fn, why, name)) return false;
              int rejected = 0;
              for (const auto& r : battery)
                if (r.qualifier == "rejected-non-gorenstein") ++rejected;
              if (rejected == 0) {
                why = "battery produced no rejection reports";
                return false;
              }
              return true;
            });

  if (failures) {
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all 9 criteria passed" << std::endl;
  return 0;
}
