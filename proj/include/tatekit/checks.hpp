#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tatekit/corpus.hpp"
#include "tatekit/homology.hpp"
#include "tatekit/invariants.hpp"
#include "tatekit/linkage.hpp"

namespace tatekit {

// A statement can be verified on the window, certified for all degrees when
// periodicity pins the tables beyond it, or refuted by a concrete degree.
// Everything weaker is only consistent with what the window shows.
enum class Verdict { verified, consistent_on_window, certified_all_degrees, refuted };
const char* verdict_name(Verdict v);

struct SeqEvidence {
  std::string label;
  int lo = 0;
  std::vector<int> dims;
};

struct CheckReport {
  std::string id;
  std::string inputs;
  int lo = 0, hi = 0;
  Verdict verdict = Verdict::consistent_on_window;
  std::string qualifier;  // "vacuous", "satisfied-degenerately", "hypothesis-not-certified", ...
  std::optional<int> witness_degree;  // set whenever the verdict is refuted
  std::vector<SeqEvidence> evidence;
  std::string detail;
};

std::string render_report(const CheckReport& r);

// Search for a self-extension class of n whose middle extension module drops
// the complexity estimate. Candidates are combinations of the degree-q
// self-extension basis, enumerated exhaustively when the count fits the
// budget and by scalar multiples otherwise.
struct ReducingClassSearch {
  bool found = false;
  bool exhausted = false;  // every candidate in the space was tried
  int degree = 2;
  int tried = 0;
  Vec cocycle;                   // coordinates in N^{rank of the degree-q cover}
  std::optional<Module> middle;  // the extension module of the winning class
  ComplexityEstimate before, after;
};
ReducingClassSearch find_reducing_class(const Module& n, int degree, int horizon,
                                        int budget = 150);

// Complete resolutions, Tate tables, periodicity certificates, and reducing
// class searches shared across checks, keyed by module content (algebra
// table plus action matrices), so equal modules reached along different
// routes hit the same resolution. Windows are sized so every mirrored
// lookup at the given half-width stays inside.
class TateCache {
 public:
  explicit TateCache(int half_width = 8, IsoOptions iso = {});
  ~TateCache();
  TateCache(const TateCache&) = delete;
  TateCache& operator=(const TateCache&) = delete;

  TateTable ext(const Module& m, const Module& n, int lo, int hi);
  TateTable tor(const Module& m, const Module& n, int lo, int hi);
  const CompleteResolutionWindow& window(const Module& m);
  std::optional<Periodicity> certificate(const Module& m);
  const ReducingClassSearch& reducing_class(const Module& n, int degree, int horizon,
                                            int budget = 150);
  int half_width() const;
  IsoOptions iso_options() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Symmetry in vanishing: if the (m, n) table vanishes beyond the threshold
// on one side, the (n, m) table vanishes beyond the mirrored threshold on
// the other. Both directions are evaluated.
CheckReport check_symmetry(TateCache& c, const Module& m, const Module& n, int lo,
                           int hi, int threshold = 1);

// The (m, n) table vanishes everywhere iff the (n, m) table does.
CheckReport check_full_symmetry(TateCache& c, const Module& m, const Module& n,
                                int lo, int hi);

// dim Ext^i(M, N^v) = dim Tor_i(M, N) degreewise (stable versions).
CheckReport check_matlis_duality(TateCache& c, const Module& m, const Module& n,
                                 int lo, int hi);

// Stable Tor is balanced: Tor_i(M, N) = Tor_i(N, M) degreewise.
CheckReport check_balancedness(TateCache& c, const Module& m, const Module& n,
                               int lo, int hi);

// dim Ext^i(M, N) = dim Ext^{-i-1}(N, M (x) A) degreewise; the canonical
// module of a Gorenstein algebra is the algebra itself.
CheckReport check_ar_duality(TateCache& c, const Module& m, const Module& n,
                             int lo, int hi);

// Stable Betti numbers mirror stable Bass numbers: beta_i = mu^{-i-1}.
CheckReport check_betti_bass_mirror(TateCache& c, const Module& m, int lo, int hi);

// For an ideal with Gorenstein quotient, beta_i(A/a) = mu^i(A/a) with no
// mirror shift.
CheckReport check_gorenstein_ideal_betti_bass(TateCache& c, const Ideal& a, int lo,
                                              int hi);

// Vanishing of the (m, n) table for large degrees, small degrees, and all
// degrees rise and fall together. A reducing class for n (or a periodicity
// certificate for m) pins the table and upgrades the agreement.
CheckReport check_reducible_complexity(TateCache& c, const Module& m,
                                       const Module& n, int lo, int hi);

// When stable Tor vanishes in all nonnegative degrees (certified), the top
// nonvanishing ordinary Tor and the bottom nonvanishing ordinary Ext sit at
// degree zero: sup + inf = 0.
CheckReport check_sup_inf(TateCache& c, const Module& m, const Module& n,
                          int horizon);

// dim Ext^i(M^+, N) = dim Tor_{-i-1}(M, N) degreewise, and the same with
// the dagger moved to the Tor side.
CheckReport check_dagger_swap(TateCache& c, const Module& m, const Module& n,
                              int lo, int hi);

// For ideals a, b with Gorenstein quotients: eventual vanishing of
// Ext(A/a, A/b), of Ext(A/b, A/a), and of Tor(A/a, A/b) agree three ways.
CheckReport check_gorenstein_pair(TateCache& c, const Ideal& a, const Ideal& b,
                                  int lo, int hi);

// With N = lambda(M) and Y = lambda(X): Ext(M, X) = Ext(Y, N) and
// Ext(M, M) = Ext(N, N) degreewise; when both inputs are self-linked the
// (M, X) table is symmetric in its arguments.
CheckReport check_linked_ext(TateCache& c, const Module& m, const Module& x,
                             int lo, int hi);

// M and lambda(lambda(M)) share stable Betti and Bass numbers degreewise.
CheckReport check_even_linkage(TateCache& c, const Module& m, int lo, int hi);

struct BatteryOptions {
  int lo = -8, hi = 8;
  int threshold = 1;  // symmetry vanishing threshold
  int horizon = 12;   // positive-degree horizon for ordinary comparisons
  IsoOptions iso;
};

// Runs every check over the corpus: per-module, per-pair, and per-ideal
// instances, with non-Gorenstein rejections surfaced as reports instead of
// silent skips. Output is sorted by check id, then inputs.
std::vector<CheckReport> run_battery(const Corpus& corpus,
                                     const BatteryOptions& opt = {});

bool any_refuted(const std::vector<CheckReport>& reports);

struct BatterySummary {
  int verified = 0, consistent = 0, certified = 0, refuted = 0, rejected = 0;
};
BatterySummary summarize(const std::vector<CheckReport>& reports);

}  // namespace tatekit
