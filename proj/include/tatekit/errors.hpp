#pragma once

#include <stdexcept>
#include <string>

namespace tatekit {

// Every rejection the engine can issue, named so callers can branch on the cause.
enum class errc {
  bad_field,
  bad_dimension,
  bad_unit,
  non_commutative,
  non_associative,
  non_local,
  improper_ideal,
  not_a_module,
  non_invariant_subspace,
  non_gorenstein,
  unstable_module,
  annihilator_violation,
  bad_cocycle,
  field_mismatch,
  shape_mismatch,
  bad_input,
  budget_exhausted,
};

const char* errc_name(errc c);

class tk_error : public std::runtime_error {
 public:
  tk_error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw tk_error(c, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_field: return "bad-field";
    case errc::bad_dimension: return "bad-dimension";
    case errc::bad_unit: return "bad-unit";
    case errc::non_commutative: return "non-commutative";
    case errc::non_associative: return "non-associative";
    case errc::non_local: return "non-local";
    case errc::improper_ideal: return "improper-ideal";
    case errc::not_a_module: return "not-a-module";
    case errc::non_invariant_subspace: return "non-invariant-subspace";
    case errc::non_gorenstein: return "non-gorenstein";
    case errc::unstable_module: return "unstable-module";
    case errc::annihilator_violation: return "annihilator-violation";
    case errc::bad_cocycle: return "bad-cocycle";
    case errc::field_mismatch: return "field-mismatch";
    case errc::shape_mismatch: return "shape-mismatch";
    case errc::bad_input: return "bad-input";
    case errc::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

}  // namespace tatekit
