#pragma once

#include <string>
#include <vector>

#include "tatekit/algebra.hpp"
#include "tatekit/checks.hpp"
#include "tatekit/homology.hpp"
#include "tatekit/invariants.hpp"
#include "tatekit/module.hpp"

namespace tatekit {

// JSON text formats. Readers throw tk_error(errc::bad_input) with a
// line/field diagnostic on malformed input; writers produce text the readers
// accept and round-trip to a structurally identical object.

AlgebraPtr read_algebra_json(const std::string& text, const std::string& origin = "");
AlgebraPtr read_algebra_file(const std::string& path);
std::string write_algebra_json(const Algebra& a);

// A module file names its algebra inline, by path (resolved against
// base_dir), or not at all, in which case the fallback algebra is required.
Module read_module_json(const std::string& text, AlgebraPtr fallback = nullptr,
                        const std::string& base_dir = "",
                        const std::string& origin = "");
Module read_module_file(const std::string& path, AlgebraPtr fallback = nullptr);

// algebra_ref empty: embed the algebra inline; otherwise emit it as a path.
std::string write_module_json(const Module& m, const std::string& algebra_ref = "");

std::string write_tate_table_json(const TateTable& t);
TateTable read_tate_table_json(const std::string& text);

std::string write_profile_json(const BettiBassProfile& p);
std::string write_report_json(const CheckReport& r);
std::string write_reports_json(const std::vector<CheckReport>& rs);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tatekit
