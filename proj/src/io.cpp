#include "tatekit/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tatekit/errors.hpp"

namespace tatekit {

using json = nlohmann::ordered_json;

namespace {

std::string where(const std::string& origin) {
  return origin.empty() ? "input" : origin;
}

// byte offset to a line:column pair for parse diagnostics
std::string line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::bad_input,
         where(origin) + ": parse error at " + line_col(text, e.byte) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& origin) {
  if (!obj.is_object() || !obj.contains(key))
    fail(errc::bad_input, where(origin) + ": missing field \"" + key + "\"");
  return obj.at(key);
}

int int_field(const json& obj, const char* key, const std::string& origin) {
  const json& v = field(obj, key, origin);
  if (!v.is_number_integer())
    fail(errc::bad_input, where(origin) + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const char* key, const std::string& origin) {
  if (!v.is_array())
    fail(errc::bad_input, where(origin) + ": field \"" + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer())
      fail(errc::bad_input,
           where(origin) + ": field \"" + key + "\" must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Vec coord_vec(const json& v, const char* key, u32 p, const std::string& origin) {
  std::vector<int> raw = int_list(v, key, origin);
  Vec out;
  for (int x : raw) out.push_back((u32)(((x % (int)p) + (int)p) % (int)p));
  return out;
}

PrimeField read_field(const json& obj, const std::string& origin) {
  const json& f = field(obj, "field", origin);
  int p = int_field(f, "char", origin);
  if (p < 2) fail(errc::bad_field, where(origin) + ": characteristic must be a prime");
  return PrimeField((u32)p);
}

AlgebraPtr read_algebra(const json& obj, const std::string& origin) {
  PrimeField fld = read_field(obj, origin);
  std::string kind = field(obj, "kind", origin).get<std::string>();
  if (kind == "monomial_ci") {
    std::vector<std::string> vars;
    for (const auto& v : field(obj, "vars", origin))
      vars.push_back(v.get<std::string>());
    std::vector<int> powers = int_list(field(obj, "powers", origin), "powers", origin);
    if (vars.size() != powers.size())
      fail(errc::bad_input,
           where(origin) + ": \"vars\" and \"powers\" must have the same length");
    return monomial_complete_intersection(fld, powers, vars);
  }
  if (kind != "structure_constants")
    fail(errc::bad_input, where(origin) + ": unknown algebra kind \"" + kind + "\"");
  std::vector<std::string> labels;
  for (const auto& v : field(obj, "labels", origin))
    labels.push_back(v.get<std::string>());
  const int n = (int)labels.size();
  Vec unit = coord_vec(field(obj, "unit", origin), "unit", fld.p(), origin);
  const json& mul = field(obj, "mul", origin);
  if (!mul.is_array() || (int)mul.size() != n)
    fail(errc::bad_input, where(origin) + ": \"mul\" must have one row per basis element");
  std::vector<std::vector<Vec>> sc((size_t)n);
  for (int i = 0; i < n; ++i) {
    if (!mul[(size_t)i].is_array() || (int)mul[(size_t)i].size() != n)
      fail(errc::bad_input, where(origin) + ": \"mul\" row " + std::to_string(i) +
                                " must have one entry per basis element");
    for (int j = 0; j < n; ++j) {
      Vec v = coord_vec(mul[(size_t)i][(size_t)j], "mul", fld.p(), origin);
      if ((int)v.size() != n)
        fail(errc::bad_input, where(origin) + ": \"mul\" entry (" + std::to_string(i) +
                                  "," + std::to_string(j) + ") has the wrong length");
      sc[(size_t)i].push_back(std::move(v));
    }
  }
  return algebra_from_structure_constants(fld, std::move(labels), std::move(sc),
                                          std::move(unit));
}

Module read_module(const json& obj, AlgebraPtr fallback, const std::string& base_dir,
                   const std::string& origin) {
  AlgebraPtr alg;
  if (obj.is_object() && obj.contains("algebra")) {
    const json& a = obj.at("algebra");
    if (a.is_string()) {
      std::filesystem::path p(a.get<std::string>());
      if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
      alg = read_algebra_file(p.string());
    } else {
      alg = read_algebra(a, origin);
    }
  } else {
    if (!fallback)
      fail(errc::bad_input,
           where(origin) + ": no \"algebra\" field and no algebra supplied");
    alg = fallback;
  }
  if (obj.is_object() && obj.contains("kind")) {
    std::string kind = obj.at("kind").get<std::string>();
    if (kind != "cyclic")
      fail(errc::bad_input, where(origin) + ": unknown module kind \"" + kind + "\"");
    const json& gens = field(obj, "ideal", origin);
    if (!gens.is_array())
      fail(errc::bad_input, where(origin) + ": field \"ideal\" must be an array");
    std::vector<Vec> v;
    for (const auto& g : gens) {
      Vec w = coord_vec(g, "ideal", alg->fld.p(), origin);
      if ((int)w.size() != alg->dim)
        fail(errc::bad_input,
             where(origin) + ": ideal generator has the wrong coordinate length");
      v.push_back(std::move(w));
    }
    return cyclic_module(alg, ideal_from_generators(alg, v));
  }
  const int m = int_field(obj, "kdim", origin);
  if (m < 0) fail(errc::bad_input, where(origin) + ": \"kdim\" must be nonnegative");
  const json& act = field(obj, "action", origin);
  if (!act.is_array() || (int)act.size() != alg->dim)
    fail(errc::bad_input,
         where(origin) + ": \"action\" must have one matrix per algebra basis element");
  std::vector<Mat> action;
  for (int i = 0; i < alg->dim; ++i) {
    std::vector<int> flat = int_list(act[(size_t)i], "action", origin);
    if ((int)flat.size() != m * m)
      fail(errc::bad_input, where(origin) + ": action matrix " + std::to_string(i) +
                                " must hold " + std::to_string(m * m) +
                                " row-major entries");
    Mat mat(alg->fld, m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        int x = flat[(size_t)(r * m + c)];
        mat.at(r, c) = (u32)(((x % (int)alg->fld.p()) + (int)alg->fld.p()) %
                             (int)alg->fld.p());
      }
    action.push_back(std::move(mat));
  }
  return make_module(alg, std::move(action));
}

json table_json(const TateTable& t) {
  json o;
  o["kind"] = t.kind == TateTable::Kind::ext ? "ext" : "tor";
  o["lo"] = t.lo;
  o["hi"] = t.hi;
  o["dims"] = t.dims;
  if (t.period) {
    json p;
    p["p"] = t.period->p;
    p["from"] = t.period->from;
    o["period"] = p;
  } else {
    o["period"] = nullptr;
  }
  return o;
}

json evidence_json(const SeqEvidence& e) {
  json o;
  o["label"] = e.label;
  o["lo"] = e.lo;
  o["dims"] = e.dims;
  return o;
}

json report_json(const CheckReport& r) {
  json o;
  o["id"] = r.id;
  o["inputs"] = r.inputs;
  o["lo"] = r.lo;
  o["hi"] = r.hi;
  o["verdict"] = verdict_name(r.verdict);
  o["qualifier"] = r.qualifier;
  if (r.witness_degree)
    o["witness_degree"] = *r.witness_degree;
  else
    o["witness_degree"] = nullptr;
  json ev = json::array();
  for (const auto& e : r.evidence) ev.push_back(evidence_json(e));
  o["evidence"] = ev;
  o["detail"] = r.detail;
  return o;
}

}  // namespace

AlgebraPtr read_algebra_json(const std::string& text, const std::string& origin) {
  return read_algebra(parse(text, origin), origin);
}

AlgebraPtr read_algebra_file(const std::string& path) {
  return read_algebra_json(read_text_file(path), path);
}

std::string write_algebra_json(const Algebra& a) {
  json o;
  o["field"] = json{{"char", (int)a.fld.p()}};
  o["kind"] = "structure_constants";
  o["labels"] = a.labels;
  json unit = json::array();
  for (u32 x : a.unit) unit.push_back((int)x);
  o["unit"] = unit;
  json mul = json::array();
  for (int i = 0; i < a.dim; ++i) {
    json row = json::array();
    for (int j = 0; j < a.dim; ++j) {
      json v = json::array();
      for (u32 x : a.sc[(size_t)i][(size_t)j]) v.push_back((int)x);
      row.push_back(v);
    }
    mul.push_back(row);
  }
  o["mul"] = mul;
  return o.dump();
}

Module read_module_json(const std::string& text, AlgebraPtr fallback,
                        const std::string& base_dir, const std::string& origin) {
  return read_module(parse(text, origin), fallback, base_dir, origin);
}

Module read_module_file(const std::string& path, AlgebraPtr fallback) {
  return read_module_json(read_text_file(path), fallback,
                          std::filesystem::path(path).parent_path().string(), path);
}

std::string write_module_json(const Module& m, const std::string& algebra_ref) {
  json o;
  if (algebra_ref.empty())
    o["algebra"] = json::parse(write_algebra_json(*m.alg));
  else
    o["algebra"] = algebra_ref;
  o["kdim"] = m.kdim;
  json act = json::array();
  for (const Mat& a : m.action) {
    json flat = json::array();
    for (u32 x : a.a) flat.push_back((int)x);
    act.push_back(flat);
  }
  o["action"] = act;
  return o.dump();
}

std::string write_tate_table_json(const TateTable& t) { return table_json(t).dump(); }

TateTable read_tate_table_json(const std::string& text) {
  json o = parse(text, "table");
  TateTable t;
  std::string kind = field(o, "kind", "table").get<std::string>();
  if (kind == "ext")
    t.kind = TateTable::Kind::ext;
  else if (kind == "tor")
    t.kind = TateTable::Kind::tor;
  else
    fail(errc::bad_input, "table: unknown kind \"" + kind + "\"");
  t.lo = int_field(o, "lo", "table");
  t.hi = int_field(o, "hi", "table");
  t.dims = int_list(field(o, "dims", "table"), "dims", "table");
  if ((int)t.dims.size() != t.hi - t.lo + 1)
    fail(errc::bad_input, "table: \"dims\" length does not match the window");
  const json& p = field(o, "period", "table");
  if (!p.is_null())
    t.period = Periodicity{int_field(p, "p", "table"), int_field(p, "from", "table")};
  return t;
}

std::string write_profile_json(const BettiBassProfile& p) {
  json o;
  o["kind"] = "profile";
  o["module"] = p.module_name;
  o["lo"] = p.lo;
  o["hi"] = p.hi;
  o["betti"] = p.stable_betti;
  o["bass"] = p.stable_bass;
  o["ordinary_betti"] = p.ordinary_betti;
  return o.dump();
}

std::string write_report_json(const CheckReport& r) { return report_json(r).dump(); }

std::string write_reports_json(const std::vector<CheckReport>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_json(r));
  return arr.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::bad_input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::bad_input, "cannot write " + path);
  out << text;
}

}  // namespace tatekit
