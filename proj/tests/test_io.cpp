#include <doctest.h>

#include <filesystem>
#include <functional>

#include "tatekit/errors.hpp"
#include "tatekit/io.hpp"

using namespace tatekit;

namespace {

AlgebraPtr dual_numbers() { return monomial_complete_intersection(PrimeField(2), {2}); }
AlgebraPtr ci22() { return monomial_complete_intersection(PrimeField(2), {2, 2}); }

std::string err_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const tk_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("algebra serialization matches the fixed layout") {
    auto a = dual_numbers();
    CHECK(write_algebra_json(*a) ==
          R"({"field":{"char":2},"kind":"structure_constants","labels":["1","x"],)"
          R"("unit":[1,0],"mul":[[[1,0],[0,1]],[[0,1],[0,0]]]})");
  }

  TEST_CASE("algebra round trip preserves structure") {
    auto a = ci22();
    AlgebraPtr b = read_algebra_json(write_algebra_json(*a));
    CHECK(same_algebra(*a, *b));
    CHECK(a->labels == b->labels);
    CHECK(write_algebra_json(*b) == write_algebra_json(*a));
  }

  TEST_CASE("monomial shorthand parses to the direct construction") {
    AlgebraPtr b = read_algebra_json(
        R"({"field":{"char":2},"kind":"monomial_ci","vars":["x","y"],"powers":[2,2]})");
    CHECK(same_algebra(*ci22(), *b));
    CHECK(b->name == "F2[x,y]/(x^2,y^2)");
  }

  TEST_CASE("module round trip preserves the representation") {
    auto a = ci22();
    Module k = residue_field(a);
    std::string text = write_module_json(k);
    Module back = read_module_json(text);
    CHECK(back.kdim == 1);
    CHECK(same_algebra(*back.alg, *a));
    CHECK(back.action == k.action);
    CHECK(write_module_json(back) == text);
  }

  TEST_CASE("cyclic shorthand builds a quotient module") {
    auto a = ci22();
    std::string text = R"({"kind":"cyclic","ideal":[[0,1,0,0]]})";
    Module m = read_module_json(text, a);
    CHECK(m.kdim == 2);  // A/(x) has basis {1, y}
    Module direct = cyclic_module(a, ideal_from_generators(a, {label_vec(*a, "x")}));
    CHECK(m.action == direct.action);
  }

  TEST_CASE("module without an algebra needs the fallback") {
    auto a = ci22();
    std::string text = R"({"kdim":1,"action":[[1],[0],[0],[0]]})";
    Module m = read_module_json(text, a);
    CHECK(m.kdim == 1);
    std::string msg = err_of([&] { read_module_json(text); });
    CHECK(msg.find("algebra") != std::string::npos);
  }

  TEST_CASE("module file resolves a relative algebra path") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "tatekit_io_test";
    fs::create_directories(dir);
    write_text_file((dir / "alg.json").string(), write_algebra_json(*ci22()));
    write_text_file((dir / "mod.json").string(),
                    R"({"algebra":"alg.json","kind":"cyclic","ideal":[[0,0,1,0]]})");
    Module m = read_module_file((dir / "mod.json").string());
    CHECK(m.kdim == 2);
    CHECK(same_algebra(*m.alg, *ci22()));
    fs::remove_all(dir);
  }

  TEST_CASE("malformed input yields a located diagnostic") {
    std::string msg = err_of([&] { read_algebra_json("{\"field\": {\n  broken", "a.json"); });
    CHECK(msg.find("a.json") != std::string::npos);
    CHECK(msg.find("line 2") != std::string::npos);
    msg = err_of(
        [&] { read_algebra_json(R"({"field":{"char":2},"kind":"structure_constants"})"); });
    CHECK(msg.find("labels") != std::string::npos);
    msg = err_of([&] {
      read_algebra_json(R"({"field":{"char":2},"kind":"mystery"})");
    });
    CHECK(msg.find("mystery") != std::string::npos);
  }

  TEST_CASE("tate table round trip with and without a period") {
    TateTable t;
    t.kind = TateTable::Kind::ext;
    t.lo = -5;
    t.hi = 5;
    t.dims = {5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6};
    CHECK(write_tate_table_json(t) ==
          R"({"kind":"ext","lo":-5,"hi":5,"dims":[5,4,3,2,1,1,2,3,4,5,6],"period":null})");
    TateTable back = read_tate_table_json(write_tate_table_json(t));
    CHECK(back.dims == t.dims);
    CHECK(!back.period);
    t.kind = TateTable::Kind::tor;
    t.period = Periodicity{2, -3};
    back = read_tate_table_json(write_tate_table_json(t));
    CHECK(back.kind == TateTable::Kind::tor);
    CHECK(back.period->p == 2);
    CHECK(back.period->from == -3);
  }

  TEST_CASE("profile and report serialization carry all fields") {
    auto a = dual_numbers();
    BettiBassProfile p = profile(residue_field(a), -2, 2);
    std::string s = write_profile_json(p);
    CHECK(s.find("\"kind\":\"profile\"") != std::string::npos);
    CHECK(s.find("\"betti\":[1,1,1,1,1]") != std::string::npos);
    CHECK(s.find("\"bass\":[1,1,1,1,1]") != std::string::npos);
    CheckReport r;
    r.id = "symmetry";
    r.inputs = "(k, k) over A";
    r.lo = -8;
    r.hi = 8;
    r.verdict = Verdict::refuted;
    r.witness_degree = 3;
    r.evidence.push_back(SeqEvidence{"ext", -8, {1, 2, 3}});
    std::string rj = write_report_json(r);
    CHECK(rj.find("\"verdict\":\"REFUTED\"") != std::string::npos);
    CHECK(rj.find("\"witness_degree\":3") != std::string::npos);
    CHECK(rj.find("\"label\":\"ext\"") != std::string::npos);
    CHECK(write_reports_json({r, r}).front() == '[');
  }
}
