#include <doctest.h>

#include "cli/app.hpp"
#include "cli/tables.hpp"
#include "cli/verify.hpp"

#include <horikawa/horikawa_moduli.hpp>

#include <numeric>
#include <sstream>

using namespace horikawa;
using namespace horikawa::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TableRequest request(const std::string& id, long n_min, long n_max) {
  TableRequest r;
  r.table = id;
  r.n_min = n_min;
  r.n_max = n_max;
  return r;
}

const Json* find_row(const Json& table, const std::string& key, long value) {
  for (const auto& row : table["rows"])
    if (row.contains(key) && row[key] == value) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("hj subcommand examples") {
  auto a = call({"hj", "expand", "4", "1"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "[4]  T δ=1 m=2 a=1  2-Gorenstein\n");

  auto b = call({"hj", "discrepancies", "3", "2", "3"});
  CHECK(b.code == kExitOk);
  CHECK(b.out == "-1/2 -1/2 -1/2\n");

  auto c = call({"hj", "eval", "2", "5"});
  CHECK(c.code == kExitOk);
  CHECK(c.out == "9/5\n");

  auto d = call({"hj", "classify", "9/5"});
  CHECK(d.code == kExitOk);
  CHECK(d.out.find("T δ=1 m=3 a=2") != std::string::npos);

  auto e = call({"hj", "grow", "4", "--side", "left"});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("[2,5]") != std::string::npos);

  auto f = call({"hj", "enum", "--max-len", "2", "--format", "json"});
  CHECK(f.code == kExitOk);
  CHECK(Json::parse(f.out)["rows"].size() == 4);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"hj", "expand", "four", "1"}).code == kExitUsage);
  CHECK(call({"hj", "expand", "4"}).code == kExitUsage);
  CHECK(call({"tables", "T9"}).code == kExitUsage);
  CHECK(call({"verify", "bogus"}).code == kExitUsage);

  const auto gcd = call({"hj", "expand", "4", "2"});
  CHECK(gcd.code == kExitFailure);
  CHECK(gcd.err.find("gcd") != std::string::npos);
  const auto one = call({"hj", "eval", "3", "1", "3"});
  CHECK(one.code == kExitFailure);
  CHECK(one.err.find(">= 2") != std::string::npos);
  CHECK(call({"hj", "discrepancies", "1"}).code == kExitFailure);
  CHECK(call({"verify", "--n-max", "10"}).code == kExitFailure);
}

TEST_CASE("T2 at (20, 7)") {
  const auto r = call({"tables", "T2", "--n", "20", "--d", "7", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const Json t = Json::parse(r.out);
  REQUIRE(t["rows"].size() == 1);
  const Json& row = t["rows"][0];
  CHECK(row["regime"] == "n>=3d-1");
  CHECK(row["values"]["dim|L00|"] == 161);
  CHECK(row["anchor"] == "T2:n>=3d-1");
}

TEST_CASE("symbolic rendering when the range shares a regime") {
  const auto r = call({"tables", "T2", "--n-min", "20", "--n-max", "40", "--d", "3"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("7n+21") != std::string::npos);
  const auto e = call({"tables", "T2", "--n-min", "20", "--n-max", "40", "--d", "3", "--eval"});
  CHECK(e.out.find("7n+21") == std::string::npos);
  CHECK(e.out.find(std::to_string(7 * 20 + 21)) != std::string::npos);
}

TEST_CASE("T1 at n = 20 follows the row formulas") {
  const auto r = call({"tables", "T1", "--n", "20", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const Json t = Json::parse(r.out);
  for (long d : admissible_ds(Kind::First, 20)) {
    const Json* row = find_row(t, "d", d);
    REQUIRE(row != nullptr);
    const auto tr = table1_row(20, d);
    const Json& v = (*row)["values"];
    CHECK(v["dim D'"] == tr.d_prime->eval(20, d).get_si());
    if (tr.d_double)
      CHECK(v["dim D''"] == tr.d_double->eval(20, d).get_si());
    else
      CHECK(v["dim D''"].is_null());
  }
}

TEST_CASE("empty cells as -1 only in text and csv") {
  const auto a = call({"tables", "T1", "--n", "15", "--d", "0", "--format", "csv", "--empty-as=-1"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out.find(",-1,") != std::string::npos);
  const auto b = call({"tables", "T1", "--n", "15", "--d", "0", "--format", "csv"});
  CHECK(b.out.find("\xE2\x88\x85") != std::string::npos);
}

TEST_CASE("topology at n = 13, first kind") {
  const auto r = call({"tables", "topology", "--kind", "first", "--n", "13"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("1b") != std::string::npos);
  CHECK(r.out.find("-96") != std::string::npos);
  CHECK(r.out.find("29H+12(-E8)") != std::string::npos);
}

TEST_CASE("empty admissible set is not an error") {
  const auto r = call({"tables", "T1", "--n", "14", "--d", "2", "--format", "json"});
  CHECK(r.code == kExitOk);
  const Json t = Json::parse(r.out);
  CHECK(t["rows"].empty());
  CHECK_FALSE(t["note"].get<std::string>().empty());
}

TEST_CASE("JSON round trip for every table type") {
  std::vector<TableRequest> reqs = {request("T1", 14, 24), request("T2", 14, 24), request("T3", 14, 24),
                                    request("hj", 2, 12), request("topology", 5, 24)};
  auto strata2 = request("strata", 7, 24);
  strata2.kind = Kind::Second;
  auto strata1 = request("strata", 14, 24);
  strata1.kind = Kind::First;
  auto chains = request("chains", 0, -1);
  chains.max_len = 4;
  auto symbolic = request("T2", 20, 40);
  symbolic.d_min = symbolic.d_max = 3;
  auto topo2 = request("topology", 7, 24);
  topo2.kind = Kind::Second;
  auto empty = request("T1", 14, 14);
  empty.d_min = empty.d_max = 2;
  for (const auto& r : {strata2, strata1, chains, symbolic, topo2, empty}) reqs.push_back(r);

  for (const auto& req : reqs) {
    CAPTURE(req.table);
    const Table t = build_table(req);
    const std::string text = table_to_json(t).dump();
    const Table back = table_from_json(Json::parse(text));
    CHECK(back == t);
    for (const auto& row : t.rows) CHECK(row_from_json(t, row_to_json(t, row)) == row);
    std::ostringstream rendered;
    render(rendered, t, Format::Json, {});
    CHECK(table_from_json(Json::parse(rendered.str())) == t);
  }
  CHECK(build_table(symbolic).symbolic);
}

TEST_CASE("cells round trip individually") {
  for (const Cell& c : {Cell::num(Integer("123456789012345678901234567890")), Cell::num(-7), Cell::str("7n+21"),
                        Cell::boolean(true), Cell::boolean(false), Cell::empty(), Cell::undefined(),
                        Cell::non_reduced()})
    CHECK(cell_from_json(Json::parse(cell_to_json(c).dump())) == c);
  CHECK_THROWS(table_from_json(Json::parse("{\"id\": 3}")));
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"tables", "T3", "--n-min", "14", "--n-max", "30", "--format", "csv"},
           {"tables", "chains", "--max-len", "5", "--format", "json"},
           {"verify", "moduli", "--n-max", "30", "--format", "json"}}) {
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify: coprime pair count matches the totient oracle") {
  long brute = 0;
  for (long n = 2; n <= 400; ++n)
    for (long q = 1; q < n; ++q) brute += std::gcd(n, q) == 1;
  CHECK(coprime_pair_count(400) == brute);

  const auto r = call({"verify", "hj", "--n-max", "14", "--hj-n-max", "400", "--chain-max-len", "5", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const Json rep = Json::parse(r.out);
  CHECK(rep["status"] == "pass");
  CHECK(rep["checks"][0]["name"] == "hj-round-trip");
  CHECK(rep["checks"][0]["passed"] == brute);
}

TEST_CASE("verify lists every check, skipped ones included") {
  VerifyOptions o;
  o.scope = canonical_scope("tangent");
  o.n_max = 20;
  const auto rep = run_verify(o);
  CHECK(rep.ok());
  CHECK(rep.checks.size() == 13);
  long ran = 0;
  for (const auto& c : rep.checks) ran += c.ran;
  CHECK(ran == 1);
  CHECK(canonical_scope("hj") == "hj-calculus");
  CHECK(canonical_scope("picard-lattice") == "picard-lattice");
  CHECK_THROWS_AS(canonical_scope("nope"), UsageError);
}

TEST_CASE("fault injection names the failing cell") {
  const auto r = call({"verify", "systems", "--n-max", "14", "--tamper-gram", "0,1,2", "--format", "json"});
  CHECK(r.code == kExitFailure);
  const Json rep = Json::parse(r.out);
  CHECK(rep["status"] == "fail");
  const Json& f = rep["first_failure"];
  CHECK(f["n"] == 14);
  CHECK(f.contains("d"));
  CHECK(f.contains("which"));
  CHECK(f.contains("expected"));
  CHECK(f.contains("got"));

  const auto text = call({"verify", "systems", "--n-max", "14", "--tamper-gram", "0,1,2"});
  CHECK(text.code == kExitFailure);
  CHECK(text.out.find("\"check\":\"table2-two-path\"") != std::string::npos);
}
