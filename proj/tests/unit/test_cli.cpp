#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "cli.hpp"
#include "odla/classify3d.hpp"
#include "odla/document.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = odla::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kAbelian = R"({"dim": 3})";
// IX brackets with a nonzero 2-form that the bracket cannot carry.
const std::string kIxBadOmega =
    R"({"dim": 3, "c_entries": [[1, 2, 3, "1"], [2, 3, 1, "1"], [1, 3, 2, "-1"]], "omega_entries": [[1, 2, "1"]]})";

}  // namespace

TEST_CASE("validate") {
  const Result ok = run({"--json", "validate"}, kAbelian);
  CHECK(ok.code == odla::cli::kExitOk);
  const json r = json::parse(ok.out);
  CHECK(r["schema_version"] == odla::cli::kReportSchemaVersion);
  CHECK(r["valid"] == true);
  CHECK(r["t"] == json::array({"0", "0", "0"}));

  const Result bad = run({"--json", "validate", "-"}, kIxBadOmega);
  CHECK(bad.code == odla::cli::kExitNotAlgebra);
  const json b = json::parse(bad.out);
  CHECK(b["valid"] == false);
  CHECK(!b["residual"].empty());

  CHECK(run({"validate"}, kAbelian).out.find("valid") != std::string::npos);
  CHECK(run({"--force-omega", "validate"}, kIxBadOmega).code == odla::cli::kExitOk);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == odla::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == odla::cli::kExitUsage);
  CHECK(run({"validate"}, "{not json").code == odla::cli::kExitUsage);
  CHECK(run({"validate", "/nonexistent/file.json"}).code == odla::cli::kExitUsage);
  CHECK(run({"generate", "XI"}).code == odla::cli::kExitUsage);
  CHECK(run({"generate", "IX_a"}).code == odla::cli::kExitUsage);
  CHECK(run({"generate", "IX", "--param", "1"}).code == odla::cli::kExitUsage);
  CHECK(run({"orbit-sample", "IX"}).code == odla::cli::kExitUsage);
  CHECK(run({"classify"}, R"({"dim": 4})").code == odla::cli::kExitUsage);
  CHECK(run({"deformability"}, R"({"dim": 2})").code == odla::cli::kExitUsage);
  const Result e = run({"validate"}, "{not json");
  CHECK(!e.err.empty());
}

TEST_CASE("generate piped into classify") {
  const Result gen = run({"generate", "IX_a", "--param", "1"});
  REQUIRE(gen.code == 0);
  const Result cls = run({"--json", "classify"}, gen.out);
  CHECK(cls.code == 0);
  const json r = json::parse(cls.out);
  CHECK(r["label"] == "IX_a");
  CHECK(r["parameter"].get<double>() == doctest::Approx(1.0));
  CHECK(r["transform_error"].get<double>() <= 1e-9);
  CHECK(r["certificates"]["b_equals_minus_2na"] == true);

  const Result text = run({"classify"}, gen.out);
  CHECK(text.code == 0);
  CHECK(text.out.find("IX_a") != std::string::npos);
}

TEST_CASE("classify rejects non-algebras with exit 1") {
  const Result r = run({"--json", "classify"}, kIxBadOmega);
  CHECK(r.code == odla::cli::kExitNotAlgebra);
  CHECK(json::parse(r.out)["valid"] == false);
  CHECK(run({"--force-omega", "classify"}, kIxBadOmega).code == 0);
}

TEST_CASE("decompose") {
  const Result r = run({"--json", "decompose"}, run({"generate", "IX_a", "--param", "1"}).out);
  CHECK(r.code == 0);
  const json d = json::parse(r.out);
  CHECK(d["a"] == json::array({"0", "0", "1"}));
  CHECK(d["b"] == json::array({"0", "0", "-2"}));
}

TEST_CASE("tables") {
  const Result r = run({"--json", "tables"});
  REQUIRE(r.code == 0);
  const json t = json::parse(r.out);
  REQUIRE(t["tables"].size() == 2);
  CHECK(t["tables"][0]["rows"].size() == 6);
  CHECK(t["tables"][1]["rows"].size() == 13);
  for (const auto& table : t["tables"])
    for (const auto& row : table["rows"]) {
      CAPTURE(row["label"]);
      const std::string doc = row["document"].dump();
      CHECK(run({"validate"}, doc).code == 0);
      const auto reparsed = odla::parse_document(doc);
      const std::string canonical = odla::serialize(reparsed.spec, reparsed.metadata);
      CHECK(odla::serialize(odla::parse(canonical), reparsed.metadata) == canonical);
    }

  const Result text = run({"tables"});
  CHECK(text.out.find("# VIII_na") != std::string::npos);
}

TEST_CASE("orbit-sample and deformability") {
  const Result a = run({"orbit-sample", "VII_a", "--param", "2", "--seed", "3"});
  const Result b = run({"orbit-sample", "VII_a", "--param", "2", "--seed", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const json c = json::parse(run({"--json", "classify"}, a.out).out);
  CHECK(c["label"] == "VII_a");
  CHECK(c["parameter"].get<double>() == doctest::Approx(2.0));

  const Result d = run({"--json", "deformability"}, kIxBadOmega);
  CHECK(d.code == 0);
  CHECK(json::parse(d.out)["admits"] == true);
}
