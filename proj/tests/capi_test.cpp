#include "doctest.h"
#include "repdescent.h"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>

namespace {

std::string fixture(const char* rel) { return std::string(FIXTURE_DIR) + "/" + rel; }

rd_report* run(const char* verb, const std::string& path, const char* options = nullptr) {
  const char* inputs[] = {path.c_str()};
  rd_report* r = nullptr;
  REQUIRE(rd_dispatch(verb, inputs, 1, options, &r) == RD_OK);
  REQUIRE(r != nullptr);
  return r;
}

}  // namespace

TEST_CASE("version and empty error state") {
  CHECK(std::string(rd_version()) == "1.0.0");
  rd_report* r = run("chartable", fixture("groups/c2.json"));
  CHECK(std::string(rd_last_error()).empty());
  rd_report_free(r);
}

TEST_CASE("chartable through the C surface") {
  rd_report* r = run("chartable", fixture("groups/s3.json"));
  CHECK(rd_report_status(r) == RD_CHECK_PASS);
  CHECK(rd_report_exit_code(r) == 0);
  const std::string json = rd_report_json(r);
  CHECK(json.find("\"verb\": \"chartable\"") != std::string::npos);
  CHECK(std::string(rd_report_summary(r)).rfind("OK chartable  degrees 1 1 2\n", 0) == 0);
  rd_report_free(r);
}

TEST_CASE("fail status and exit code") {
  rd_report* r = run("cocycle-check", fixture("data/s3-gauge-perturbed.json"));
  CHECK(rd_report_status(r) == RD_CHECK_FAIL);
  CHECK(rd_report_exit_code(r) == 1);
  rd_report_free(r);
}

TEST_CASE("vacuous status on two indices") {
  rd_report* r = run("cocycle-check", fixture("data/c3-trivial-2.json"));
  CHECK(rd_report_status(r) == RD_CHECK_VACUOUS);
  CHECK(rd_report_exit_code(r) == 0);
  rd_report_free(r);
}

TEST_CASE("error codes") {
  rd_report* r = reinterpret_cast<rd_report*>(0x1);
  const std::string bad = fixture("invalid/s3-non-normal.json");
  const char* inputs[] = {bad.c_str()};
  CHECK(rd_dispatch("extension", inputs, 1, nullptr, &r) == RD_ERR_NOT_NORMAL);
  CHECK(r == nullptr);
  CHECK(std::string(rd_last_error()).find("conjugating") != std::string::npos);

  CHECK(rd_validate_input(fixture("invalid/c2-short-row.json").c_str(), "chartable") == RD_ERR_SCHEMA);
  CHECK(std::string(rd_last_error()).find("/table/1") != std::string::npos);
  CHECK(rd_validate_input(fixture("invalid/loop-5.json").c_str(), "chartable") == RD_ERR_NOT_A_GROUP);
  CHECK(rd_validate_input(fixture("groups/c2.json").c_str(), "chartable") == RD_OK);
  CHECK(rd_validate_input(fixture("does-not-exist.json").c_str(), "chartable") == RD_ERR_IO);
  CHECK(rd_validate_input(fixture("groups/c2.json").c_str(), "frobnicate") == RD_ERR_INVALID_ARGUMENT);

  const std::string c2 = fixture("groups/c2.json");
  const char* ok_inputs[] = {c2.c_str()};
  CHECK(rd_dispatch("chartable", ok_inputs, 1, "{\"colour\": 1}", &r) == RD_ERR_SCHEMA);
  CHECK(rd_dispatch("chartable", ok_inputs, 1, "{not json", &r) == RD_ERR_SCHEMA);
  CHECK(rd_dispatch(nullptr, ok_inputs, 1, nullptr, &r) == RD_ERR_INVALID_ARGUMENT);
  CHECK(rd_dispatch("auts", ok_inputs, 0, nullptr, &r) == RD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("bound option reaches the engine") {
  const std::string a4 = fixture("groups/a4.json");
  const char* inputs[] = {a4.c_str()};
  rd_report* r = nullptr;
  CHECK(rd_dispatch("auts", inputs, 1, "{\"aut_bound\": 8}", &r) == RD_ERR_BOUND_EXCEEDED);
  CHECK(rd_dispatch("auts", inputs, 1, "{\"aut_bound\": 12}", &r) == RD_OK);
  rd_report_free(r);
}

TEST_CASE("write report to disk") {
  rd_report* r = run("dual", fixture("extensions/s3-over-c3.json"));
  const std::string path = "capi_test_dual.txt";
  REQUIRE(rd_write_report(r, path.c_str(), 1) == RD_OK);
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == rd_report_summary(r));
  CHECK(rd_write_report(r, "/nonexistent-dir/x.json", 0) == RD_ERR_IO);
  rd_report_free(r);
  std::remove(path.c_str());
}
