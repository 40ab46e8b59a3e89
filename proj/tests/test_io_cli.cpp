#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lpo/cli.hpp"
#include "lpo/io.hpp"
#include "lpo/search.hpp"

using namespace lpo;
using nlohmann::json;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli_run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("parse_sequences grammar") {
  const auto single = parse_sequences("--+\n", "mem");
  REQUIRE(single.size() == 1);
  CHECK(single[0].u.str() == "--+");
  CHECK_FALSE(single[0].v.has_value());

  const auto pair = parse_sequences("--+ -+-\n", "mem");
  REQUIRE(pair.size() == 1);
  REQUIRE(pair[0].v.has_value());
  CHECK(pair[0].v->str() == "-+-");

  const auto commented = parse_sequences("# heading\n\n--+\n", "mem");
  CHECK(commented.size() == 1);

  CHECK_THROWS_WITH_AS(parse_sequences("-+0\n", "mem"),
                       "mem:1:3: invalid character '0' in sign string",
                       std::runtime_error);
  CHECK_THROWS_AS(parse_sequences("-++-\n", "mem"), std::runtime_error);
  CHECK_THROWS_AS(parse_sequences("--+ -+- --+\n", "mem"), std::runtime_error);
  CHECK_THROWS_AS(parse_sequences("--+ --++-\n", "mem"), std::runtime_error);
}

TEST_CASE("record JSON round-trip") {
  SearchConfig cfg;
  cfg.ell = 7;
  const auto res = search_lps(cfg);
  REQUIRE(!res.pairs.empty());
  for (const auto& rec : res.pairs) {
    const json j = record_json(rec);
    CHECK(j.at("ell") == 7);
    const auto back = record_from_json(j);
    CHECK(back == rec);
  }
  // JSON lines re-load through the sequence loader as pairs
  std::ostringstream lines;
  lines << record_json(res.pairs[0]).dump() << "\n";
  const auto loaded = parse_sequences(lines.str(), "mem");
  REQUIRE(loaded.size() == 1);
  CHECK(loaded[0].u == res.pairs[0].u);
  REQUIRE(loaded[0].v.has_value());
  CHECK(*loaded[0].v == res.pairs[0].v);
}

TEST_CASE("cli construct") {
  std::string out;
  CHECK(run({"construct", "--ell", "7", "--format", "json"}, &out) == 0);
  const json env = json::parse(out);
  CHECK(env.at("version") == kToolVersion);
  CHECK(env.at("status") == "ok");
  CHECK(env.at("records").at(0).at("u") == "-++-+--");

  CHECK(run({"construct", "--ell", "5"}) == 1);   // 1 mod 4
  CHECK(run({"construct", "--ell", "-3"}) == 1);  // not prime
}

TEST_CASE("cli dim") {
  std::string out;
  CHECK(run({"dim", "--seq", "--+", "--format", "json"}, &out) == 0);
  const json env = json::parse(out);
  const json rec = env.at("records").at(0);
  CHECK(rec.at("ell") == 3);
  CHECK(rec.at("dim") == 2);
  CHECK(rec.at("dim_rank_check") == 2);
  CHECK(rec.at("group") == "cyclic");
  CHECK(rec.at("T") == json::array({1}));

  std::string text;
  CHECK(run({"dim", "--seq", "--+"}, &text) == 0);
  CHECK(text.find("dim 2") != std::string::npos);

  std::string aff;
  CHECK(run({"dim", "--seq", "--+", "--group", "affine", "--format", "json"}, &aff) == 0);
  const json arec = json::parse(aff).at("records").at(0);
  CHECK(arec.at("group") == "affine");
  CHECK(arec.at("dim") == 2);

  CHECK(run({"dim"}) == 2);  // neither --seq nor --in
}

TEST_CASE("cli text and json report identical numbers") {
  std::string text_out, json_out;
  CHECK(run({"bounds", "--ell", "45"}, &text_out) == 0);
  CHECK(run({"bounds", "--ell", "45", "--format", "json"}, &json_out) == 0);
  const json rec = json::parse(json_out).at("records").at(0);
  CHECK(rec.at("tau").at("3") == 17);
  CHECK(rec.at("tau").at("5") == 29);
  CHECK(rec.at("circulant_rank_bound") == 17);
  CHECK(rec.at("circulant_rank_bound_improved") == 21);
  CHECK(rec.at("psd_lower") == 12);
  CHECK(text_out.find("17") != std::string::npos);
  CHECK(text_out.find("21") != std::string::npos);
  CHECK(text_out.find("12") != std::string::npos);
}

TEST_CASE("cli search json lines") {
  std::string out;
  CHECK(run({"search", "--ell", "3", "--format", "json"}, &out) == 0);
  std::istringstream lines(out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    CHECK(j.at("ell") == 3);
    ++count;
  }
  CHECK(count == 9);
}

TEST_CASE("cli search budget exit code") {
  std::string out;
  const int code = run({"search", "--ell", "13", "--budget", "0.0000001"}, &out);
  CHECK(code == 3);
}

TEST_CASE("cli usage errors") {
  CHECK(run({"search"}) == 2);                      // missing --ell
  CHECK(run({"frobnicate"}) == 2);                  // unknown subcommand
  CHECK(run({"search", "--ell", "9", "--mode", "warp"}) == 2);
  CHECK(run({"dim", "--seq", "--0"}) == 2);         // bad sign string
}

TEST_CASE("cli projectors") {
  std::string out;
  CHECK(run({"projectors", "--ell", "9", "--d", "3", "--format", "json"}, &out) == 0);
  const json rec = json::parse(out).at("records").at(0);
  CHECK(rec.at("den") == 9);
  CHECK(rec.at("symbol") == json::array({2, -1, -1, 2, -1, -1, 2, -1, -1}));
}

TEST_CASE("cli vanish") {
  std::string out;
  CHECK(run({"vanish", "--ell", "9"}, &out) == 0);
  CHECK(out.find("no vanishing") != std::string::npos);

  CHECK(run({"vanish", "--ell", "45", "--witness", "--format", "json"}, &out) == 0);
  const json rec = json::parse(out).at("records").at(0);
  CHECK(rec.at("status") == "found");
  CHECK(rec.at("witness").get<std::string>().size() == 45);

  // the Lam-Leung gate rejects ell = 9
  CHECK(run({"vanish", "--ell", "9", "--witness"}, &out) == 1);
}

TEST_CASE("cli hadamard") {
  TempFile pairs("hadamard_pairs.txt", "--+ -+-\n");
  std::string out;
  CHECK(run({"hadamard", "--in", pairs.path, "--format", "json"}, &out) == 0);
  const json rec = json::parse(out).at("records").at(0);
  CHECK(rec.at("order") == 8);
  CHECK(rec.at("check") == "ok");

  std::string text;
  CHECK(run({"hadamard", "--in", pairs.path}, &text) == 0);
  CHECK(text.find("++++++++") == 0);  // first row all ones

  TempFile bad("hadamard_bad.txt", "--+ +++\n");
  std::string err;
  CHECK(run({"hadamard", "--in", bad.path}, &text, &err) == 1);
  CHECK(err.find("sum_v") != std::string::npos);
}

TEST_CASE("cli verify passes at ell = 7 and fails on a doctored fixture") {
  std::string out;
  CHECK(run({"verify", "--ell", "7", "--suite", "all", "--jobs", "2"}, &out) == 0);
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(out.find("verdict PASS") != std::string::npos);

  // a non-LP fixture: psd suite must fail and name itself
  TempFile bad("verify_bad.txt", "---++ ---++\n");
  std::string err;
  CHECK(run({"verify", "--ell", "5", "--suite", "psd", "--in", bad.path}, &out, &err) == 1);
  CHECK(out.find("FAIL") != std::string::npos);
  CHECK(out.find("psd") != std::string::npos);
}

TEST_CASE("cli feasible-dim") {
  std::string out;
  CHECK(run({"feasible-dim", "--ell", "3", "--format", "json"}, &out) == 0);
  const json rec = json::parse(out).at("records").at(0);
  CHECK(rec.at("pair_count") == 9);
  CHECK(rec.at("dim") == 4);
}
