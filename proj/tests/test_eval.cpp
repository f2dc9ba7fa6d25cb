#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "handsign/eval.hpp"
#include "handsign/raster.hpp"
#include "handsign/synth.hpp"

using namespace handsign;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("handsign_eval_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("manifest parsing handles labels, sets and errors") {
  const auto entries = parseManifest(
      "# fixtures\n"
      "a.bmp,3\n"
      "b.bmp,invalid,B\n"
      "\n"
      "c.pgm, 7 , C\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].path == "a.bmp");
  CHECK(entries[0].digit == 3);
  CHECK(entries[0].set == "default");
  CHECK(!entries[1].digit.has_value());
  CHECK(entries[1].set == "B");
  CHECK(entries[2].digit == 7);
  CHECK(entries[2].set == "C");

  auto lineOf = [](const std::string& text) {
    try {
      parseManifest(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ManifestParseError);
      return std::string(e.what());
    }
    FAIL("expected a manifest error");
    return std::string();
  };
  CHECK(lineOf("a.bmp\n").find("line 1") != std::string::npos);
  CHECK(lineOf("a.bmp,3\nb.bmp,ten\n").find("line 2") != std::string::npos);
  CHECK(lineOf("a.bmp,3,setA,extra\n").find("line 1") != std::string::npos);
  CHECK(lineOf(",3\n").find("line 1") != std::string::npos);
}

TEST_CASE("rates are exact percentages and the overall row is their mean") {
  EvalReport report;
  report.sets = {
      {"Sample Set A", 100, 76, 20, 16},
      {"Sample Set B", 100, 82, 20, 17},
      {"Sample Set C", 100, 86, 20, 17},
  };
  CHECK(*report.sets[0].validRate() == 76.0);
  CHECK(*report.sets[0].invalidRate() == 80.0);
  CHECK(*report.overallValid() == doctest::Approx((76.0 + 82.0 + 86.0) / 3));

  const std::string table = formatTable(report);
  CHECK(table.find("Sample Set A") != std::string::npos);
  CHECK(table.find("76.00%") != std::string::npos);
  CHECK(table.find("82.00%") != std::string::npos);
  CHECK(table.find("86.00%") != std::string::npos);
  CHECK(table.find("80.00%") != std::string::npos);
  CHECK(table.find("85.00%") != std::string::npos);
  CHECK(table.find("81.33%") != std::string::npos);
  CHECK(table.find("83.33%") != std::string::npos);

  const std::string records = formatRecords(report);
  CHECK(records.find("\"set\":\"overall\"") != std::string::npos);
  CHECK(records.find("\"valid_rate\":\"81.33%\"") != std::string::npos);
  CHECK(records.find("\"invalid_rate\":\"83.33%\"") != std::string::npos);
}

TEST_CASE("a bucket with no entries prints -- and stays out of the mean") {
  EvalReport report;
  report.sets = {
      {"A", 10, 9, 0, 0},
      {"B", 10, 7, 5, 5},
  };
  CHECK(!report.sets[0].invalidRate().has_value());
  CHECK(*report.overallInvalid() == 100.0);
  CHECK(formatTable(report).find("--") != std::string::npos);
}

TEST_CASE("runEval classifies golden fixtures against their labels") {
  TempDir tmp;
  for (int d = 0; d <= 9; ++d) {
    writeFile(tmp.path / ("digit_" + std::to_string(d) + ".bmp"),
              encodeBmp(renderHand(goldenSpec(d))));
  }
  GreyImage blank = GreyImage::Constant(240, 320, 224);
  writeFile(tmp.path / "blank.pgm", encodePgm(blank));

  std::string manifest;
  for (int d = 0; d <= 9; ++d) {
    manifest += "digit_" + std::to_string(d) + ".bmp," + std::to_string(d) + ",golden\n";
  }
  manifest += "blank.pgm,invalid,golden\n";
  manifest += "digit_4.bmp,7,tricky\n";   // wrong label
  manifest += "digit_5.bmp,invalid,tricky\n";

  const EvalReport report = runEval(parseManifest(manifest), tmp.path,
                                    PipelineParams{}, Vocabulary::defaults());
  REQUIRE(report.sets.size() == 2);
  CHECK(report.sets[0].name == "golden");
  CHECK(report.sets[0].validTotal == 10);
  CHECK(report.sets[0].validCorrect == 10);
  CHECK(report.sets[0].invalidCorrect == 1);
  CHECK(report.sets[1].name == "tricky");
  CHECK(report.sets[1].validCorrect == 0);
  CHECK(report.sets[1].invalidCorrect == 0);
  CHECK(*report.overallValid() == doctest::Approx(50.0));
}
