#include "handsign/eval.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "handsign/pipeline.hpp"
#include "handsign/raster.hpp"

#include <json.hpp>

namespace handsign {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string percent(const std::optional<double>& rate) {
  if (!rate) return "--";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", *rate);
  return buf;
}

std::optional<double> meanOf(const std::vector<SetStats>& sets,
                             std::optional<double> (SetStats::*rate)() const) {
  double sum = 0.0;
  int n = 0;
  for (const SetStats& s : sets) {
    if (const auto r = (s.*rate)()) {
      sum += *r;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

}  // namespace

std::optional<double> SetStats::validRate() const {
  if (validTotal == 0) return std::nullopt;
  return 100.0 * validCorrect / validTotal;
}

std::optional<double> SetStats::invalidRate() const {
  if (invalidTotal == 0) return std::nullopt;
  return 100.0 * invalidCorrect / invalidTotal;
}

std::optional<double> EvalReport::overallValid() const {
  return meanOf(sets, &SetStats::validRate);
}

std::optional<double> EvalReport::overallInvalid() const {
  return meanOf(sets, &SetStats::invalidRate);
}

std::vector<ManifestEntry> parseManifest(const std::string& text) {
  std::vector<ManifestEntry> entries;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::string where = " (line " + std::to_string(lineNo) + ")";

    std::vector<std::string> fields;
    std::istringstream fieldStream(stripped);
    std::string field;
    while (std::getline(fieldStream, field, ',')) {
      fields.push_back(trim(field));
    }
    if (fields.size() < 2 || fields.size() > 3) {
      fail(ErrorKind::ManifestParseError, "expected path,label[,set]" + where);
    }
    if (fields[0].empty()) {
      fail(ErrorKind::ManifestParseError, "empty path" + where);
    }

    ManifestEntry entry;
    entry.path = fields[0];
    if (fields[1] == "invalid") {
      entry.digit = std::nullopt;
    } else if (fields[1].size() == 1 && fields[1][0] >= '0' && fields[1][0] <= '9') {
      entry.digit = fields[1][0] - '0';
    } else {
      fail(ErrorKind::ManifestParseError,
           "label must be a digit or `invalid`, got `" + fields[1] + "`" + where);
    }
    if (fields.size() == 3 && !fields[2].empty()) {
      entry.set = fields[2];
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ManifestEntry> loadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::IoError, "cannot open manifest " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parseManifest(text.str());
}

EvalReport runEval(const std::vector<ManifestEntry>& entries,
                   const std::filesystem::path& baseDir,
                   const PipelineParams& params, const Vocabulary& vocab) {
  EvalReport report;
  auto statsFor = [&](const std::string& name) -> SetStats& {
    for (SetStats& s : report.sets) {
      if (s.name == name) return s;
    }
    report.sets.push_back(SetStats{name});
    return report.sets.back();
  };

  for (const ManifestEntry& entry : entries) {
    std::filesystem::path path(entry.path);
    if (path.is_relative()) path = baseDir / path;
    const GreyImage grey = loadFrameFile(path);
    const FrameAnalysis analysis = analyzeFrame(grey, params, vocab);

    SetStats& stats = statsFor(entry.set);
    if (entry.digit) {
      ++stats.validTotal;
      if (analysis.result.known && analysis.result.digit == *entry.digit) {
        ++stats.validCorrect;
      }
    } else {
      ++stats.invalidTotal;
      if (!analysis.result.known) {
        ++stats.invalidCorrect;
      }
    }
  }
  return report;
}

std::string formatTable(const EvalReport& report) {
  std::size_t nameWidth = std::string("Overall").size();
  for (const SetStats& s : report.sets) {
    nameWidth = std::max(nameWidth, s.name.size());
  }

  std::ostringstream out;
  auto row = [&](const std::string& name, const std::string& valid,
                 const std::string& invalid) {
    out << name << std::string(nameWidth - name.size() + 2, ' ');
    out << valid << std::string(valid.size() < 10 ? 10 - valid.size() : 2, ' ');
    out << invalid << "\n";
  };

  row("Set", "Valid", "Invalid");
  for (const SetStats& s : report.sets) {
    row(s.name, percent(s.validRate()), percent(s.invalidRate()));
  }
  row("Overall", percent(report.overallValid()), percent(report.overallInvalid()));
  return out.str();
}

std::string formatRecords(const EvalReport& report) {
  std::ostringstream out;
  for (const SetStats& s : report.sets) {
    nlohmann::ordered_json record{
        {"set", s.name},
        {"valid_total", s.validTotal},
        {"valid_correct", s.validCorrect},
        {"invalid_total", s.invalidTotal},
        {"invalid_correct", s.invalidCorrect},
    };
    record["valid_rate"] = s.validRate() ? percent(s.validRate()) : "--";
    record["invalid_rate"] = s.invalidRate() ? percent(s.invalidRate()) : "--";
    out << record.dump() << "\n";
  }
  nlohmann::ordered_json overall{{"set", "overall"}};
  overall["valid_rate"] = percent(report.overallValid());
  overall["invalid_rate"] = percent(report.overallInvalid());
  out << overall.dump() << "\n";
  return out.str();
}

}  // namespace handsign
