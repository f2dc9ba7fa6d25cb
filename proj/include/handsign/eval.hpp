#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "handsign/config.hpp"
#include "handsign/skeleton.hpp"

namespace handsign {

/// One manifest row: `path,label[,set]` where label is a digit or `invalid`.
struct ManifestEntry {
  std::string path;
  std::optional<int> digit;  // nullopt = invalid sign
  std::string set = "default";
};

std::vector<ManifestEntry> parseManifest(const std::string& text);
std::vector<ManifestEntry> loadManifest(const std::filesystem::path& path);

struct SetStats {
  std::string name;
  int validTotal = 0;
  int validCorrect = 0;
  int invalidTotal = 0;
  int invalidCorrect = 0;

  std::optional<double> validRate() const;    // percent
  std::optional<double> invalidRate() const;  // percent
};

/// Per-set rows in first-appearance order; overall rates are the unweighted
/// mean of the defined per-set rates.
struct EvalReport {
  std::vector<SetStats> sets;

  std::optional<double> overallValid() const;
  std::optional<double> overallInvalid() const;
};

/// Classifies every entry (paths resolved against baseDir) and buckets the
/// outcomes: a valid sign scores when its digit comes back, an invalid sign
/// when the frame is rejected as unknown.
EvalReport runEval(const std::vector<ManifestEntry>& entries,
                   const std::filesystem::path& baseDir,
                   const PipelineParams& params, const Vocabulary& vocab);

std::string formatTable(const EvalReport& report);
std::string formatRecords(const EvalReport& report);  // JSON lines

}  // namespace handsign
