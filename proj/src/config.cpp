#include "handsign/config.hpp"

#include <fstream>
#include <sstream>

#include "handsign/errors.hpp"

namespace handsign {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parseNumber(const std::string& value, int line) {
  try {
    std::size_t consumed = 0;
    const double v = std::stod(value, &consumed);
    if (consumed == value.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::ConfigParseError,
       "bad numeric value `" + value + "` (line " + std::to_string(line) + ")");
}

}  // namespace

PipelineParams parseConfig(const std::string& text, PipelineParams base) {
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (trim(line).empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorKind::ConfigParseError,
           "expected key = value (line " + std::to_string(lineNo) + ")");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const double v = parseNumber(value, lineNo);
    const std::string where = " (line " + std::to_string(lineNo) + ")";

    if (key == "edge.tau") {
      if (v < 0) fail(ErrorKind::ConfigParseError, "edge.tau must be >= 0" + where);
      base.edgeTau = v;
    } else if (key == "palm.beta") {
      if (v <= 0 || v > 1) fail(ErrorKind::ConfigParseError, "palm.beta must be in (0, 1]" + where);
      base.palm.beta = v;
    } else if (key == "palm.side_ratio") {
      if (v <= 0 || v > 1) {
        fail(ErrorKind::ConfigParseError, "palm.side_ratio must be in (0, 1]" + where);
      }
      base.palm.sideRatio = v;
    } else if (key == "palm.min_edge_pixels") {
      if (v < 1) fail(ErrorKind::ConfigParseError, "palm.min_edge_pixels must be >= 1" + where);
      base.palm.minEdgePixels = static_cast<int>(v);
    } else if (key == "palm.min_width_px") {
      if (v < 1) fail(ErrorKind::ConfigParseError, "palm.min_width_px must be >= 1" + where);
      base.palm.minWidthPx = static_cast<int>(v);
    } else if (key == "thumb.gamma") {
      if (v < 0) fail(ErrorKind::ConfigParseError, "thumb.gamma must be >= 0" + where);
      base.thumbGamma = v;
    } else if (key == "skeleton.lambda") {
      if (v < 0) fail(ErrorKind::ConfigParseError, "skeleton.lambda must be >= 0" + where);
      base.skeletonLambda = v;
    } else {
      fail(ErrorKind::ConfigParseError, "unknown key `" + key + "`" + where);
    }
  }
  return base;
}

PipelineParams loadConfigFile(const std::filesystem::path& path, PipelineParams base) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::IoError, "cannot open config " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parseConfig(text.str(), base);
}

}  // namespace handsign
