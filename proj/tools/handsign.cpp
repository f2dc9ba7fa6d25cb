#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "handsign/eval.hpp"
#include "handsign/pipeline.hpp"
#include "handsign/raster.hpp"
#include "handsign/stream.hpp"
#include "handsign/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace handsign;

namespace {

struct GlobalOptions {
  std::string configPath;
  std::string vocabPath;
  double tau = -1.0;  // <0 = not set
  int window = 5;
  bool emitUnknown = false;
  bool timestamps = false;
  std::string format = "table";
};

PipelineParams resolveParams(const GlobalOptions& opts) {
  PipelineParams params;
  if (!opts.configPath.empty()) {
    params = loadConfigFile(opts.configPath, params);
  }
  if (opts.tau >= 0.0) {
    params.edgeTau = opts.tau;
  }
  return params;
}

Vocabulary resolveVocabulary(const GlobalOptions& opts) {
  if (!opts.vocabPath.empty()) {
    return Vocabulary::loadFile(opts.vocabPath);
  }
  return Vocabulary::defaults();
}

void stamp(ordered_json& record, const GlobalOptions& opts) {
  if (opts.timestamps) {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    record["ts_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
  }
}

ordered_json signatureJson(const Signature& sig) {
  std::vector<int> joints;
  for (int k = 0; k < 4; ++k) {
    if (sig.hasJoint(k)) joints.push_back(k);
  }
  return ordered_json{{"joints", joints}, {"thumb", sig.thumb}};
}

ordered_json classifyRecord(const FrameAnalysis& analysis) {
  const Classification& result = analysis.result;
  ordered_json record;
  record["outcome"] = result.known ? "digit" : "unknown";
  if (result.known) {
    record["digit"] = result.digit;
  }
  if (result.signature) {
    record["signature"] = signatureJson(*result.signature);
  }
  record["thumb"] = analysis.thumb;
  if (analysis.palm) {
    record["palm"] = ordered_json{{"left", analysis.palm->left},
                                  {"right", analysis.palm->right},
                                  {"top", analysis.palm->top},
                                  {"bottom", analysis.palm->bottom}};
  }
  ordered_json tips = ordered_json::array();
  for (const Fingertip& tip : analysis.tips) {
    tips.push_back(ordered_json{{"row", tip.row}, {"col", tip.col}});
  }
  record["tips"] = tips;
  if (analysis.bentRejected > 0) {
    record["bent_rejected"] = analysis.bentRejected;
  }
  return record;
}

ordered_json eventRecord(const RecognitionEvent& event) {
  ordered_json record;
  record["outcome"] = event.known ? "digit" : "unknown";
  if (event.known) {
    record["digit"] = event.digit;
    record["signature"] = signatureJson(event.signature);
  }
  record["first_frame"] = event.firstFrame;
  record["last_frame"] = event.lastFrame;
  record["frames"] = event.frames();
  return record;
}

int cmdClassify(const GlobalOptions& opts, const std::string& imagePath) {
  const PipelineParams params = resolveParams(opts);
  const Vocabulary vocab = resolveVocabulary(opts);
  const FrameAnalysis analysis = analyzeFrame(loadFrameFile(imagePath), params, vocab);
  ordered_json record = classifyRecord(analysis);
  stamp(record, opts);
  std::cout << record.dump() << "\n";
  return analysis.result.known ? 0 : 1;
}

std::vector<std::string> collectFrames(const std::string& source) {
  std::vector<std::string> paths;
  if (source == "-") {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty()) paths.push_back(line);
    }
    return paths;
  }
  if (!fs::is_directory(source)) {
    fail(ErrorKind::IoError, source + " is not a directory (use `-` for stdin)");
  }
  for (const auto& entry : fs::directory_iterator(source)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".bmp" || ext == ".pgm" || ext == ".ppm") {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

int cmdWatch(const GlobalOptions& opts, const std::string& source) {
  const PipelineParams params = resolveParams(opts);
  const Vocabulary vocab = resolveVocabulary(opts);
  const std::vector<std::string> paths = collectFrames(source);
  if (paths.empty()) {
    fail(ErrorKind::IoError, "no frames to watch");
  }

  Debouncer debouncer(opts.window);
  auto emit = [&](const std::optional<RecognitionEvent>& event) {
    if (!event) return;
    if (!event->known && !opts.emitUnknown) return;
    ordered_json record = eventRecord(*event);
    stamp(record, opts);
    std::cout << record.dump() << "\n" << std::flush;
  };

  for (const std::string& path : paths) {
    Classification frame;  // unreadable frames count as unknown
    try {
      frame = analyzeFrame(loadFrameFile(path), params, vocab).result;
    } catch (const Error&) {
      frame = Classification::unknown();
    }
    emit(debouncer.push(frame));
  }
  emit(debouncer.finish());
  return 0;
}

// Overlay palette, one colour per layer.
constexpr std::uint8_t kEdge[3] = {255, 255, 255};
constexpr std::uint8_t kPalm[3] = {64, 128, 255};
constexpr std::uint8_t kJoint[3] = {255, 220, 0};
constexpr std::uint8_t kSegment[3] = {0, 200, 0};
constexpr std::uint8_t kThumb[3] = {230, 40, 40};

void plot(RgbImage& img, int row, int col, const std::uint8_t color[3]) {
  if (row < 0 || col < 0 || row >= img.height() || col >= img.width()) return;
  img.r(row, col) = color[0];
  img.g(row, col) = color[1];
  img.b(row, col) = color[2];
}

void plotLine(RgbImage& img, int r0, int c0, int r1, int c1, const std::uint8_t color[3]) {
  const int dr = std::abs(r1 - r0), dc = std::abs(c1 - c0);
  const int sr = r0 < r1 ? 1 : -1, sc = c0 < c1 ? 1 : -1;
  int err = (dc > dr ? dc : -dr) / 2;
  while (true) {
    plot(img, r0, c0, color);
    if (r0 == r1 && c0 == c1) break;
    const int e = err;
    if (e > -dc) {
      err -= dr;
      c0 += sc;
    }
    if (e < dr) {
      err += dc;
      r0 += sr;
    }
  }
}

RgbImage renderOverlay(const FrameAnalysis& analysis) {
  const auto height = analysis.edges.rows();
  const auto width = analysis.edges.cols();
  RgbImage img = RgbImage::constant(height, width, 0, 0, 0);

  for (Eigen::Index r = 0; r < height; ++r) {
    for (Eigen::Index c = 0; c < width; ++c) {
      if (analysis.edges(r, c)) {
        plot(img, static_cast<int>(r), static_cast<int>(c), kEdge);
      }
    }
  }
  if (!analysis.palm) {
    return img;
  }

  const PalmRect& palm = *analysis.palm;
  plotLine(img, palm.top, palm.left, palm.top, palm.right, kPalm);
  plotLine(img, palm.bottom, palm.left, palm.bottom, palm.right, kPalm);
  plotLine(img, palm.top, palm.left, palm.bottom, palm.left, kPalm);
  plotLine(img, palm.top, palm.right, palm.bottom, palm.right, kPalm);

  if (analysis.result.model) {
    const SkeletalModel& model = *analysis.result.model;
    for (const FingerSegment& finger : model.fingers) {
      const Joint& joint = model.joints[finger.joint];
      plotLine(img, finger.tip.row, finger.tip.col, joint.row, joint.col, kSegment);
    }
    for (const Joint& joint : model.joints) {
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          plot(img, joint.row + dr, joint.col + dc, kJoint);
        }
      }
    }
    if (model.thumb) {
      const int midRow = (palm.top + palm.bottom) / 2;
      const int col = palm.right + 4;
      for (int dr = -2; dr <= 2; ++dr) {
        for (int dc = -2; dc <= 2; ++dc) {
          plot(img, midRow + dr, col + dc, kThumb);
        }
      }
    }
  }
  return img;
}

int cmdRender(const GlobalOptions& opts, const std::string& imagePath,
              const std::string& outPath, const std::string& edgeMapPath) {
  const PipelineParams params = resolveParams(opts);
  const Vocabulary vocab = resolveVocabulary(opts);
  const FrameAnalysis analysis = analyzeFrame(loadFrameFile(imagePath), params, vocab);

  if (!edgeMapPath.empty()) {
    const GreyImage dump = analysis.edges.cast<std::uint8_t>() * 255;
    writeFile(edgeMapPath, encodePgm(dump));
  }
  writeFile(outPath, encodePpm(renderOverlay(analysis)));
  return 0;
}

int cmdEval(const GlobalOptions& opts, const std::string& manifestPath) {
  const PipelineParams params = resolveParams(opts);
  const Vocabulary vocab = resolveVocabulary(opts);
  const auto entries = loadManifest(manifestPath);
  const EvalReport report =
      runEval(entries, fs::path(manifestPath).parent_path(), params, vocab);
  if (opts.format == "records") {
    std::cout << formatRecords(report);
  } else {
    std::cout << formatTable(report);
  }
  return 0;
}

struct SynthOptions {
  int digit = 0;
  std::string outPath;
  std::string goldenDir;
  bool rounded = false;
  double scale = 1.0;
  int dx = 0;
  int dy = 0;
  int frameWidth = 320;
  int frameHeight = 240;
  int fg = 32;
  int bg = 224;
};

void writeFixture(const HandSpec& spec, const SynthOptions& so, const fs::path& path) {
  const RgbImage img = renderHand(spec, so.frameWidth, so.frameHeight);
  if (path.extension() == ".ppm") {
    writeFile(path, encodePpm(img));
  } else {
    writeFile(path, encodeBmp(img));
  }
}

int cmdSynth(const SynthOptions& so) {
  auto build = [&](int digit) {
    HandSpec spec = scaled(goldenSpec(digit), so.scale);
    spec.rowOffset = so.dy;
    spec.colOffset = so.dx;
    spec.rounded = so.rounded;
    spec.foreground = static_cast<std::uint8_t>(so.fg);
    spec.background = static_cast<std::uint8_t>(so.bg);
    return spec;
  };

  if (!so.goldenDir.empty()) {
    fs::create_directories(so.goldenDir);
    for (int d = 0; d <= 9; ++d) {
      writeFixture(build(d), so, fs::path(so.goldenDir) / ("digit_" + std::to_string(d) + ".bmp"));
    }
    return 0;
  }
  if (so.outPath.empty()) {
    fail(ErrorKind::IoError, "synth needs --out or --golden");
  }
  writeFixture(build(so.digit), so, so.outPath);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numeric hand-sign recognition from single frames"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--config", opts.configPath, "key=value configuration file");
  app.add_option("--tau", opts.tau, "edge threshold override");
  app.add_option("--window", opts.window, "debounce window (frames)")->check(CLI::PositiveNumber);
  app.add_option("--vocab", opts.vocabPath, "vocabulary file");
  app.add_flag("--emit-unknown", opts.emitUnknown, "also report unknown events in watch");
  app.add_flag("--timestamps", opts.timestamps, "add timestamps to records");
  app.add_option("--format", opts.format, "eval output format")
      ->check(CLI::IsMember({"table", "records"}));

  std::string imagePath, source, outPath, edgeMapPath, manifestPath;
  SynthOptions so;

  auto* classifySub = app.add_subcommand("classify", "classify one frame");
  classifySub->add_option("image", imagePath, "frame to classify")->required();

  auto* watchSub = app.add_subcommand("watch", "debounce a frame sequence");
  watchSub->add_option("source", source, "frame directory, or - for a path list on stdin")
      ->required();

  auto* renderSub = app.add_subcommand("render", "write a debug overlay");
  renderSub->add_option("image", imagePath, "frame to analyze")->required();
  renderSub->add_option("--out", outPath, "overlay output (PPM)")->required();
  renderSub->add_option("--edge-map", edgeMapPath, "also dump the edge map (PGM)");

  auto* evalSub = app.add_subcommand("eval", "score a labelled manifest");
  evalSub->add_option("manifest", manifestPath, "CSV manifest: path,label[,set]")->required();

  auto* synthSub = app.add_subcommand("synth", "write synthetic sign fixtures");
  synthSub->add_option("--digit", so.digit, "digit 0..9")->check(CLI::Range(0, 9));
  synthSub->add_option("--out", so.outPath, "output file (.bmp or .ppm)");
  synthSub->add_option("--golden", so.goldenDir, "write all ten digits into a directory");
  synthSub->add_flag("--rounded", so.rounded, "bevel the finger tops");
  synthSub->add_option("--scale", so.scale, "geometry scale factor");
  synthSub->add_option("--dx", so.dx, "horizontal translation (px)");
  synthSub->add_option("--dy", so.dy, "vertical translation (px)");
  synthSub->add_option("--frame-width", so.frameWidth, "frame width");
  synthSub->add_option("--frame-height", so.frameHeight, "frame height");
  synthSub->add_option("--fg", so.fg, "hand grey level")->check(CLI::Range(0, 255));
  synthSub->add_option("--bg", so.bg, "background grey level")->check(CLI::Range(0, 255));

  CLI11_PARSE(app, argc, argv);

  try {
    if (classifySub->parsed()) return cmdClassify(opts, imagePath);
    if (watchSub->parsed()) return cmdWatch(opts, source);
    if (renderSub->parsed()) return cmdRender(opts, imagePath, outPath, edgeMapPath);
    if (evalSub->parsed()) return cmdEval(opts, manifestPath);
    if (synthSub->parsed()) return cmdSynth(so);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
