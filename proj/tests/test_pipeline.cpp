#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "handsign/config.hpp"
#include "handsign/pipeline.hpp"
#include "handsign/raster.hpp"
#include "handsign/synth.hpp"

using namespace handsign;

namespace {

Classification classifySpec(const HandSpec& spec) {
  const PipelineParams params;
  const Vocabulary vocab = Vocabulary::defaults();
  return analyzeFrame(toGrey(renderHand(spec)), params, vocab).result;
}

}  // namespace

TEST_CASE("golden fixtures classify to their digit") {
  for (int d = 0; d <= 9; ++d) {
    const Classification result = classifySpec(goldenSpec(d));
    CHECK(result.known);
    CHECK(result.digit == d);
  }
}

TEST_CASE("a blank frame is unknown with no model") {
  const GreyImage blank = GreyImage::Constant(240, 320, 224);
  const FrameAnalysis analysis =
      analyzeFrame(blank, PipelineParams{}, Vocabulary::defaults());
  CHECK(!analysis.result.known);
  CHECK(!analysis.result.model.has_value());
  CHECK(!analysis.palm.has_value());
}

TEST_CASE("translation does not change the classification") {
  for (int d : {0, 3, 5, 9}) {
    HandSpec spec = goldenSpec(d);
    spec.colOffset = 10;
    spec.rowOffset = 10;
    CHECK(classifySpec(spec).digit == d);
    spec.colOffset = -10;
    spec.rowOffset = -10;
    CHECK(classifySpec(spec).digit == d);
  }
}

TEST_CASE("two fingers near one joint are rejected") {
  HandSpec spec = goldenSpec(0);
  spec.extraFingers = {{0.55, FingerSpec{60, 6}}, {0.70, FingerSpec{60, 6}}};
  const Classification result = classifySpec(spec);
  CHECK(!result.known);
  CHECK(!result.signature.has_value());  // joint conflict, not a table miss
}

TEST_CASE("all-bent fingers are rejected rather than read as a fist") {
  HandSpec spec = goldenSpec(0);
  spec.fingers[1] = FingerSpec{20, 8};
  spec.fingers[2] = FingerSpec{20, 8};
  const PipelineParams params;
  const FrameAnalysis analysis =
      analyzeFrame(toGrey(renderHand(spec)), params, Vocabulary::defaults());
  CHECK(analysis.bentRejected == 2);
  CHECK(!analysis.result.known);
}

TEST_CASE("a thumb with a non-vocabulary finger set is unknown") {
  HandSpec spec = goldenSpec(1);  // joint 3 only
  spec.thumb = true;
  const Classification result = classifySpec(spec);
  CHECK(!result.known);
  REQUIRE(result.signature.has_value());
  CHECK(result.signature->thumb);
}

TEST_CASE("the edge threshold is configurable and changes the outcome") {
  // With tau above the attainable gradient the frame has no edges at all.
  const HandSpec spec = goldenSpec(4);
  PipelineParams params;
  params.edgeTau = 300.0;
  const FrameAnalysis analysis =
      analyzeFrame(toGrey(renderHand(spec)), params, Vocabulary::defaults());
  CHECK(analysis.edges.count() == 0);
  CHECK(!analysis.result.known);
}

TEST_CASE("config text overrides map onto the pipeline parameters") {
  const std::string text =
      "# pipeline tuning\n"
      "edge.tau = 55.5\n"
      "palm.beta = 0.8\n"
      "palm.side_ratio = 0.4\n"
      "palm.min_edge_pixels = 99\n"
      "palm.min_width_px = 20\n"
      "thumb.gamma = 0.25\n"
      "skeleton.lambda = 0.5\n";
  const PipelineParams params = parseConfig(text);
  CHECK(params.edgeTau == 55.5);
  CHECK(params.palm.beta == 0.8);
  CHECK(params.palm.sideRatio == 0.4);
  CHECK(params.palm.minEdgePixels == 99);
  CHECK(params.palm.minWidthPx == 20);
  CHECK(params.thumbGamma == 0.25);
  CHECK(params.skeletonLambda == 0.5);

  CHECK_THROWS_AS(parseConfig("edge.tau = -3\n"), Error);
  CHECK_THROWS_AS(parseConfig("edge.tau: 3\n"), Error);
  CHECK_THROWS_AS(parseConfig("palm.wobble = 1\n"), Error);
  CHECK_THROWS_AS(parseConfig("palm.beta = fast\n"), Error);
}
