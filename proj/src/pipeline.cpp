#include "handsign/pipeline.hpp"

#include "handsign/edge.hpp"

namespace handsign {

FrameAnalysis analyzeFrame(const GreyImage& grey, const PipelineParams& params,
                           const Vocabulary& vocab) {
  FrameAnalysis analysis;
  analysis.edges = thresholdEdges(sobelGradient(grey), params.edgeTau);

  try {
    analysis.palm = detectPalm(analysis.edges, params.palm);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoHand || e.kind() == ErrorKind::DegeneratePalm) {
      analysis.result = Classification::unknown();
      return analysis;
    }
    throw;
  }

  analysis.tips = detectFingertips(analysis.edges, *analysis.palm);
  analysis.thumb = detectThumb(analysis.edges, *analysis.palm, params.thumbGamma);

  const SkeletalModel model =
      buildSkeleton(*analysis.palm, analysis.tips, analysis.thumb, params.skeletonLambda);
  analysis.bentRejected =
      static_cast<int>(analysis.tips.size()) - static_cast<int>(model.fingers.size());

  analysis.result = classify(model, vocab);
  if (analysis.bentRejected > 0) {
    // Half-raised fingers are no clean sign; keep the model for overlays but
    // report the frame as unknown.
    analysis.result.known = false;
    analysis.result.digit = -1;
  }
  return analysis;
}

}  // namespace handsign
