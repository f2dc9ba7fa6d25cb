#pragma once

#include <optional>
#include <vector>

#include "handsign/config.hpp"
#include "handsign/image.hpp"
#include "handsign/skeleton.hpp"

namespace handsign {

/// Everything one frame produced on its way to a classification; kept around
/// for records and debug overlays.
struct FrameAnalysis {
  EdgeMap edges;
  std::optional<PalmRect> palm;  // absent when no palm was found
  std::vector<Fingertip> tips;
  bool thumb = false;
  int bentRejected = 0;  // tips dropped by the bent-finger length gate
  Classification result;
};

// Full single-frame pipeline: gradient, edge threshold, palm, tips, thumb,
// skeleton, vocabulary lookup. A missing or degenerate palm yields an unknown
// classification without a model; a frame where any tip was rejected as bent
// is unknown as well (a clean sign has no half-raised fingers).
FrameAnalysis analyzeFrame(const GreyImage& grey, const PipelineParams& params,
                           const Vocabulary& vocab);

}  // namespace handsign
