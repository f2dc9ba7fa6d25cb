#pragma once

#include <filesystem>
#include <string>

#include "handsign/shape.hpp"

namespace handsign {

struct PipelineParams {
  double edgeTau = 40.0;
  PalmParams palm{};
  double thumbGamma = 0.15;
  double skeletonLambda = 0.35;
};

// key = value configuration, one pair per line, # comments.
// Keys: edge.tau, palm.beta, palm.side_ratio, palm.min_edge_pixels,
// palm.min_width_px, thumb.gamma, skeleton.lambda.
PipelineParams parseConfig(const std::string& text, PipelineParams base = {});
PipelineParams loadConfigFile(const std::filesystem::path& path, PipelineParams base = {});

}  // namespace handsign
