#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "handsign/image.hpp"

namespace handsign {

struct FingerSpec {
  int length = 60;
  int width = 8;
};

/// Extra upright finger at an arbitrary horizontal position, as a fraction of
/// the palm width. Used for shapes outside the vocabulary.
struct ExtraFinger {
  double colFrac = 0.5;
  FingerSpec finger;
};

// Deterministic silhouette: a filled palm rectangle, upright fingers centred
// at the odd eighths of the palm width, and an optional thumb bar protruding
// from the right palm edge at mid-height. Dark hand on a light background.
struct HandSpec {
  int palmWidth = 80;
  int palmHeight = 100;
  std::array<std::optional<FingerSpec>, 4> fingers{};  // keyed by joint 0..3
  std::vector<ExtraFinger> extraFingers;
  bool thumb = false;
  int thumbLength = 24;
  int thumbWidth = 14;
  int rowOffset = 0;  // translation, positive moves down
  int colOffset = 0;  // translation, positive moves right
  std::uint8_t foreground = 32;
  std::uint8_t background = 224;
  bool rounded = false;   // 45-degree bevels on the finger top corners
  int bevelDepth = 2;
};

/// Renders the silhouette into a frame. Every foreground pixel must keep a
/// 2-pixel clearance from the frame border, else ShapeOutOfFrame.
RgbImage renderHand(const HandSpec& spec, int frameWidth = 320, int frameHeight = 240);

/// The default-vocabulary sign for a digit 0..9.
HandSpec goldenSpec(int digit);

/// Scales every dimension of the spec (offsets excluded) by the factor.
HandSpec scaled(const HandSpec& spec, double factor);

}  // namespace handsign
