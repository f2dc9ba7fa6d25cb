#include "handsign/synth.hpp"

#include <cmath>

#include "handsign/errors.hpp"
#include "handsign/skeleton.hpp"

namespace handsign {

namespace {

constexpr int kBorderClearance = 2;

struct Box {
  int top, bottom, left, right;  // inclusive
};

void fillBox(Grid<std::uint8_t>& plane, const Box& box, std::uint8_t value,
             int frameWidth, int frameHeight) {
  if (box.top < kBorderClearance || box.left < kBorderClearance ||
      box.bottom >= frameHeight - kBorderClearance ||
      box.right >= frameWidth - kBorderClearance || box.top > box.bottom ||
      box.left > box.right) {
    fail(ErrorKind::ShapeOutOfFrame, "silhouette leaves the frame");
  }
  plane.block(box.top, box.left, box.bottom - box.top + 1, box.right - box.left + 1)
      .setConstant(value);
}

int scaleDim(int value, double factor) {
  return std::max(1, static_cast<int>(std::lround(value * factor)));
}

}  // namespace

RgbImage renderHand(const HandSpec& spec, int frameWidth, int frameHeight) {
  if (spec.palmWidth < 4 || spec.palmHeight < 4) {
    fail(ErrorKind::ShapeOutOfFrame, "palm too small to render");
  }
  const int contrast = std::abs(static_cast<int>(spec.foreground) -
                                static_cast<int>(spec.background));
  if (contrast < 128) {
    fail(ErrorKind::ShapeOutOfFrame, "foreground/background contrast below 128");
  }

  Grid<std::uint8_t> plane(frameHeight, frameWidth);
  plane.setConstant(spec.background);

  // Palm centred horizontally, biased below the frame midline to leave room
  // for the fingers.
  const int palmLeft = (frameWidth - spec.palmWidth) / 2 + spec.colOffset;
  const int palmTop =
      (frameHeight - spec.palmHeight) / 2 + frameHeight * 3 / 20 + spec.rowOffset;
  const int palmRight = palmLeft + spec.palmWidth - 1;
  const int palmBottom = palmTop + spec.palmHeight - 1;

  fillBox(plane, {palmTop, palmBottom, palmLeft, palmRight}, spec.foreground,
          frameWidth, frameHeight);

  auto drawFinger = [&](double centerFrac, const FingerSpec& finger) {
    const int center =
        palmLeft + static_cast<int>(std::nearbyint(centerFrac * spec.palmWidth));
    const int c0 = center - finger.width / 2;
    const int c1 = c0 + finger.width - 1;
    const int top = palmTop - finger.length;
    const int bevel = spec.rounded ? std::min(spec.bevelDepth, (finger.width - 2) / 2) : 0;
    for (int r = top; r < palmTop; ++r) {
      const int inset = std::max(0, bevel - (r - top));
      fillBox(plane, {r, r, c0 + inset, c1 - inset}, spec.foreground, frameWidth,
              frameHeight);
    }
  };

  for (int k = 0; k < 4; ++k) {
    if (spec.fingers[k]) {
      drawFinger((2 * k + 1) / 8.0, *spec.fingers[k]);
    }
  }
  for (const ExtraFinger& extra : spec.extraFingers) {
    drawFinger(extra.colFrac, extra.finger);
  }

  if (spec.thumb) {
    const int mid = palmTop + spec.palmHeight / 2;
    const int t0 = mid - spec.thumbWidth / 2;
    fillBox(plane,
            {t0, t0 + spec.thumbWidth - 1, palmRight + 1, palmRight + spec.thumbLength},
            spec.foreground, frameWidth, frameHeight);
  }

  RgbImage img;
  img.r = plane;
  img.g = plane;
  img.b = plane;
  return img;
}

HandSpec goldenSpec(int digit) {
  const auto sig = Vocabulary::defaults().signatureOf(digit);
  if (!sig) {
    fail(ErrorKind::ShapeOutOfFrame, "no default sign for digit " + std::to_string(digit));
  }
  HandSpec spec;
  for (int k = 0; k < 4; ++k) {
    if (sig->hasJoint(k)) {
      spec.fingers[k] = FingerSpec{};
    }
  }
  spec.thumb = sig->thumb;
  return spec;
}

HandSpec scaled(const HandSpec& spec, double factor) {
  HandSpec out = spec;
  out.palmWidth = scaleDim(spec.palmWidth, factor);
  out.palmHeight = scaleDim(spec.palmHeight, factor);
  for (auto& finger : out.fingers) {
    if (finger) {
      finger->length = scaleDim(finger->length, factor);
      finger->width = scaleDim(finger->width, factor);
    }
  }
  for (auto& extra : out.extraFingers) {
    extra.finger.length = scaleDim(extra.finger.length, factor);
    extra.finger.width = scaleDim(extra.finger.width, factor);
  }
  out.thumbLength = scaleDim(spec.thumbLength, factor);
  out.thumbWidth = scaleDim(spec.thumbWidth, factor);
  return out;
}

}  // namespace handsign
