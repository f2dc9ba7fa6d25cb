#include "handsign/shape.hpp"

#include <cmath>
#include <stdexcept>

namespace handsign {

namespace {

void requireInside(const EdgeMap& map, const PalmRect& palm) {
  if (palm.left < 0 || palm.right >= map.cols() || palm.top < 0 ||
      palm.bottom >= map.rows() || palm.left >= palm.right || palm.top >= palm.bottom) {
    throw std::invalid_argument("palm rectangle outside the edge map");
  }
}

}  // namespace

Histogram edgeHistogram(const EdgeMap& map, const Rect& region, Axis axis) {
  if (!region.valid() || region.left < 0 || region.top < 0 ||
      region.right >= map.cols() || region.bottom >= map.rows()) {
    fail(ErrorKind::EmptyRegion, "histogram region is empty or out of bounds");
  }
  const auto block = map.block(region.top, region.left, region.height(), region.width());
  Histogram h;
  h.axis = axis;
  if (axis == Axis::Columns) {
    h.origin = region.left;
    h.counts = block.cast<int>().colwise().sum().transpose();
  } else {
    h.origin = region.top;
    h.counts = block.cast<int>().rowwise().sum();
  }
  return h;
}

PalmRect detectPalm(const EdgeMap& map, const PalmParams& params) {
  if (map.count() < params.minEdgePixels) {
    fail(ErrorKind::NoHand, "too few edge pixels for a hand");
  }

  const int rows = static_cast<int>(map.rows());
  const int cols = static_cast<int>(map.cols());

  int rowMin = -1, rowMax = -1;
  for (int r = 0; r < rows; ++r) {
    if (map.row(r).any()) {
      if (rowMin < 0) rowMin = r;
      rowMax = r;
    }
  }
  const int bottom = rowMax;

  // Sides from the lower half of the occupied rows. The palm sides run the
  // whole region top to bottom; a thumb bar or stray speckle occupies only a
  // few rows per column and stays under the threshold.
  const int lowerTop = rowMin + (rowMax - rowMin + 1) / 2;
  const int regionHeight = rowMax - lowerTop + 1;
  const Histogram columns =
      edgeHistogram(map, Rect{0, cols - 1, lowerTop, rowMax}, Axis::Columns);
  const double needCount = params.sideRatio * regionHeight;

  int left = -1, right = -1;
  for (int c = 0; c < cols; ++c) {
    if (columns.counts[c] >= needCount) {
      if (left < 0) left = c;
      right = c;
    }
  }
  if (left < 0 || left >= right) {
    fail(ErrorKind::DegeneratePalm, "no palm sides in the lower-half histogram");
  }

  // Top: highest row whose occupied span reaches beta x palm width. Palm rows
  // stretch side to side; finger rows cover a narrower band.
  const double needSpan = params.beta * (right - left);
  int top = -1;
  for (int r = rowMin; r <= rowMax; ++r) {
    int first = -1, last = -1;
    for (int c = left; c <= right; ++c) {
      if (map(r, c)) {
        if (first < 0) first = c;
        last = c;
      }
    }
    if (first >= 0 && last - first + 1 >= needSpan) {
      top = r;
      break;
    }
  }
  if (top < 0 || top >= bottom) {
    fail(ErrorKind::DegeneratePalm, "no row spans the palm width");
  }

  const PalmRect palm{left, right, top, bottom};
  if (palm.width() < params.minWidthPx) {
    fail(ErrorKind::DegeneratePalm, "palm narrower than the minimum width");
  }
  return palm;
}

Eigen::ArrayXi skylineAbove(const EdgeMap& map, const PalmRect& palm) {
  requireInside(map, palm);
  Eigen::ArrayXi sky = Eigen::ArrayXi::Constant(palm.right - palm.left + 1, -1);
  for (int c = palm.left; c <= palm.right; ++c) {
    for (int r = 0; r < palm.top; ++r) {
      if (map(r, c)) {
        sky[c - palm.left] = r;
        break;
      }
    }
  }
  return sky;
}

std::vector<StepToken> tokenizeSkyline(const EdgeMap& map, const PalmRect& palm) {
  const Eigen::ArrayXi sky = skylineAbove(map, palm);
  std::vector<StepToken> tokens;
  for (int i = 1; i < sky.size(); ++i) {
    const int col = palm.left + i;
    const int prev = sky[i - 1];
    const int cur = sky[i];
    if (prev < 0 && cur < 0) continue;
    if (prev < 0) {
      tokens.push_back({StepClass::SteepRise, col});
    } else if (cur < 0) {
      tokens.push_back({StepClass::SteepFall, col});
    } else {
      const int delta = cur - prev;
      StepClass step = delta <= -2   ? StepClass::SteepRise
                       : delta == -1 ? StepClass::GentleRise
                       : delta == 0  ? StepClass::Flat
                       : delta == 1  ? StepClass::GentleFall
                                     : StepClass::SteepFall;
      tokens.push_back({step, col});
    }
  }
  return tokens;
}

void TipAutomaton::reset() {
  state_ = State::Idle;
  apexStart_ = apexEnd_ = apexRow_ = 0;
}

std::optional<Fingertip> TipAutomaton::step(const StepToken& token, int row) {
  switch (token.step) {
    case StepClass::SteepRise:
      state_ = State::SteepRise;
      return std::nullopt;

    case StepClass::GentleRise:
      state_ = State::GentleRise;
      return std::nullopt;

    case StepClass::Flat:
      if (state_ == State::SteepRise || state_ == State::GentleRise) {
        state_ = State::Apex;
        apexStart_ = token.col - 1;
        apexEnd_ = token.col;
        apexRow_ = row;
      } else if (state_ == State::Apex) {
        apexEnd_ = token.col;
      } else {
        state_ = State::Idle;
      }
      return std::nullopt;

    case StepClass::GentleFall:
      state_ = (state_ == State::Apex || state_ == State::GentleFall)
                   ? State::GentleFall
                   : State::Idle;
      return std::nullopt;

    case StepClass::SteepFall:
      if (state_ == State::Apex || state_ == State::GentleFall) {
        const Fingertip tip{apexRow_, (apexStart_ + apexEnd_) / 2};
        reset();
        return tip;
      }
      state_ = State::Idle;
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Fingertip> detectFingertips(const EdgeMap& map, const PalmRect& palm) {
  const Eigen::ArrayXi sky = skylineAbove(map, palm);
  std::vector<Fingertip> tips;
  TipAutomaton automaton;
  for (const StepToken& token : tokenizeSkyline(map, palm)) {
    const int row = sky[token.col - palm.left];
    if (auto tip = automaton.step(token, row)) {
      tips.push_back(*tip);
    }
  }
  return tips;
}

bool detectThumb(const EdgeMap& map, const PalmRect& palm, double gamma) {
  requireInside(map, palm);
  const int first = palm.right + 1;
  const int cols = static_cast<int>(map.cols());
  if (first >= cols) return false;

  const auto band =
      map.block(palm.top, first, palm.bottom - palm.top + 1, cols - first);
  const int occupied = static_cast<int>(band.colwise().any().count());
  return occupied > gamma * palm.width();
}

}  // namespace handsign
