#pragma once

#include <optional>
#include <vector>

#include "handsign/skeleton.hpp"

namespace handsign {

/// A digit (or unknown) held stable for a whole run of frames.
struct RecognitionEvent {
  bool known = false;
  int digit = -1;
  Signature signature;  // meaningful when known
  int firstFrame = 0;
  int lastFrame = 0;

  int frames() const { return lastFrame - firstFrame + 1; }

  bool operator==(const RecognitionEvent&) const = default;
};

// Online debouncer: an event covers one maximal run of frames with equal
// outcome and is emitted once the run ends (next differing frame, or
// finish()), provided the run reached the window length. Frames compare
// equal when both are unknown or both carry the same signature.
class Debouncer {
 public:
  explicit Debouncer(int window = 5);

  /// Feeds the next frame; frame indices count up from 0. Returns the event
  /// for the preceding run when this frame closes one.
  std::optional<RecognitionEvent> push(const Classification& frame);

  /// Flushes the pending run at end of stream.
  std::optional<RecognitionEvent> finish();

  int window() const { return window_; }

 private:
  std::optional<RecognitionEvent> harvest() const;

  int window_;
  int nextFrame_ = 0;
  bool haveRun_ = false;
  bool runKnown_ = false;
  Signature runSignature_;
  int runDigit_ = -1;
  int runStart_ = 0;
  int runLength_ = 0;
};

/// Batch form: feeds the whole sequence and flushes.
std::vector<RecognitionEvent> debounce(const std::vector<Classification>& frames,
                                       int window = 5);

}  // namespace handsign
