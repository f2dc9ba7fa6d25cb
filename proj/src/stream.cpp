#include "handsign/stream.hpp"

#include <stdexcept>

namespace handsign {

Debouncer::Debouncer(int window) : window_(window) {
  if (window < 1) {
    throw std::invalid_argument("debounce window must be at least 1");
  }
}

std::optional<RecognitionEvent> Debouncer::harvest() const {
  if (!haveRun_ || runLength_ < window_) return std::nullopt;
  RecognitionEvent event;
  event.known = runKnown_;
  event.digit = runDigit_;
  event.signature = runSignature_;
  event.firstFrame = runStart_;
  event.lastFrame = runStart_ + runLength_ - 1;
  return event;
}

std::optional<RecognitionEvent> Debouncer::push(const Classification& frame) {
  const bool known = frame.known;
  const Signature sig = frame.signature.value_or(Signature{});

  const bool sameRun =
      haveRun_ && known == runKnown_ && (!known || sig == runSignature_);
  if (sameRun) {
    ++runLength_;
    ++nextFrame_;
    return std::nullopt;
  }

  auto closed = harvest();
  haveRun_ = true;
  runKnown_ = known;
  runSignature_ = sig;
  runDigit_ = frame.digit;
  runStart_ = nextFrame_;
  runLength_ = 1;
  ++nextFrame_;
  return closed;
}

std::optional<RecognitionEvent> Debouncer::finish() {
  auto closed = harvest();
  haveRun_ = false;
  runLength_ = 0;
  return closed;
}

std::vector<RecognitionEvent> debounce(const std::vector<Classification>& frames,
                                       int window) {
  Debouncer debouncer(window);
  std::vector<RecognitionEvent> events;
  for (const Classification& frame : frames) {
    if (auto event = debouncer.push(frame)) {
      events.push_back(*event);
    }
  }
  if (auto event = debouncer.finish()) {
    events.push_back(*event);
  }
  return events;
}

}  // namespace handsign
