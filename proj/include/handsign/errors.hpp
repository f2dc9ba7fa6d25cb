#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace handsign {

enum class ErrorKind {
  MalformedHeader,
  UnsupportedBitDepth,
  TruncatedPixelData,
  ImageTooSmall,
  EmptyRegion,
  NoHand,
  DegeneratePalm,
  ShapeOutOfFrame,
  ManifestParseError,
  ConfigParseError,
  VocabularyError,
  IoError,
};

/// Runtime error carrying a machine-checkable failure kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace handsign
