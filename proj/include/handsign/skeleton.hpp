#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "handsign/shape.hpp"

namespace handsign {

struct Joint {
  int row = 0;
  int col = 0;

  bool operator==(const Joint&) const = default;
};

/// Four joint positions on the palm top boundary, evenly spread at odd
/// eighths of the palm width, index 0 leftmost.
std::array<Joint, 4> placeJoints(const PalmRect& palm);

struct FingerSegment {
  int joint = 0;  // joint index 0..3
  Fingertip tip;
  double length = 0.0;  // tip-to-joint distance in pixels
};

struct SkeletalModel {
  std::array<Joint, 4> joints{};
  std::vector<FingerSegment> fingers;  // only fingers that passed the length gate
  bool thumb = false;
  PalmRect palm;
};

/// Connects each tip to its nearest joint (ties to the lower index) and drops
/// segments shorter than lambda x palm height as bent fingers.
SkeletalModel buildSkeleton(const PalmRect& palm, const std::vector<Fingertip>& tips,
                            bool thumb, double lambda = 0.35);

/// Classification key: which joints hold a finger, plus the thumb flag.
struct Signature {
  std::uint8_t jointMask = 0;  // bit k set = joint k holds a finger
  bool thumb = false;

  static Signature of(std::initializer_list<int> joints, bool thumb = false) {
    Signature s;
    for (int j : joints) s.jointMask = static_cast<std::uint8_t>(s.jointMask | (1u << j));
    s.thumb = thumb;
    return s;
  }

  int index() const { return jointMask | (thumb ? 16 : 0); }
  bool hasJoint(int k) const { return (jointMask >> k) & 1; }

  bool operator==(const Signature&) const = default;
};

/// Signature -> digit table. Only two digits may carry the thumb flag.
class Vocabulary {
 public:
  /// Built-in table; 0 is the empty hand, 5 all four fingers plus thumb.
  static Vocabulary defaults();

  /// Parses `digit = joints:<comma-list or empty> thumb:<true|false>` lines.
  /// Blank lines and #-comments are skipped. Throws VocabularyError naming
  /// the offending line.
  static Vocabulary parse(const std::string& text);
  static Vocabulary loadFile(const std::filesystem::path& path);

  std::optional<int> lookup(const Signature& sig) const;
  std::optional<Signature> signatureOf(int digit) const;
  int size() const;

 private:
  // Dense table over the 32 possible signatures, -1 = not in the vocabulary.
  std::array<std::int8_t, 32> digitOf_;

  Vocabulary() { digitOf_.fill(-1); }
  void insert(const Signature& sig, int digit, int line);
};

struct Classification {
  bool known = false;
  int digit = -1;  // valid when known
  std::optional<Signature> signature;  // absent when fingers share a joint
  std::optional<SkeletalModel> model;  // absent when palm detection failed

  static Classification unknown() { return {}; }
};

/// Signature lookup. Two fingers on one joint make the frame unclassifiable.
Classification classify(const SkeletalModel& model, const Vocabulary& vocab);

}  // namespace handsign
