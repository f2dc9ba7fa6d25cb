#include "handsign/skeleton.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace handsign {

std::array<Joint, 4> placeJoints(const PalmRect& palm) {
  std::array<Joint, 4> joints{};
  for (int k = 0; k < 4; ++k) {
    // Ties round to even so the four abscissae stay mirror-symmetric about
    // the palm midline for every width.
    const double offset = (2 * k + 1) / 8.0 * palm.width();
    joints[k] = {palm.top, palm.left + static_cast<int>(std::nearbyint(offset))};
  }
  return joints;
}

SkeletalModel buildSkeleton(const PalmRect& palm, const std::vector<Fingertip>& tips,
                            bool thumb, double lambda) {
  SkeletalModel model;
  model.joints = placeJoints(palm);
  model.thumb = thumb;
  model.palm = palm;

  const double minLength = lambda * palm.height();
  for (const Fingertip& tip : tips) {
    if (tip.row >= palm.top) {
      throw std::invalid_argument("fingertip not above the palm top");
    }
    int best = 0;
    double bestDist = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4; ++k) {
      const double d = std::hypot(static_cast<double>(tip.row - model.joints[k].row),
                                  static_cast<double>(tip.col - model.joints[k].col));
      if (d < bestDist) {  // strict, so ties keep the lower index
        bestDist = d;
        best = k;
      }
    }
    if (bestDist >= minLength) {
      model.fingers.push_back({best, tip, bestDist});
    }
  }
  return model;
}

Classification classify(const SkeletalModel& model, const Vocabulary& vocab) {
  Classification out;
  out.model = model;

  std::uint8_t mask = 0;
  for (const FingerSegment& finger : model.fingers) {
    const auto bit = static_cast<std::uint8_t>(1u << finger.joint);
    if (mask & bit) {
      return out;  // two fingers on one joint: no signature, unknown
    }
    mask = static_cast<std::uint8_t>(mask | bit);
  }

  const Signature sig{mask, model.thumb};
  out.signature = sig;
  if (const auto digit = vocab.lookup(sig)) {
    out.known = true;
    out.digit = *digit;
  }
  return out;
}

Vocabulary Vocabulary::defaults() {
  Vocabulary v;
  v.insert(Signature::of({}), 0, 0);
  v.insert(Signature::of({3}), 1, 0);
  v.insert(Signature::of({2, 3}), 2, 0);
  v.insert(Signature::of({2, 3}, true), 3, 0);
  v.insert(Signature::of({0, 1, 2, 3}), 4, 0);
  v.insert(Signature::of({0, 1, 2, 3}, true), 5, 0);
  v.insert(Signature::of({1, 2, 3}), 6, 0);
  v.insert(Signature::of({0, 1, 2}), 7, 0);
  v.insert(Signature::of({0}), 8, 0);
  v.insert(Signature::of({0, 3}), 9, 0);
  return v;
}

void Vocabulary::insert(const Signature& sig, int digit, int line) {
  const std::string where = line > 0 ? " (line " + std::to_string(line) + ")" : "";
  if (digit < 0 || digit > 9) {
    fail(ErrorKind::VocabularyError, "digit out of range" + where);
  }
  if (sig.thumb && digit != 3 && digit != 5) {
    fail(ErrorKind::VocabularyError,
         "only digits 3 and 5 may carry the thumb flag" + where);
  }
  if (digitOf_[sig.index()] >= 0) {
    fail(ErrorKind::VocabularyError, "duplicate signature" + where);
  }
  for (const std::int8_t d : digitOf_) {
    if (d == digit) {
      fail(ErrorKind::VocabularyError,
           "digit " + std::to_string(digit) + " assigned twice" + where);
    }
  }
  digitOf_[sig.index()] = static_cast<std::int8_t>(digit);
}

Vocabulary Vocabulary::parse(const std::string& text) {
  Vocabulary v;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string digitToken, eq, jointsField, thumbField;
    if (!(fields >> digitToken)) continue;  // blank line
    const std::string where = " (line " + std::to_string(lineNo) + ")";
    if (digitToken.size() != 1 || digitToken[0] < '0' || digitToken[0] > '9') {
      fail(ErrorKind::VocabularyError, "expected a digit 0..9" + where);
    }
    const int digit = digitToken[0] - '0';
    if (!(fields >> eq >> jointsField >> thumbField) || eq != "=") {
      fail(ErrorKind::VocabularyError, "expected `digit = joints:... thumb:...`" + where);
    }
    if (!jointsField.starts_with("joints:") || !thumbField.starts_with("thumb:")) {
      fail(ErrorKind::VocabularyError, "expected joints: and thumb: fields" + where);
    }

    Signature sig;
    std::string list = jointsField.substr(7);
    std::istringstream joints(list);
    std::string item;
    while (std::getline(joints, item, ',')) {
      if (item.empty()) {
        fail(ErrorKind::VocabularyError, "empty joint index" + where);
      }
      int j;
      try {
        j = std::stoi(item);
      } catch (const std::exception&) {
        j = -1;
      }
      if (j < 0 || j > 3) {
        fail(ErrorKind::VocabularyError, "joint index must be 0..3" + where);
      }
      if (sig.hasJoint(j)) {
        fail(ErrorKind::VocabularyError, "joint listed twice" + where);
      }
      sig.jointMask = static_cast<std::uint8_t>(sig.jointMask | (1u << j));
    }

    const std::string thumbValue = thumbField.substr(6);
    if (thumbValue == "true") {
      sig.thumb = true;
    } else if (thumbValue == "false") {
      sig.thumb = false;
    } else {
      fail(ErrorKind::VocabularyError, "thumb must be true or false" + where);
    }

    v.insert(sig, digit, lineNo);
  }
  if (v.size() == 0) {
    fail(ErrorKind::VocabularyError, "vocabulary has no entries");
  }
  return v;
}

Vocabulary Vocabulary::loadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::IoError, "cannot open vocabulary " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::optional<int> Vocabulary::lookup(const Signature& sig) const {
  const std::int8_t d = digitOf_[sig.index()];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<Signature> Vocabulary::signatureOf(int digit) const {
  for (int idx = 0; idx < 32; ++idx) {
    if (digitOf_[idx] == digit) {
      return Signature{static_cast<std::uint8_t>(idx & 0xf), (idx & 16) != 0};
    }
  }
  return std::nullopt;
}

int Vocabulary::size() const {
  int n = 0;
  for (const std::int8_t d : digitOf_) {
    if (d >= 0) ++n;
  }
  return n;
}

}  // namespace handsign
