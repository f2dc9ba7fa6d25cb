#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "handsign/skeleton.hpp"

using namespace handsign;

namespace {

ErrorKind vocabErrorKind(const std::string& text, std::string* message = nullptr) {
  try {
    Vocabulary::parse(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  FAIL("expected a vocabulary error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("joints sit at the odd eighths of the palm width") {
  const PalmRect palm{0, 80, 10, 110};
  const auto joints = placeJoints(palm);
  const int cols[4] = {10, 30, 50, 70};
  for (int k = 0; k < 4; ++k) {
    CHECK(joints[k].row == 10);
    CHECK(joints[k].col == cols[k]);
  }

  const PalmRect narrow{0, 8, 0, 20};
  const auto narrowJoints = placeJoints(narrow);
  const int narrowCols[4] = {1, 3, 5, 7};
  for (int k = 0; k < 4; ++k) {
    CHECK(narrowJoints[k].col == narrowCols[k]);
  }
}

TEST_CASE("joints are symmetric about the palm midline for every width") {
  for (int width = 16; width <= 120; ++width) {
    const PalmRect palm{100, 100 + width, 10, 110};
    const auto joints = placeJoints(palm);
    for (int k = 0; k < 4; ++k) {
      const int a = joints[k].col - palm.left;
      const int b = palm.right - joints[3 - k].col;
      CHECK(a == b);
    }
    CHECK(joints[0].col < joints[1].col);
    CHECK(joints[1].col < joints[2].col);
    CHECK(joints[2].col < joints[3].col);
  }
}

TEST_CASE("skeleton connects tips to the nearest joint and gates on length") {
  const PalmRect palm{0, 80, 100, 200};  // height 100
  const double lambda = 0.35;

  SUBCASE("no tips, no fingers") {
    const SkeletalModel model = buildSkeleton(palm, {}, false, lambda);
    CHECK(model.fingers.empty());
    CHECK(!model.thumb);
  }

  SUBCASE("a long tip above joint 3 is kept") {
    // joint 3 at (100, 70); 0.6 x palm height above it
    const Fingertip tip{100 - 60, 70};
    const SkeletalModel model = buildSkeleton(palm, {tip}, false, lambda);
    REQUIRE(model.fingers.size() == 1);
    CHECK(model.fingers[0].joint == 3);
    CHECK(model.fingers[0].length == doctest::Approx(60.0));
  }

  SUBCASE("a short tip is rejected as bent") {
    const Fingertip tip{100 - 20, 70};  // 0.2 x palm height
    const SkeletalModel model = buildSkeleton(palm, {tip}, false, lambda);
    CHECK(model.fingers.empty());
  }

  SUBCASE("ties go to the lower joint index") {
    // Equidistant between joints 1 (col 30) and 2 (col 50).
    const Fingertip tip{40, 40};
    const SkeletalModel model = buildSkeleton(palm, {tip}, false, lambda);
    REQUIRE(model.fingers.size() == 1);
    CHECK(model.fingers[0].joint == 1);
  }

  SUBCASE("tips below the palm top are a precondition violation") {
    CHECK_THROWS_AS(buildSkeleton(palm, {Fingertip{150, 40}}, false, lambda),
                    std::invalid_argument);
  }
}

TEST_CASE("the default vocabulary maps the documented signatures") {
  const Vocabulary vocab = Vocabulary::defaults();
  CHECK(vocab.size() == 10);
  CHECK(vocab.lookup(Signature::of({})) == 0);
  CHECK(vocab.lookup(Signature::of({3})) == 1);
  CHECK(vocab.lookup(Signature::of({2, 3})) == 2);
  CHECK(vocab.lookup(Signature::of({2, 3}, true)) == 3);
  CHECK(vocab.lookup(Signature::of({0, 1, 2, 3})) == 4);
  CHECK(vocab.lookup(Signature::of({0, 1, 2, 3}, true)) == 5);
  CHECK(vocab.lookup(Signature::of({1, 2, 3})) == 6);
  CHECK(vocab.lookup(Signature::of({0, 1, 2})) == 7);
  CHECK(vocab.lookup(Signature::of({0})) == 8);
  CHECK(vocab.lookup(Signature::of({0, 3})) == 9);
  CHECK(!vocab.lookup(Signature::of({1})).has_value());
  CHECK(!vocab.lookup(Signature::of({0}, true)).has_value());

  for (int d = 0; d <= 9; ++d) {
    const auto sig = vocab.signatureOf(d);
    REQUIRE(sig.has_value());
    CHECK(vocab.lookup(*sig) == d);
    CHECK(sig->thumb == (d == 3 || d == 5));
  }
}

TEST_CASE("classification is a signature lookup") {
  const Vocabulary vocab = Vocabulary::defaults();
  const PalmRect palm{0, 80, 100, 200};

  SUBCASE("empty hand is digit 0") {
    const SkeletalModel model = buildSkeleton(palm, {}, false);
    const Classification result = classify(model, vocab);
    CHECK(result.known);
    CHECK(result.digit == 0);
    REQUIRE(result.signature.has_value());
    CHECK(result.signature->jointMask == 0);
  }

  SUBCASE("all four fingers with thumb is digit 5, index pair with thumb is 3") {
    SkeletalModel model = buildSkeleton(palm, {}, true);
    model.fingers = {{0, {40, 10}, 60},
                     {1, {40, 30}, 60},
                     {2, {40, 50}, 60},
                     {3, {40, 70}, 60}};
    CHECK(classify(model, vocab).digit == 5);

    model.fingers = {{2, {40, 50}, 60}, {3, {40, 70}, 60}};
    CHECK(classify(model, vocab).digit == 3);
  }

  SUBCASE("two fingers on one joint are unclassifiable") {
    SkeletalModel model = buildSkeleton(palm, {}, false);
    model.fingers = {{3, {40, 68}, 60}, {3, {40, 73}, 60}};
    const Classification result = classify(model, vocab);
    CHECK(!result.known);
    CHECK(!result.signature.has_value());
  }

  SUBCASE("signature outside the table is unknown") {
    SkeletalModel model = buildSkeleton(palm, {}, false);
    model.fingers = {{1, {40, 30}, 60}};
    const Classification result = classify(model, vocab);
    CHECK(!result.known);
    REQUIRE(result.signature.has_value());
    CHECK(result.signature->jointMask == 0b0010);
  }
}

TEST_CASE("vocabulary files round-trip the default table") {
  const std::string text =
      "# digits\n"
      "0 = joints: thumb:false\n"
      "1 = joints:3 thumb:false\n"
      "2 = joints:2,3 thumb:false\n"
      "3 = joints:2,3 thumb:true\n"
      "4 = joints:0,1,2,3 thumb:false\n"
      "5 = joints:0,1,2,3 thumb:true\n"
      "6 = joints:1,2,3 thumb:false\n"
      "7 = joints:0,1,2 thumb:false\n"
      "8 = joints:0 thumb:false\n"
      "9 = joints:0,3 thumb:false\n";
  const Vocabulary vocab = Vocabulary::parse(text);
  const Vocabulary defaults = Vocabulary::defaults();
  for (int d = 0; d <= 9; ++d) {
    CHECK(vocab.signatureOf(d) == defaults.signatureOf(d));
  }
}

TEST_CASE("vocabulary loader rejects bad tables with line numbers") {
  std::string message;

  // thumb on a digit other than 3 or 5
  CHECK(vocabErrorKind("7 = joints:0,1,2 thumb:true\n", &message) ==
        ErrorKind::VocabularyError);
  CHECK(message.find("line 1") != std::string::npos);

  // two signatures for one digit
  CHECK(vocabErrorKind("4 = joints:0,1,2,3 thumb:false\n"
                       "4 = joints:1,2 thumb:false\n",
                       &message) == ErrorKind::VocabularyError);
  CHECK(message.find("line 2") != std::string::npos);

  // one signature for two digits
  CHECK(vocabErrorKind("4 = joints:0,1,2,3 thumb:false\n"
                       "6 = joints:0,1,2,3 thumb:false\n",
                       &message) == ErrorKind::VocabularyError);
  CHECK(message.find("line 2") != std::string::npos);

  CHECK(vocabErrorKind("4 = joints:0,7 thumb:false\n") == ErrorKind::VocabularyError);
  CHECK(vocabErrorKind("4 = joints:0,1 thumb:maybe\n") == ErrorKind::VocabularyError);
  CHECK(vocabErrorKind("four = joints:0 thumb:false\n") == ErrorKind::VocabularyError);
  CHECK(vocabErrorKind("") == ErrorKind::VocabularyError);
}
