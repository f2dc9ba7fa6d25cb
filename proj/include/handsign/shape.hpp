#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "handsign/errors.hpp"
#include "handsign/image.hpp"

namespace handsign {

enum class Axis { Columns, Rows };

/// Edge-pixel counts per column (or row) of a region.
struct Histogram {
  Axis axis = Axis::Columns;
  int origin = 0;  // first column/row covered
  Eigen::ArrayXi counts;
};

Histogram edgeHistogram(const EdgeMap& map, const Rect& region, Axis axis);

/// Rectangular palm model. Width and height are the edge-to-edge distances
/// (right - left, bottom - top).
struct PalmRect {
  int left = 0, right = 0, top = 0, bottom = 0;

  int width() const { return right - left; }
  int height() const { return bottom - top; }

  bool operator==(const PalmRect&) const = default;
};

struct PalmParams {
  double beta = 0.9;       // span ratio a row needs to count as the palm top
  double sideRatio = 0.5;  // column occupancy ratio marking the palm sides
  int minEdgePixels = 50;
  int minWidthPx = 16;
};

// Palm boundary from edge-pixel histograms:
//   bottom  lowest edge row in the map
//   sides   extreme columns whose lower-half occupancy reaches
//           sideRatio x region height (keeps an extended thumb out)
//   top     highest row whose occupied span inside [left, right] reaches
//           beta x (right - left); finger rows are too narrow to qualify
PalmRect detectPalm(const EdgeMap& map, const PalmParams& params = {});

/// One step of the skyline, classified by the height change between two
/// adjacent columns. Presence transitions count as steep steps.
enum class StepClass { SteepRise, GentleRise, Flat, GentleFall, SteepFall };

struct StepToken {
  StepClass step;
  int col;  // right column of the pair that produced the token

  bool operator==(const StepToken&) const = default;
};

// Skyline = per-column topmost edge row strictly above the palm top,
// for columns in [palm.left, palm.right]; -1 where no such pixel exists.
Eigen::ArrayXi skylineAbove(const EdgeMap& map, const PalmRect& palm);

// Classifies every adjacent column pair of the skyline. With delta the row
// change left to right: <= -2 steep rise, -1 gentle rise, 0 flat, +1 gentle
// fall, >= +2 steep fall. A column turning present emits a steep rise, one
// turning absent a steep fall; absent pairs emit nothing.
std::vector<StepToken> tokenizeSkyline(const EdgeMap& map, const PalmRect& palm);

struct Fingertip {
  int row = 0;
  int col = 0;

  bool operator==(const Fingertip&) const = default;
};

// Accepts one convex protrusion of the skyline at a time: a rise, a flat
// apex, then a fall. Gentle flanks are optional (a rectangular finger goes
// rise/flat/fall directly), every state loops on its own step class, and an
// out-of-order step resets the machine, re-entering on rises.
class TipAutomaton {
 public:
  enum class State { Idle, SteepRise, GentleRise, Apex, GentleFall };

  /// Feeds one token; row is the skyline row at token.col. Returns a tip
  /// when a protrusion is completed by its falling edge.
  std::optional<Fingertip> step(const StepToken& token, int row);

  void reset();
  State state() const { return state_; }
  int apexStart() const { return apexStart_; }
  int apexEnd() const { return apexEnd_; }
  int apexRow() const { return apexRow_; }

 private:
  State state_ = State::Idle;
  int apexStart_ = 0;
  int apexEnd_ = 0;
  int apexRow_ = 0;
};

/// Runs the automaton over the skyline tokens; tips come back in ascending
/// column order, each at the midpoint of its apex run.
std::vector<Fingertip> detectFingertips(const EdgeMap& map, const PalmRect& palm);

/// True when the columns right of the palm that hold edge pixels (rows
/// limited to the palm band) outnumber gamma x palm width.
bool detectThumb(const EdgeMap& map, const PalmRect& palm, double gamma = 0.15);

}  // namespace handsign
