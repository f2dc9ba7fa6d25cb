#pragma once

#include <Eigen/Core>
#include <stdexcept>

#include "handsign/errors.hpp"
#include "handsign/image.hpp"

namespace handsign {

// Gradient magnitude over the 8-connected neighbourhood
//
//   nw  n  ne
//   w   c  e
//   sw  s  se
//
// vertical   = ((sw + 2s + se) - (nw + 2n + ne)) / 4
// horizontal = ((ne + 2e + se) - (nw + 2w + sw)) / 4
// magnitude  = sqrt((vertical^2 + horizontal^2) / 2)
//
// The outermost ring has no full neighbourhood and is set to 0, so detectors
// never fire on the frame boundary. Values stay in [0, 255].
template <typename Derived>
GradientField sobelGradient(const Eigen::ArrayBase<Derived>& image) {
  const Eigen::Index rows = image.rows();
  const Eigen::Index cols = image.cols();
  if (rows < 3 || cols < 3) {
    fail(ErrorKind::ImageTooSmall, "gradient needs at least a 3x3 image");
  }

  const Grid<double> g = image.derived().template cast<double>();
  const Eigen::Index h = rows - 2;
  const Eigen::Index w = cols - 2;
  auto nb = [&](Eigen::Index dr, Eigen::Index dc) {
    return g.block(1 + dr, 1 + dc, h, w);
  };

  const Grid<double> vertical =
      0.25 * (nb(1, -1) + 2.0 * nb(1, 0) + nb(1, 1) -
              nb(-1, -1) - 2.0 * nb(-1, 0) - nb(-1, 1));
  const Grid<double> horizontal =
      0.25 * (nb(-1, 1) + 2.0 * nb(0, 1) + nb(1, 1) -
              nb(-1, -1) - 2.0 * nb(0, -1) - nb(1, -1));

  GradientField field = GradientField::Zero(rows, cols);
  field.block(1, 1, h, w) =
      (0.5 * (vertical.square() + horizontal.square())).sqrt();
  return field;
}

/// Marks pixels whose gradient magnitude strictly exceeds tau.
template <typename Derived>
EdgeMap thresholdEdges(const Eigen::ArrayBase<Derived>& field, double tau) {
  if (tau < 0.0) {
    throw std::invalid_argument("edge threshold must be non-negative");
  }
  return field.derived() > tau;
}

}  // namespace handsign
