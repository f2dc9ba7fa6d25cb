#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace handsign {

/// Dense row-major grid; indexed (row, col) with row 0 at the top of the frame.
template <typename Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// 8-bit luminance plane.
using GreyImage = Grid<std::uint8_t>;

/// Per-pixel gradient magnitude, zero on the outermost ring.
using GradientField = Grid<double>;

/// Binary edge mask derived from a GradientField.
using EdgeMap = Grid<bool>;

/// 24-bit colour frame stored as three equally shaped planes.
struct RgbImage {
  Grid<std::uint8_t> r, g, b;

  RgbImage() = default;
  RgbImage(Eigen::Index height, Eigen::Index width)
      : r(height, width), g(height, width), b(height, width) {}

  static RgbImage constant(Eigen::Index height, Eigen::Index width,
                           std::uint8_t red, std::uint8_t green, std::uint8_t blue) {
    RgbImage img(height, width);
    img.r.setConstant(red);
    img.g.setConstant(green);
    img.b.setConstant(blue);
    return img;
  }

  Eigen::Index height() const { return r.rows(); }
  Eigen::Index width() const { return r.cols(); }

  bool sameShape() const {
    return r.rows() == g.rows() && g.rows() == b.rows() &&
           r.cols() == g.cols() && g.cols() == b.cols();
  }

  bool operator==(const RgbImage& other) const {
    return r.rows() == other.r.rows() && r.cols() == other.r.cols() &&
           (r == other.r).all() && (g == other.g).all() && (b == other.b).all();
  }
};

/// Axis-aligned region with inclusive bounds.
struct Rect {
  int left = 0, right = 0, top = 0, bottom = 0;

  int width() const { return right - left + 1; }
  int height() const { return bottom - top + 1; }
  bool valid() const { return left <= right && top <= bottom; }
};

}  // namespace handsign
