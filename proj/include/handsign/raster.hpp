#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "handsign/errors.hpp"
#include "handsign/image.hpp"

namespace handsign {

using Bytes = std::vector<std::uint8_t>;

// Windows BMP, 24-bit uncompressed, BITMAPINFOHEADER only. Decoding normalizes
// to top-down row order and strips the 4-byte row padding.
RgbImage decodeBmp(const Bytes& bytes);
Bytes encodeBmp(const RgbImage& img);

// Binary portable maps, maxval 255. encode/decode round-trips are bit-exact.
GreyImage decodePgm(const Bytes& bytes);
Bytes encodePgm(const GreyImage& img);
RgbImage decodePpm(const Bytes& bytes);
Bytes encodePpm(const RgbImage& img);

/// Luminance from colour planes: Y = 0.3 R + 0.59 G + 0.11 B, rounded half-up.
GreyImage toGrey(const RgbImage& img);

enum class FrameFormat { Bmp, Pgm, Ppm };

std::optional<FrameFormat> sniffFormat(const Bytes& bytes);

/// Decodes any supported frame format to luminance.
GreyImage decodeFrame(const Bytes& bytes);

Bytes readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, const Bytes& bytes);
GreyImage loadFrameFile(const std::filesystem::path& path);

}  // namespace handsign
