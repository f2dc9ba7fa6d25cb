#include "handsign/raster.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <limits>

namespace handsign {

namespace {

constexpr std::size_t kBmpHeaderSize = 54;  // file header (14) + info header (40)
constexpr int kMaxDimension = 100000;
constexpr std::int64_t kMaxPixels = 100000000;

std::uint16_t le16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t le32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void putLe16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void putLe32(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
  }
}

void checkDimensions(std::int64_t width, std::int64_t height) {
  if (width <= 0 || height <= 0 || width > kMaxDimension || height > kMaxDimension ||
      width * height > kMaxPixels) {
    fail(ErrorKind::MalformedHeader, "implausible image dimensions");
  }
}

}  // namespace

RgbImage decodeBmp(const Bytes& bytes) {
  if (bytes.size() < kBmpHeaderSize) {
    fail(ErrorKind::MalformedHeader, "file shorter than a BMP header");
  }
  if (bytes[0] != 'B' || bytes[1] != 'M') {
    fail(ErrorKind::MalformedHeader, "missing BM magic");
  }
  const std::uint32_t dataOffset = le32(&bytes[10]);
  const std::uint32_t infoSize = le32(&bytes[14]);
  if (infoSize != 40) {
    fail(ErrorKind::MalformedHeader, "only BITMAPINFOHEADER bitmaps are supported");
  }
  const auto width = static_cast<std::int32_t>(le32(&bytes[18]));
  const auto storedHeight = static_cast<std::int32_t>(le32(&bytes[22]));
  const std::uint16_t planes = le16(&bytes[26]);
  const std::uint16_t bitCount = le16(&bytes[28]);
  const std::uint32_t compression = le32(&bytes[30]);

  const bool bottomUp = storedHeight > 0;
  const std::int64_t height = bottomUp ? storedHeight : -static_cast<std::int64_t>(storedHeight);
  checkDimensions(width, height);
  if (planes != 1) {
    fail(ErrorKind::MalformedHeader, "plane count must be 1");
  }
  if (bitCount != 24 || compression != 0) {
    fail(ErrorKind::UnsupportedBitDepth, "only uncompressed 24-bit bitmaps are supported");
  }
  if (dataOffset < kBmpHeaderSize || dataOffset > bytes.size()) {
    fail(ErrorKind::MalformedHeader, "pixel data offset out of range");
  }

  const std::size_t stride = (static_cast<std::size_t>(width) * 3 + 3) & ~std::size_t{3};
  if (bytes.size() - dataOffset < stride * static_cast<std::size_t>(height)) {
    fail(ErrorKind::TruncatedPixelData, "pixel array shorter than declared size");
  }

  RgbImage img(height, width);
  for (std::int64_t row = 0; row < height; ++row) {
    const std::int64_t stored = bottomUp ? height - 1 - row : row;
    const std::uint8_t* src = bytes.data() + dataOffset + stored * stride;
    for (std::int64_t col = 0; col < width; ++col) {
      img.b(row, col) = src[col * 3 + 0];
      img.g(row, col) = src[col * 3 + 1];
      img.r(row, col) = src[col * 3 + 2];
    }
  }
  return img;
}

Bytes encodeBmp(const RgbImage& img) {
  const auto width = static_cast<std::uint32_t>(img.width());
  const auto height = static_cast<std::uint32_t>(img.height());
  const std::size_t stride = (static_cast<std::size_t>(width) * 3 + 3) & ~std::size_t{3};
  const auto imageSize = static_cast<std::uint32_t>(stride * height);

  Bytes out;
  out.reserve(kBmpHeaderSize + imageSize);
  out.push_back('B');
  out.push_back('M');
  putLe32(out, static_cast<std::uint32_t>(kBmpHeaderSize) + imageSize);
  putLe32(out, 0);
  putLe32(out, static_cast<std::uint32_t>(kBmpHeaderSize));
  putLe32(out, 40);
  putLe32(out, width);
  putLe32(out, height);  // positive = bottom-up
  putLe16(out, 1);
  putLe16(out, 24);
  putLe32(out, 0);
  putLe32(out, imageSize);
  putLe32(out, 2835);  // 72 dpi
  putLe32(out, 2835);
  putLe32(out, 0);
  putLe32(out, 0);

  for (Eigen::Index row = img.height() - 1; row >= 0; --row) {
    const std::size_t rowStart = out.size();
    for (Eigen::Index col = 0; col < img.width(); ++col) {
      out.push_back(img.b(row, col));
      out.push_back(img.g(row, col));
      out.push_back(img.r(row, col));
    }
    out.resize(rowStart + stride, 0);
  }
  return out;
}

namespace {

// Reads the three header numbers of a binary portable map, honouring
// whitespace and # comments, and returns the raster offset.
struct PnmHeader {
  std::int64_t width = 0, height = 0, maxval = 0;
  std::size_t rasterOffset = 0;
};

PnmHeader parsePnmHeader(const Bytes& bytes, char magic1) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != magic1) {
    fail(ErrorKind::MalformedHeader, "missing portable map magic");
  }
  std::size_t pos = 2;
  auto skipSeparators = [&] {
    while (pos < bytes.size()) {
      if (std::isspace(bytes[pos])) {
        ++pos;
      } else if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  };
  auto readNumber = [&]() -> std::int64_t {
    skipSeparators();
    if (pos >= bytes.size() || !std::isdigit(bytes[pos])) {
      fail(ErrorKind::MalformedHeader, "expected a header number");
    }
    std::int64_t value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos] - '0');
      if (value > std::numeric_limits<std::int32_t>::max()) {
        fail(ErrorKind::MalformedHeader, "header number out of range");
      }
      ++pos;
    }
    return value;
  };

  PnmHeader header;
  header.width = readNumber();
  header.height = readNumber();
  header.maxval = readNumber();
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
    fail(ErrorKind::MalformedHeader, "missing separator before raster");
  }
  header.rasterOffset = pos + 1;

  checkDimensions(header.width, header.height);
  if (header.maxval != 255) {
    fail(ErrorKind::MalformedHeader, "only maxval 255 is supported");
  }
  return header;
}

}  // namespace

GreyImage decodePgm(const Bytes& bytes) {
  const PnmHeader h = parsePnmHeader(bytes, '5');
  const auto need = static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height);
  if (bytes.size() - h.rasterOffset < need) {
    fail(ErrorKind::TruncatedPixelData, "greymap raster truncated");
  }
  GreyImage img(h.height, h.width);
  std::memcpy(img.data(), bytes.data() + h.rasterOffset, need);
  return img;
}

Bytes encodePgm(const GreyImage& img) {
  const std::string header = "P5\n" + std::to_string(img.cols()) + " " +
                             std::to_string(img.rows()) + "\n255\n";
  Bytes out(header.begin(), header.end());
  const auto pixels = static_cast<std::size_t>(img.size());
  out.insert(out.end(), img.data(), img.data() + pixels);
  return out;
}

RgbImage decodePpm(const Bytes& bytes) {
  const PnmHeader h = parsePnmHeader(bytes, '6');
  const auto need = static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height) * 3;
  if (bytes.size() - h.rasterOffset < need) {
    fail(ErrorKind::TruncatedPixelData, "pixmap raster truncated");
  }
  RgbImage img(h.height, h.width);
  const std::uint8_t* src = bytes.data() + h.rasterOffset;
  for (Eigen::Index row = 0; row < img.height(); ++row) {
    for (Eigen::Index col = 0; col < img.width(); ++col) {
      img.r(row, col) = *src++;
      img.g(row, col) = *src++;
      img.b(row, col) = *src++;
    }
  }
  return img;
}

Bytes encodePpm(const RgbImage& img) {
  const std::string header = "P6\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  Bytes out(header.begin(), header.end());
  out.reserve(out.size() + static_cast<std::size_t>(img.width()) * img.height() * 3);
  for (Eigen::Index row = 0; row < img.height(); ++row) {
    for (Eigen::Index col = 0; col < img.width(); ++col) {
      out.push_back(img.r(row, col));
      out.push_back(img.g(row, col));
      out.push_back(img.b(row, col));
    }
  }
  return out;
}

GreyImage toGrey(const RgbImage& img) {
  // Scaled-integer form of Y = 0.3 R + 0.59 G + 0.11 B with half-up rounding;
  // exact, unlike the same sum in binary floating point.
  const Grid<int> y = (30 * img.r.cast<int>() + 59 * img.g.cast<int>() +
                       11 * img.b.cast<int>() + 50) /
                      100;
  return y.cast<std::uint8_t>();
}

std::optional<FrameFormat> sniffFormat(const Bytes& bytes) {
  if (bytes.size() >= 2) {
    if (bytes[0] == 'B' && bytes[1] == 'M') return FrameFormat::Bmp;
    if (bytes[0] == 'P' && bytes[1] == '5') return FrameFormat::Pgm;
    if (bytes[0] == 'P' && bytes[1] == '6') return FrameFormat::Ppm;
  }
  return std::nullopt;
}

GreyImage decodeFrame(const Bytes& bytes) {
  const auto format = sniffFormat(bytes);
  if (!format) {
    fail(ErrorKind::MalformedHeader, "unrecognized frame format");
  }
  switch (*format) {
    case FrameFormat::Bmp:
      return toGrey(decodeBmp(bytes));
    case FrameFormat::Pgm:
      return decodePgm(bytes);
    case FrameFormat::Ppm:
      return toGrey(decodePpm(bytes));
  }
  fail(ErrorKind::MalformedHeader, "unrecognized frame format");
}

Bytes readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorKind::IoError, "cannot open " + path.string());
  }
  Bytes bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    fail(ErrorKind::IoError, "read failed for " + path.string());
  }
  return bytes;
}

void writeFile(const std::filesystem::path& path, const Bytes& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    fail(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    fail(ErrorKind::IoError, "write failed for " + path.string());
  }
}

GreyImage loadFrameFile(const std::filesystem::path& path) {
  return decodeFrame(readFile(path));
}

}  // namespace handsign
