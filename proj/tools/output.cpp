#include "output.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#ifdef SE2FRAME_HAVE_PNG
#include <png.h>
#endif

namespace se2frame::cli {

std::string format_double(double value) {
  if (std::isnan(value)) return "";
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", value);
  return buf.data();
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : out_(open_output(path)) {
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::separator() {
  if (row_started_) out_ << ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::add(double value) {
  separator();
  out_ << format_double(value);
  return *this;
}

CsvWriter& CsvWriter::add(long long value) {
  separator();
  out_ << value;
  return *this;
}

CsvWriter& CsvWriter::add_empty() {
  separator();
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  row_started_ = false;
}

#ifdef SE2FRAME_HAVE_PNG
namespace {

// Piecewise-linear viridis-like ramp.
std::array<unsigned char, 3> colormap(double t) {
  static constexpr std::array<std::array<double, 3>, 5> anchors = {{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * (anchors.size() - 1);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(t), anchors.size() - 2);
  const double f = t - static_cast<double>(i);
  std::array<unsigned char, 3> rgb{};
  for (int c = 0; c < 3; ++c) {
    rgb[c] = static_cast<unsigned char>(std::lround(anchors[i][c] * (1 - f) + anchors[i + 1][c] * f));
  }
  return rgb;
}

}  // namespace
#endif

bool write_log_heatmap_png(const std::filesystem::path& path, std::span<const double> values,
                           int width, int height) {
#ifdef SE2FRAME_HAVE_PNG
  std::vector<double> logs(values.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < values.size(); ++i) {
    logs[i] = std::isnan(values[i]) ? values[i] : std::log10(std::max(values[i], kLogFloor));
    if (!std::isnan(logs[i])) {
      lo = std::min(lo, logs[i]);
      hi = std::max(hi, logs[i]);
    }
  }
  const double span = hi > lo ? hi - lo : 1.0;

  std::vector<unsigned char> pixels(static_cast<std::size_t>(width) * height * 3);
  for (int x = 0; x < width; ++x) {
    for (int y = 0; y < height; ++y) {
      const double v = logs[static_cast<std::size_t>(x) * height + y];
      const std::array<unsigned char, 3> rgb =
          std::isnan(v) ? std::array<unsigned char, 3>{128, 128, 128} : colormap((v - lo) / span);
      const std::size_t row = static_cast<std::size_t>(height - 1 - y);
      std::copy(rgb.begin(), rgb.end(), pixels.begin() + (row * width + x) * 3);
    }
  }

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  FILE* fp = std::fopen(path.string().c_str(), "wb");
  if (fp == nullptr) throw std::runtime_error("cannot open " + path.string() + " for writing");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (png == nullptr || info == nullptr || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw std::runtime_error("libpng failed writing " + path.string());
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int row = 0; row < height; ++row) {
    png_write_row(png, pixels.data() + static_cast<std::size_t>(row) * width * 3);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
  return true;
#else
  (void)path;
  (void)values;
  (void)width;
  (void)height;
  return false;
#endif
}

}  // namespace se2frame::cli
