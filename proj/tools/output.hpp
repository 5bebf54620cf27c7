#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace se2frame::cli {

// Shortest form is not used: every value is written with 17 significant
// digits so the file round-trips to the same doubles. NaN becomes an empty
// field.
std::string format_double(double value);

// Opens `path` for writing, creating parent directories. Throws
// std::runtime_error on failure.
std::ofstream open_output(const std::filesystem::path& path);

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  CsvWriter& add(double value);
  CsvWriter& add(long long value);
  CsvWriter& add(int value) { return add(static_cast<long long>(value)); }
  CsvWriter& add_empty();
  void end_row();

 private:
  void separator();

  std::ofstream out_;
  bool row_started_ = false;
};

inline constexpr double kLogFloor = 1e-16;

// Writes log10(max(value, 1e-16)) as an 8-bit RGB heatmap. `values` is
// indexed [x * height + y] (x slow), matching the cell order of the sweep; y
// grows upwards in the image. NaN pixels are drawn grey. Returns false when
// the tool was built without PNG support.
bool write_log_heatmap_png(const std::filesystem::path& path, std::span<const double> values,
                           int width, int height);

}  // namespace se2frame::cli
