#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace darb {

// Shortest round-trip decimal form ("%.17g" would be noisy; %.12g is stable
// and byte-identical across reruns, which is what the output contract needs).
std::string format_double(double v);
std::string format_int(long long v);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex16(std::uint64_t v);

// Minimal deterministic CSV sink: LF line endings, '.' decimal separator,
// one leading '#' provenance comment, then a header row and data rows.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);

  void comment(const std::string& text);
  void header(const std::vector<std::string>& names);
  void row(const std::vector<std::string>& cells);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
};

}  // namespace darb
