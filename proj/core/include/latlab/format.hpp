#pragma once

#include <string>
#include <vector>

namespace latlab {

// Report number format: 12 significant digits, fixed notation for
// 1e-4 <= |v| < 1e8 (trailing zeros trimmed), scientific otherwise.
std::string format_number(double v);

// Minimal CSV table with a fixed header; rows are already-formatted cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
};

}  // namespace latlab
