#pragma once

// Tab-separated matrices with a header row and a leading name column.
// Numbers are written with 17 significant digits so they read back exactly.

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace urnsect {

struct LabeledMatrix {
  std::string corner = "set";
  std::vector<std::string> row_names;
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> values;
};

void write_tsv(std::ostream& out, const LabeledMatrix& matrix);
/// Throws DataError naming `source` and the line number on malformed input.
LabeledMatrix read_tsv(std::istream& in, const std::string& source = "matrix");

/// "%.17g".
std::string format_real(double x);

}  // namespace urnsect
