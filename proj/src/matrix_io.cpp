#include "urnsect/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "urnsect/errors.hpp"

namespace urnsect {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    cells.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  if (!cells.empty() && !cells.back().empty() && cells.back().back() == '\r') {
    cells.back().pop_back();
  }
  return cells;
}

}  // namespace

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_tsv(std::ostream& out, const LabeledMatrix& m) {
  out << m.corner;
  for (const auto& c : m.column_names) out << '\t' << c;
  out << '\n';
  for (std::size_t r = 0; r < m.row_names.size(); ++r) {
    out << m.row_names[r];
    for (double x : m.values[r]) out << '\t' << format_real(x);
    out << '\n';
  }
}

LabeledMatrix read_tsv(std::istream& in, const std::string& source) {
  LabeledMatrix m;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_tabs(line);
    if (!have_header) {
      have_header = true;
      m.corner = cells[0];
      m.column_names.assign(cells.begin() + 1, cells.end());
      if (m.column_names.empty()) {
        throw DataError(source + ":" + std::to_string(lineno) + ": header has no columns");
      }
      continue;
    }
    if (cells.size() != m.column_names.size() + 1) {
      throw DataError(source + ":" + std::to_string(lineno) + ": expected " +
                      std::to_string(m.column_names.size() + 1) + " fields, got " +
                      std::to_string(cells.size()));
    }
    std::vector<double> row;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      const std::string& cell = cells[i];
      double x = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), x);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw DataError(source + ":" + std::to_string(lineno) + ": field " + std::to_string(i + 1) +
                        " is not a number: '" + cell + "'");
      }
      row.push_back(x);
    }
    m.row_names.push_back(cells[0]);
    m.values.push_back(std::move(row));
  }
  if (!have_header) throw DataError(source + ": missing header row");
  return m;
}

}  // namespace urnsect
