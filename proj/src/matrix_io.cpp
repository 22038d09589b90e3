#include <fstream>
#include <sstream>

#include "clusternet/errors.hpp"
#include "clusternet/serialize.hpp"

namespace cnet {
namespace {

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
  return s.substr(b);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(strip(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

DistanceMatrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(line);
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (line.empty()) continue;
    rows.push_back(split(line));
  }
  if (rows.empty()) throw StructuralError("empty matrix input");

  const auto& header = rows.front();
  if (header.empty() || header.front() != "label") {
    throw StructuralError("header must start with 'label'");
  }
  std::vector<std::string> labels(header.begin() + 1, header.end());
  const std::size_t n = labels.size();
  if (rows.size() - 1 != n) {
    throw StructuralError("matrix is not square: " + std::to_string(n) + " columns but " +
                          std::to_string(rows.size() - 1) + " rows");
  }
  std::vector<std::vector<Rational>> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != n + 1) {
      throw StructuralError("row " + std::to_string(i + 1) + " has " +
                            std::to_string(row.empty() ? 0 : row.size() - 1) + " values, expected " +
                            std::to_string(n));
    }
    if (row.front() != labels[i]) {
      throw StructuralError("row " + std::to_string(i + 1) + " is labeled '" + row.front() +
                            "' but column " + std::to_string(i + 1) + " is '" + labels[i] + "'");
    }
    for (std::size_t j = 0; j < n; ++j) {
      try {
        values[i].push_back(parse_rational(row[j + 1]));
      } catch (const StructuralError& e) {
        throw StructuralError("cell (" + labels[i] + ", " + labels[j] + "): " + e.what());
      }
    }
  }
  return DistanceMatrix::from_rows(std::move(labels), values);
}

DistanceMatrix read_matrix_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  try {
    return read_matrix_csv(in);
  } catch (const StructuralError& e) {
    throw StructuralError(path + ": " + e.what());
  }
}

void write_matrix_csv(std::ostream& out, const DistanceMatrix& d) {
  out << "label";
  for (const auto& l : d.labels()) out << ',' << l;
  out << '\n';
  for (std::size_t i = 0; i < d.size(); ++i) {
    out << d.labels()[i];
    for (std::size_t j = 0; j < d.size(); ++j) out << ',' << to_string(d(i, j));
    out << '\n';
  }
}

}  // namespace cnet
