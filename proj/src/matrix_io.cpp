#include "gcfib/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "gcfib/error.hpp"

namespace gcfib {

bool ScalarMatrix::all_exact() const {
  for (const auto& e : entries) {
    if (!e.exact()) return false;
  }
  return true;
}

Matrix ScalarMatrix::to_matrix() const {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = at(i, j).value();
  }
  return m;
}

ScalarMatrix parse_matrix(std::string_view text) {
  ScalarMatrix out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    std::vector<Scalar> row;
    while (tokens >> token) {
      if (row.empty() && token.front() == '#') break;
      try {
        row.push_back(Scalar::parse(token));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
    }
    if (row.empty()) continue;
    if (out.rows == 0) {
      out.cols = static_cast<int>(row.size());
    } else if (static_cast<int>(row.size()) != out.cols) {
      throw ParseError(line_no, "row has " + std::to_string(row.size()) + " entries, expected " +
                                    std::to_string(out.cols));
    }
    out.entries.insert(out.entries.end(), row.begin(), row.end());
    ++out.rows;
  }
  if (out.rows == 0) throw ParseError(line_no, "no matrix rows found");
  return out;
}

ScalarMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

void require_exactly_skew(const ScalarMatrix& m) {
  if (m.rows != m.cols) throw DimensionError("skew matrix must be square");
  for (int i = 0; i < m.rows; ++i) {
    for (int j = i; j < m.cols; ++j) {
      const Rational& a = m.at(i, j).rational();
      const Rational& b = m.at(j, i).rational();
      if (!(a + b).is_zero()) {
        throw ValidationError("matrix is not skew-symmetric: entry (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") = " + a.to_string() + " and entry (" +
                              std::to_string(j + 1) + "," + std::to_string(i + 1) + ") = " +
                              b.to_string() + " are not negatives of each other");
      }
    }
  }
}

}  // namespace gcfib
