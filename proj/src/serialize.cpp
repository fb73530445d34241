#include "primegraph/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace primegraph {

nlohmann::json poly_to_json(const IntPolynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

namespace {

template <typename T>
nlohmann::json matrix_json(const Matrix<T>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
std::string matrix_table(const Matrix<T>& m) {
  std::vector<std::string> cells;
  size_t width = 0;
  cells.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      cells.push_back(to_string(m.at(i, j)));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[static_cast<size_t>(i) * m.cols() + j];
      out << std::string(width - c.size(), ' ') << c << (j + 1 < m.cols() ? "  " : "");
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

nlohmann::json matrix_to_json(const IntMatrix& m) { return matrix_json(m); }
nlohmann::json matrix_to_json(const RatMatrix& m) { return matrix_json(m); }
std::string matrix_to_table(const IntMatrix& m) { return matrix_table(m); }
std::string matrix_to_table(const RatMatrix& m) { return matrix_table(m); }

}  // namespace primegraph
