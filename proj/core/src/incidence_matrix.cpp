#include "pappus/incidence_matrix.hpp"

#include "pappus/error.hpp"

namespace pappus {

std::size_t IncidenceMatrix::row_sum(std::size_t r) const {
  std::size_t s = 0;
  for (bool v : cells.at(r)) s += v ? 1 : 0;
  return s;
}

std::size_t IncidenceMatrix::col_sum(std::size_t c) const {
  std::size_t s = 0;
  for (const auto& row : cells) s += row.at(c) ? 1 : 0;
  return s;
}

IncidenceMatrix IncidenceMatrix::transposed() const {
  IncidenceMatrix t{col_labels, row_labels, {}};
  t.cells.assign(col_labels.size(), std::vector<bool>(row_labels.size(), false));
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) t.cells[c][r] = cells[r][c];
  }
  return t;
}

namespace {

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

}  // namespace

std::string IncidenceMatrix::to_csv() const {
  std::string out = "line";
  for (const auto& c : col_labels) out += "," + csv_field(c);
  out += "\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out += csv_field(row_labels[r]);
    for (bool v : cells[r]) out += v ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

const std::vector<std::string>& incidence_row_labels() {
  static const std::vector<std::string> labels = {"L_A",      "L_B",      "L_C",      "L(A2,B3)", "L(A3,B2)",
                                                  "L(A1,B3)", "L(A3,B1)", "L(A1,B2)", "L(A2,B1)"};
  return labels;
}

IncidenceMatrix incidence_matrix(const Configuration& cfg) {
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = i + 1; j < 9; ++j) {
      if (projectively_equal(cfg.points[i], cfg.points[j])) {
        throw Error(ErrorCode::DegenerateParameters, std::string(label_name(kAllLabels[i])) + " = " +
                                                         std::string(label_name(kAllLabels[j])));
      }
    }
  }
  const auto lines = configuration_lines(cfg);
  IncidenceMatrix mat;
  mat.row_labels = incidence_row_labels();
  for (Label l : kAllLabels) mat.col_labels.emplace_back(label_name(l));
  for (const auto& line : lines) {
    std::vector<bool> row;
    row.reserve(9);
    for (const auto& p : cfg.points) row.push_back(incident(p, line));
    mat.cells.push_back(std::move(row));
  }
  return mat;
}

IncidenceMatrix incidence_matrix(const PappusScene& scene, const Perm3& sigma) {
  return incidence_matrix(configuration_of(scene, sigma));
}

bool is_nk_configuration(const IncidenceMatrix& mat, std::size_t k) {
  if (mat.cells.size() != mat.col_labels.size()) return false;
  for (const auto& row : mat.cells) {
    if (row.size() != mat.col_labels.size()) return false;
  }
  for (std::size_t i = 0; i < mat.cells.size(); ++i) {
    if (mat.row_sum(i) != k || mat.col_sum(i) != k) return false;
  }
  return true;
}

}  // namespace pappus
