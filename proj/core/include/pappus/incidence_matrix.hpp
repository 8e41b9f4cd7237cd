#pragma once

#include <string>
#include <vector>

#include "pappus/relabel.hpp"

namespace pappus {

struct IncidenceMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<bool>> cells;  // cells[row][col]

  std::size_t row_sum(std::size_t r) const;
  std::size_t col_sum(std::size_t c) const;
  IncidenceMatrix transposed() const;
  /// Header row of column labels, then one row per line with 0/1 cells.
  std::string to_csv() const;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

/// Line labels in table order: L_A, L_B, L_C, L(A2,B3), L(A3,B2), L(A1,B3),
/// L(A3,B1), L(A1,B2), L(A2,B1).
const std::vector<std::string>& incidence_row_labels();

/// Rows are the configuration lines, columns A1..C3; cells come from exact
/// incidence tests. Throws DegenerateParameters if two of the nine points
/// coincide.
IncidenceMatrix incidence_matrix(const Configuration& cfg);
IncidenceMatrix incidence_matrix(const PappusScene& scene, const Perm3& sigma = Perm3::identity());

/// Square with all row and column sums equal to k.
bool is_nk_configuration(const IncidenceMatrix& mat, std::size_t k);

}  // namespace pappus
