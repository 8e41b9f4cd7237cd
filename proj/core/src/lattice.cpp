#include "pappus/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "pappus/error.hpp"

namespace pappus {

namespace {

std::size_t choose2(std::size_t k) { return k * (k - 1) / 2; }

}  // namespace

IntersectionLattice::IntersectionLattice(std::size_t n, std::vector<LatticePoint> points)
    : n_(n), points_(std::move(points)) {
  for (const auto& p : points_) ++t_[p.lines.size()];
}

std::size_t IntersectionLattice::t(std::size_t k) const {
  const auto it = t_.find(k);
  return it == t_.end() ? 0 : it->second;
}

IntersectionLattice build_lattice(const std::vector<HomTriple>& lines) {
  for (const auto& l : lines) {
    if (l.field() == FieldTag::symbolic) {
      throw Error(ErrorCode::FieldMismatch, "lattices are built over specialized fields only");
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (projectively_equal(lines[i], lines[j])) {
        throw Error(ErrorCode::DuplicateLines, "lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }

  std::map<std::string, LatticePoint> grouped;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      HomTriple p = meet(lines[i], lines[j]);
      auto key = p.to_string();
      auto it = grouped.find(key);
      if (it == grouped.end()) it = grouped.emplace(std::move(key), LatticePoint{std::move(p), {}}).first;
      auto& incident_lines = it->second.lines;
      for (std::size_t k : {i, j}) {
        if (incident_lines.empty() || incident_lines.back() < k) {
          incident_lines.push_back(k);
        } else if (std::find(incident_lines.begin(), incident_lines.end(), k) == incident_lines.end()) {
          incident_lines.insert(std::lower_bound(incident_lines.begin(), incident_lines.end(), k), k);
        }
      }
    }
  }
  std::vector<LatticePoint> points;
  points.reserve(grouped.size());
  for (auto& [key, p] : grouped) points.push_back(std::move(p));

  IntersectionLattice lat(lines.size(), std::move(points));
  if (!check_counting_identity(lat)) throw std::logic_error("intersection lattice violates the counting identity");
  return lat;
}

bool check_counting_identity(const IntersectionLattice& lat) {
  std::size_t rhs = 0;
  for (const auto& [k, count] : lat.t_vector()) rhs += count * choose2(k);
  return choose2(lat.n()) == rhs;
}

}  // namespace pappus
