#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pappus/projective.hpp"

namespace pappus {

struct LatticePoint {
  HomTriple point;
  std::vector<std::size_t> lines;  // ascending indices into the input list
};

/// Intersection points of a finite line family with their incident lines.
class IntersectionLattice {
 public:
  IntersectionLattice(std::size_t n, std::vector<LatticePoint> points);

  std::size_t n() const { return n_; }
  /// Ordered by the display-canonical text of the point.
  const std::vector<LatticePoint>& points() const { return points_; }
  /// t_k: number of points on exactly k lines (k >= 2).
  std::size_t t(std::size_t k) const;
  const std::map<std::size_t, std::size_t>& t_vector() const { return t_; }

 private:
  std::size_t n_;
  std::vector<LatticePoint> points_;
  std::map<std::size_t, std::size_t> t_;
};

/// Groups all pairwise meets by projective equality. Lines must be pairwise
/// distinct (DuplicateLines) and over Q or Q(w) (FieldMismatch for symbolic).
IntersectionLattice build_lattice(const std::vector<HomTriple>& lines);

/// binom(n, 2) == sum_k t_k * binom(k, 2).
bool check_counting_identity(const IntersectionLattice& lat);

}  // namespace pappus
