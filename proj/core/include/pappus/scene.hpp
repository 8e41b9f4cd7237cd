#pragma once

#include <array>
#include <span>
#include <vector>

#include "pappus/perm3.hpp"
#include "pappus/projective.hpp"

namespace pappus {

/// The three points C_{1,s}, C_{2,s}, C_{3,s} of the Pappus construction on
/// two point triples, with B-labels permuted by s:
///   C_1 = L(A2, B_s(3)) ^ L(A3, B_s(2))
///   C_2 = L(A1, B_s(3)) ^ L(A3, B_s(1))
///   C_3 = L(A1, B_s(2)) ^ L(A2, B_s(1))
std::array<HomTriple, 3> pappus_c_points(std::span<const HomTriple, 3> a, std::span<const HomTriple, 3> b,
                                         const Perm3& sigma);

/// Line through pappus_c_points(a, b, sigma). Throws NonCollinearCPoints if
/// the third point is off the line through the first two, and
/// DegenerateParameters if all three C-points coincide.
HomTriple pappus_line_of(std::span<const HomTriple, 3> a, std::span<const HomTriple, 3> b, const Perm3& sigma);

/// The six Pappus lines indexed like Perm3::all().
std::vector<HomTriple> pappus_lines_of(std::span<const HomTriple, 3> a, std::span<const HomTriple, 3> b);

struct SceneOptions {
  /// Additionally require the six Pappus lines to be pairwise distinct.
  bool strict = false;
};

/// Canonical two-parameter Pappus configuration:
///   A1 = (1:0:0), A2 = (1:a:0), A3 = (0:1:0)   on L_A: z = 0
///   B1 = (1:1:b), B2 = (0:0:1), B3 = (1:1:1)   on L_B: x - y = 0
/// together with its nine joins, the 18 points C_{k,s} and six Pappus lines.
class PappusScene {
 public:
  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  FieldTag field() const { return a_.field(); }

  /// 1-based indices.
  const HomTriple& point_a(int i) const { return a_points_.at(static_cast<std::size_t>(i - 1)); }
  const HomTriple& point_b(int j) const { return b_points_.at(static_cast<std::size_t>(j - 1)); }
  std::span<const HomTriple, 3> a_points() const { return std::span<const HomTriple, 3>(a_points_.data(), 3); }
  std::span<const HomTriple, 3> b_points() const { return std::span<const HomTriple, 3>(b_points_.data(), 3); }

  const HomTriple& line_a() const { return frame_.at(0); }
  const HomTriple& line_b() const { return frame_.at(1); }
  /// S = L_A ^ L_B = (1:1:0).
  const HomTriple& s_point() const { return frame_.at(2); }

  /// L(A_i, B_j), 1-based.
  const HomTriple& join_line(int i, int j) const {
    return joins_.at(static_cast<std::size_t>((i - 1) * 3 + (j - 1)));
  }
  /// C_{k,sigma}, k in 1..3.
  const HomTriple& c_point(int k, const Perm3& sigma) const {
    return c_points_.at(sigma.index() * 3 + static_cast<std::size_t>(k - 1));
  }
  const HomTriple& pappus_line(const Perm3& sigma) const { return pappus_lines_.at(sigma.index()); }
  const std::vector<HomTriple>& pappus_lines() const { return pappus_lines_; }

  /// Specializes a symbolic scene at (a0, b0), coordinate by coordinate.
  PappusScene specialized(const BigRational& a0, const BigRational& b0) const;

 private:
  friend PappusScene canonical_scene(const Scalar&, const Scalar&, const SceneOptions&);
  PappusScene() = default;

  Scalar a_;
  Scalar b_;
  std::vector<HomTriple> a_points_;
  std::vector<HomTriple> b_points_;
  std::vector<HomTriple> frame_;  // L_A, L_B, S
  std::vector<HomTriple> joins_;
  std::vector<HomTriple> c_points_;
  std::vector<HomTriple> pappus_lines_;
};

/// Builds the canonical scene. Throws DegenerateParameters naming the
/// violated condition (a or b in {0, 1}; coincident Pappus lines in strict
/// mode).
PappusScene canonical_scene(const Scalar& a, const Scalar& b, const SceneOptions& options = {});

/// Convenience for the generic point: a, b as indeterminates of Q(a,b).
PappusScene symbolic_scene();

/// Certifies Pappus' theorem on explicit data: builds C_1, C_2, C_3 and
/// returns det3(C_1, C_2, C_3) == 0. Throws InvalidInitialData naming the
/// violated precondition (distinct collinear triples on distinct lines,
/// avoiding their intersection).
bool verify_pappus(std::span<const HomTriple, 3> a, std::span<const HomTriple, 3> b);

}  // namespace pappus
