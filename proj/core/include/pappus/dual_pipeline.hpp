#pragma once

#include <array>
#include <vector>

#include "pappus/scene.hpp"

namespace pappus {

/// Points L*_{C,sigma}, indexed like Perm3::all().
std::vector<HomTriple> dual_points(const PappusScene& scene);

struct MLines {
  HomTriple m1;  // through the even-sigma dual points
  HomTriple m2;  // through the odd-sigma dual points
};

/// Fits M1 and M2. Throws TripleNotCollinear if a parity class is not collinear.
MLines fit_m_lines(const std::vector<HomTriple>& dual_pts);

/// Which dual points play A1..A3 and B1..B3 in the second Pappus construction.
struct SecondStageRoles {
  std::array<Perm3, 3> a_role;
  std::array<Perm3, 3> b_role;

  friend bool operator==(const SecondStageRoles&, const SecondStageRoles&) = default;
};

/// A-role: the odd triple (t2, t2t3, t2t3^2); B-role: the even triple
/// (id, t3, t3^2). With this choice the sigma-indexing of the second-stage
/// lines reproduces the reference M*_{C,sigma} table.
SecondStageRoles default_second_stage_roles();

/// Six Pappus lines M_{C,sigma} of the dual data, indexed like Perm3::all().
std::vector<HomTriple> second_stage(const std::vector<HomTriple>& dual_pts,
                                    const SecondStageRoles& roles = default_second_stage_roles());

struct Landing {
  std::vector<std::size_t> on_la;  // indices into the returned points
  std::vector<std::size_t> on_lb;
};

/// Partitions returned points by L_A / L_B. Throws LandingFailure naming a
/// point on neither line, or if the split is not 3/3.
Landing landing_check(const std::vector<HomTriple>& returned, const PappusScene& scene);

/// Points on L_A depend only on a, points on L_B only on b. Requires a
/// symbolic scene's points (FieldMismatch otherwise).
bool single_parameter_check(const std::vector<HomTriple>& returned, const Landing& landing);

struct DualRoundTrip {
  std::vector<HomTriple> dual_points;
  MLines m_lines;
  std::vector<HomTriple> second_stage_lines;
  std::vector<HomTriple> returned_points;  // M*_{C,sigma}
  Landing landing;
};

DualRoundTrip run_round_trip(const PappusScene& scene,
                             const SecondStageRoles& roles = default_second_stage_roles());

/// Equality as sets up to projective equality.
bool same_projective_set(const std::vector<HomTriple>& x, const std::vector<HomTriple>& y);

/// All role assignments (either parity on the A side, any order within each
/// triple: 72 candidates) whose returned points equal `expected` sigma by sigma.
std::vector<SecondStageRoles> infer_indexing(const std::vector<HomTriple>& dual_pts,
                                             const std::vector<HomTriple>& expected);

}  // namespace pappus
