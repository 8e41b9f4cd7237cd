#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pappus/bipoly.hpp"
#include "pappus/scene.hpp"

namespace pappus {

/// poly(a0, b0) = 0 iff S lies on L_{C,sigma} at that specialization.
struct GlueCondition {
  Perm3 sigma;
  BiPoly poly;
};

/// Derived by substituting S = (1:1:0) into the symbolic L_{C,sigma}; indexed
/// like Perm3::all(), each normalized to a primitive integer polynomial.
const std::vector<GlueCondition>& glue_conditions();

/// p = c q for some nonzero rational c.
bool proportional_over_q(const BiPoly& p, const BiPoly& q);

/// The sigma whose glue condition vanishes at (a0, b0), in Perm3::all() order.
std::vector<Perm3> vanishing_glue(const BigRational& a0, const BigRational& b0);

/// [A1,A2,A3,S].
Scalar a_line_cross_ratio(const PappusScene& scene);
/// [B_s(1),B_s(2),B_s(3),S] for every sigma, indexed like Perm3::all().
std::vector<Scalar> cross_ratio_table(const PappusScene& scene);

bool s_on_pappus_line(const PappusScene& scene, const Perm3& sigma);

struct SIncidence {
  bool s_on_line = false;
  bool ratios_equal = false;  // [A1,A2,A3,S] == [B_s(1),B_s(2),B_s(3),S]

  bool agree() const { return s_on_line == ratios_equal; }
};

SIncidence s_incidence_theorem_check(const PappusScene& scene, const Perm3& sigma);

/// [C_{1,s},C_{2,s},C_{3,s},S]. Throws SNotOnLine unless S lies on L_{C,s}.
Scalar c_line_cross_ratio(const PappusScene& scene, const Perm3& sigma);

/// The values -1, 1/2, 2 in table order.
const std::array<BigRational, 3>& harmonic_values();

/// Keyed by (a, b) over {-1, 1/2, 2}^2: the sigma whose Pappus lines pass through S.
using SPairsTable = std::map<std::pair<BigRational, BigRational>, std::vector<Perm3>>;

SPairsTable s_pairs_table();

struct RegularityResult {
  bool right = true;  // {s1, s2} -> {s1 t3^2, s2 t3^2}
  bool down = true;   // {s1, s2} -> {s1 t3^2, s2 t3} for some order of the pair
  std::vector<std::string> failures;

  bool ok() const { return right && down; }
};

RegularityResult table3_regularity_check(const SPairsTable& table);

struct OverlapReport {
  Scalar a;
  Scalar b;
  bool even_overlap = false;   // L_{C,id} = L_{C,t3} = L_{C,t3^2}
  bool odd_overlap = false;    // L_{C,t2} = L_{C,t2t3} = L_{C,t2t3^2}
  bool even_distinct = false;  // no two even lines agree
  bool odd_distinct = false;

  /// Exactly one parity class collapses and the other stays three distinct lines.
  bool exactly_one() const { return (even_overlap && odd_distinct) || (odd_overlap && even_distinct); }
  /// "even", "odd", "none" or "both".
  std::string overlapping_class() const;
};

/// Pairwise proportionality of the Pappus lines within each parity class.
/// Throws DegenerateParameters only for a, b in {0, 1}.
OverlapReport overlap_check(const Scalar& a0, const Scalar& b0 = Scalar::omega());

struct SuperReport {
  BigRational a;
  BigRational b;
  bool is_super = false;     // i) returned points are the initial points
  bool pair_through_s = false;  // ii)
  bool all_harmonic = false;    // iii)
  std::optional<BigRational> a_class;
  std::optional<BigRational> b_class;
  std::array<std::optional<Perm3>, 3> a_matching;  // A_i = M*_{sigma}
  std::array<std::optional<Perm3>, 3> b_matching;  // B_j = M*_{sigma}
  std::vector<Perm3> s_lines;
  std::array<bool, 3> harmonic_verdicts{};  // A-, B-, C-quadruple
  Scalar a_ratio;                           // [A1,A2,A3,S]
  Scalar b_ratio;                           // [B1,B2,B3,S]
  std::vector<std::pair<Perm3, Scalar>> c_ratios;  // per sigma in s_lines

  bool clauses_agree() const { return is_super == pair_through_s && pair_through_s == all_harmonic; }
};

SuperReport super_report(const BigRational& a0, const BigRational& b0);

}  // namespace pappus
