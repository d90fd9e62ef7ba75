#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "augtwist/degree4.hpp"
#include "augtwist/degree5.hpp"

namespace augtwist {

/// Degree-4 modes of v1 and v2. Case 1 = (1,1), case 2 = (2,2),
/// case 3a = (1,2), case 3b = (2,1).
struct CaseSpec {
  Mode v1 = Mode::One;
  Mode v2 = Mode::One;

  /// Accepts "1", "2", "3a", "3b". Throws std::invalid_argument otherwise.
  static CaseSpec parse(std::string_view name);
  static std::vector<CaseSpec> all();

  std::string name() const;
  bool mixed() const { return v1 != v2; }

  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

enum class PointLabel { A, B, C };

std::string_view label_name(PointLabel label);

struct BranchPair {
  Branch v3 = Branch::Plus;
  Branch v4 = Branch::Plus;
  friend bool operator==(const BranchPair&, const BranchPair&) = default;
};

std::vector<BranchPair> all_branch_pairs();

/// u2 from u1 by v1's mode relation.
double u2_from_u1(double u1, Mode v1_mode);

/// φ1 demanded by v2's mode relation for a given φ2.
double phi1_demanded(double phi2, Mode v2_mode);

/// The two side angles a branch pair produces at (u1, ζ): φ1 from v3 and
/// φ2 from v4 (driven by u2). Empty when either vertex is infeasible.
struct LoopSides {
  double u2 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
};
std::optional<LoopSides> loop_sides(double u1, double zeta, const CaseSpec& c, BranchPair b);

/// φ1 − φ1_demanded(φ2) on the circle.
std::optional<double> loop_residual(double u1, double zeta, const CaseSpec& c, BranchPair b);

struct LoopRoot {
  double u1 = 0.0;
  double zeta = 0.0;
  BranchPair branches;
  double residual = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  bool branch_degenerate = false;  ///< ψ at v3 or v4 is 0 or ±π here
};

struct IntersectionPoint {
  PointLabel label = PointLabel::A;
  LoopRoot root;
};

struct IntersectionReport {
  std::vector<IntersectionPoint> points;  ///< sorted by label, then ζ
  std::vector<LoopRoot> anomalies;        ///< roots matching no curve law

  int count(PointLabel label) const;
};

/// Number of distinct C points per case: 1 for cases 1 and 2, 2 for 3a/3b.
int expected_c_count(const CaseSpec& c);

/// One A, one B, the expected C count and no anomalies.
bool is_complete(const IntersectionReport& r, const CaseSpec& c);

struct IntersectionOptions {
  int samples = 2048;
  double dedupe = 1e-7;
  double label_tolerance = 1e-6;
};

/// All loop-closing ζ in (−π, π] for fixed u1, over the four branch pairs,
/// deduplicated by configuration and labelled by curve law.
IntersectionReport find_intersections(double u1, const CaseSpec& c, const IntersectionOptions& opts = {});

/// Roots of the loop residual in ζ ∈ [lo, hi] for one branch pair.
std::vector<LoopRoot> loop_roots_in_zeta(double u1, double lo, double hi, const CaseSpec& c, BranchPair b,
                                         int samples);

/// Roots in u1 ∈ [lo, hi] at fixed ζ, for one branch pair.
std::vector<LoopRoot> loop_roots_in_u1(double zeta, double lo, double hi, const CaseSpec& c, BranchPair b,
                                       int samples);

/// ζ of the A point: tan(ζ/2) = (√2−2)·tan(u1/2) when v1 is in mode 1,
/// (√2+2)·tan(u1/2) when v1 is in mode 2.
double zeta_A_closed_form(double u1, const CaseSpec& c);

/// ζ of the B point: cot(ζ/2) = tan(u1/2)/√2, in every case.
double zeta_B_closed_form(double u1);

/// Trace-curve laws in the (ζ, y = φ1) plane. The B curve and the line
/// carrying B follow v2's mode; in cases 1 and 2 that line is the u2 line.
struct CurveLaws {
  std::function<double(double)> a_curve;  ///< y = −2·atan((√2/2)·tan(ζ/2))
  std::function<double(double)> b_curve;  ///< y = 2·atan(k·cot(ζ/2)), k = 2−√2 or −(2+√2); π at ζ = 0
  std::function<double(double)> u2_line;  ///< y = u2(u1), carries A
  std::function<double(double)> b_line;   ///< y = partner of u1 under v2's mode, carries B
  double c_zeta = 0.0;                    ///< C stays on ζ = 0
};

CurveLaws curve_laws(const CaseSpec& c);

}  // namespace augtwist
