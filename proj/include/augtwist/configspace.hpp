#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "augtwist/angle.hpp"
#include "augtwist/configuration.hpp"
#include "augtwist/loopsolver.hpp"

namespace augtwist {

/// Which family of loop roots a mode follows. FoldLine is the straight
/// fold along the κ1–ζ–κ2 line with every other crease flat.
enum class Track { A, B, C, FoldLine };

enum class Classification { NonDegenerate, DegenerateZetaZero, DisconnectedFromOrigin, FoldInHalf };

std::string_view track_name(Track t);
std::string_view classification_name(Classification c);

struct FoldingMode {
  CaseSpec case_spec;  ///< unused for FoldLine
  Track track = Track::A;
  int variant = 0;     ///< index among C points of a mixed case, by φ1 at the seed
  int direction = 1;   ///< sign of u1 (of ζ for FoldLine) along the trace
  Classification classification = Classification::NonDegenerate;

  std::string name() const;
};

struct TraceCurve {
  FoldingMode mode;
  std::vector<Configuration> samples;
  bool reaches_origin = false;
  bool reaches_flat = false;   ///< last sample is a flat-folded state
  std::string stop_reason;     ///< empty when the whole requested range was covered
  double nominal_step = 0.0;
};

struct TraceOptions {
  double u1_from = 0.0;
  double u1_to = kPi;
  double step = 0.02;          ///< target max-norm change between samples
  std::vector<double> stops;   ///< u1 values that must appear as samples
  int max_samples = 200000;
};

/// All thirteen angles at a loop root. Throws std::invalid_argument if a
/// vertex is infeasible or the closures exceed tol.
Configuration assemble(double u1, double zeta, const CaseSpec& c, BranchPair b, double tol = 1e-9);
std::optional<Configuration> try_assemble(double u1, double zeta, const CaseSpec& c, BranchPair b,
                                          double tol = 1e-9);

/// The loop root a mode passes through at u1, if any.
std::optional<LoopRoot> seed_root(const FoldingMode& m, double u1);

/// Continuation in u1 between u1_from and u1_to (same sign, not both 0).
/// Endpoints at 0 or ±π are singular; they are approached to within 1e−6
/// (origin) or 1e−9 (±π), with steps halving towards them, and then closed by the exact flat (or unfolded) state when that state
/// is valid and within 1e−3 of the last sample.
TraceCurve trace_mode(const FoldingMode& m, const TraceOptions& opts);

/// trace_mode over the mode's whole half-range: u1 from 0 to ±π, or ζ from
/// 0 to ±π for FoldLine.
TraceCurve full_trace(const FoldingMode& m, double step = 0.02);

/// Case 2: A from the origin to the point where the A and B laws meet,
/// then B to the flat state with ζ = 0.
struct HybridTrace {
  TraceCurve curve;
  double switch_u1 = 0.0;
  double switch_zeta = 0.0;
  std::size_t switch_index = 0;  ///< sample at the switch point
};
HybridTrace hybrid_iso_area_trace(double step = 0.02);

/// ζ where y = −2·atan((√2/2)tan(ζ/2)) meets y = −2·atan((2+√2)cot(ζ/2)).
double hybrid_switch_zeta();

/// Extends a trace ending at u1 = ±π along the flat family at that u1,
/// where the four central-square creases stay at ±π while ζ runs to 0.
/// Only valid states are appended.
void append_flat_opening(TraceCurve& t, double step = 0.02);

/// Origin test: continue the mode down to u1 = 1e−4 and 5e−5 and
/// extrapolate the max-norm linearly to u1 = 0.
struct OriginTest {
  double norm_coarse = 0.0;  ///< max-norm at u1 = 1e−4
  double norm_fine = 0.0;    ///< at 5e−5
  double extrapolated = 0.0;
  bool connected = false;
};
OriginTest origin_connectivity(const FoldingMode& m);

/// A, B and C modes of every case (direction +1) plus the fold line,
/// classified.
std::vector<FoldingMode> enumerate_origin_modes();

struct DofReport {
  int kernel_dim = 0;
  bool singular = false;  ///< kernel_dim > 1
  std::vector<double> singular_values;
};

/// Kernel dimension of the 12×13 Jacobian of all vertex closure residuals.
DofReport tangent_dof_report(const Configuration& c);
int tangent_dof(const Configuration& c);

/// Every angle moved to the nearest of 0, +π, −π.
Configuration snap_flat(const Configuration& c);

}  // namespace augtwist
