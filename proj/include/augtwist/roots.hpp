#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace augtwist {

/// A scalar function that may be undefined (empty) at some inputs, e.g. a
/// closure residual outside the feasible region of a vertex.
using PartialFn = std::function<std::optional<double>(double)>;

struct BrentOptions {
  double xtol = 1e-15;
  double ftol = 1e-15;
  int max_iterations = 200;
};

/// Brent's bracketing root finder on [a, b] with f(a), f(b) of opposite sign.
/// Returns empty if the bracket is invalid or f is undefined somewhere the
/// iteration probes.
std::optional<double> brent_root(const PartialFn& f, double a, double b, BrentOptions opts = {});

struct ScanOptions {
  int samples = 2048;                ///< grid intervals over [lo, hi]
  double max_jump = 3.14159265358979;  ///< larger steps are wrap-arounds, not crossings
  double touch_threshold = 2e-2;     ///< |f| below which a local minimum is examined
  double accept = 1e-10;             ///< |f(root)| bound for touching roots
  double exact_zero = 1e-14;         ///< grid samples with |f| below this are roots
  double derivative_step = 1e-4;
  double merge_distance = 1e-9;
  double split_distance = 1e-6;      ///< closer root pairs are tested for a noisy double root
};

/// Finds the roots of f on [lo, hi] by dense sampling. Sign changes are
/// polished with brent_root. Local minima of |f| are polished by bracketing
/// the zero of f′; this recovers double roots, and pairs of roots that share
/// one grid cell.
std::vector<double> scan_roots(const PartialFn& f, double lo, double hi, const ScanOptions& opts = {});

}  // namespace augtwist
