#include "augtwist/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace augtwist {

std::optional<double> brent_root(const PartialFn& f, double a, double b, BrentOptions opts) {
  auto fa_opt = f(a);
  auto fb_opt = f(b);
  if (!fa_opt || !fb_opt) return std::nullopt;
  double fa = *fa_opt, fb = *fb_opt;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) return std::nullopt;

  double c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * opts.xtol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || std::abs(fb) <= opts.ftol) return b;

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, or secant when only two points differ.
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
    auto next = f(b);
    if (!next) return std::nullopt;
    fb = *next;
  }
  return b;
}

namespace {

bool same_sign(double a, double b) { return (a > 0.0) == (b > 0.0); }

}  // namespace

std::vector<double> scan_roots(const PartialFn& f, double lo, double hi, const ScanOptions& opts) {
  const int n = opts.samples;
  std::vector<double> xs(n + 1);
  std::vector<std::optional<double>> fs(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / n;
    fs[i] = f(xs[i]);
  }

  std::vector<double> roots;
  auto accept_if_small = [&](double x) {
    auto fx = f(x);
    if (fx && std::abs(*fx) <= opts.accept) roots.push_back(x);
  };

  for (int i = 0; i <= n; ++i) {
    if (fs[i] && std::abs(*fs[i]) <= opts.exact_zero) roots.push_back(xs[i]);
  }

  for (int i = 0; i < n; ++i) {
    if (!fs[i] || !fs[i + 1]) continue;
    const double a = *fs[i], b = *fs[i + 1];
    if (std::abs(a) <= opts.exact_zero || std::abs(b) <= opts.exact_zero) continue;
    if (same_sign(a, b) || std::abs(a - b) > opts.max_jump) continue;
    if (auto r = brent_root(f, xs[i], xs[i + 1])) accept_if_small(*r);
  }

  // Zero of the central-difference slope, at steps h and h/2, Richardson
  // extrapolated: the O(h²) bias of the larger step is much bigger than the
  // rounding noise, so the combination beats either step alone.
  const double h = std::min(opts.derivative_step, 0.25 * (hi - lo) / n);
  auto stationary_point = [&](double a, double b) -> std::optional<double> {
    auto zero_of_slope = [&](double step) -> std::optional<double> {
      PartialFn slope = [&](double x) -> std::optional<double> {
        auto fp = f(x + step);
        auto fm = f(x - step);
        if (!fp || !fm || std::abs(*fp - *fm) > opts.max_jump) return std::nullopt;
        return (*fp - *fm) / (2.0 * step);
      };
      return brent_root(slope, a, b);
    };
    auto coarse = zero_of_slope(h);
    auto fine = zero_of_slope(0.5 * h);
    if (!coarse || !fine) return std::nullopt;
    return (4.0 * *fine - *coarse) / 3.0;
  };

  for (int i = 1; i < n; ++i) {
    if (!fs[i - 1] || !fs[i] || !fs[i + 1]) continue;
    const double left = *fs[i - 1], mid = *fs[i], right = *fs[i + 1];
    if (std::abs(mid) > opts.touch_threshold || std::abs(mid) <= opts.exact_zero) continue;
    if (!same_sign(left, mid) || !same_sign(mid, right)) continue;
    if (std::abs(mid) > std::abs(left) || std::abs(mid) > std::abs(right)) continue;

    auto xm = stationary_point(xs[i - 1], xs[i + 1]);
    if (!xm) continue;
    auto fm = f(*xm);
    if (!fm) continue;
    if (std::abs(*fm) <= opts.accept) {
      roots.push_back(*xm);
    } else if (!same_sign(*fm, mid)) {
      if (auto r = brent_root(f, xs[i - 1], *xm)) accept_if_small(*r);
      if (auto r = brent_root(f, *xm, xs[i + 1])) accept_if_small(*r);
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double r : roots) {
    if (merged.empty() || r - merged.back() > opts.merge_distance) merged.push_back(r);
  }

  // Rounding noise can push a double root slightly across zero, which
  // shows up as two sign changes a hair apart. Replace such a pair by the
  // stationary point between them.
  std::vector<double> out;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (i + 1 < merged.size() && merged[i + 1] - merged[i] < opts.split_distance) {
      const double pad = 10.0 * h;
      auto xm = stationary_point(merged[i] - pad, merged[i + 1] + pad);
      if (xm) {
        auto fm = f(*xm);
        if (fm && std::abs(*fm) <= opts.accept) {
          out.push_back(*xm);
          ++i;
          continue;
        }
      }
    }
    out.push_back(merged[i]);
  }
  return out;
}

}  // namespace augtwist
