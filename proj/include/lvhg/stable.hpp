#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lvhg/errors.hpp"
#include "lvhg/linalg.hpp"
#include "lvhg/rng.hpp"

namespace lvhg {

/// Stability index of the driving noise, restricted to (1,2).
class StabilityIndex {
 public:
  explicit StabilityIndex(double alpha) : alpha_(alpha) {
    if (!(alpha > 1.0) || !(alpha < 2.0))
      throw ConfigError("stability index must lie strictly in (1,2), got " +
                        std::to_string(alpha));
  }
  double value() const { return alpha_; }

 private:
  double alpha_;
};

struct SpectralAtom {
  Vec dir;       // unit vector
  double weight; // > 0
};

/// Finite atomic measure on the unit sphere; the directional part of the
/// jump measure. Directions are normalized at construction, weights must be
/// positive. Symmetry is checked by validate(), not here, so that asymmetric
/// inputs can be constructed and rejected with a proper diagnostic.
class SpectralMeasure {
 public:
  SpectralMeasure(int dim, std::vector<SpectralAtom> atoms);

  int dim() const { return dim_; }
  const std::vector<SpectralAtom>& atoms() const { return atoms_; }
  double total_weight() const;

  /// Coincident directions (within 1e-12) merged by weight addition.
  SpectralMeasure merged() const;

 private:
  int dim_;
  std::vector<SpectralAtom> atoms_;
};

/// Noise specification bundle used by the simulation and config layers.
struct NoiseSpec {
  StabilityIndex alpha;
  SpectralMeasure mu;
};

/// Bounds of v -> sum_k w_k |<v,phi_k>|^alpha over the unit sphere.
struct NondegeneracyBounds {
  double c1 = 0; // min
  double c2 = 0; // max
};

/// One large jump of the driving noise, before multiplication by sigma.
struct JumpEvent {
  double time = 0;
  Vec jump;
};

/// Normalization constant C_alpha = int_0^inf (1-cos u) u^{-1-alpha} du,
/// computed by adaptive quadrature to relative accuracy 1e-10 and cached
/// per alpha.
double stable_normalization(const StabilityIndex& alpha);

/// Checks measure symmetry and nondegeneracy; returns the sphere bounds.
/// Throws AsymmetricMeasure or DegenerateSpectralMeasure.
NondegeneracyBounds validate(const SpectralMeasure& mu,
                             const StabilityIndex& alpha);

/// Levy symbol psi(xi) = -C_alpha sum_k w_k |<xi,phi_k>|^alpha (real and
/// nonpositive for symmetric measures).
double levy_symbol(const Vec& xi, const SpectralMeasure& mu,
                   const StabilityIndex& alpha);

/// One draw of a symmetric alpha-stable variate with characteristic function
/// exp(-scale^alpha |xi|^alpha). Chambers-Mallows-Stuck; consumes exactly one
/// uniform on (-pi/2,pi/2) followed by one unit exponential.
double sample_stable_1d(const StabilityIndex& alpha, double scale,
                        RandomStream& rng);

/// Groups atoms of a symmetric measure into {phi,-phi} pairs; the returned
/// atom carries the one-sided weight and the representative direction (first
/// nonzero component positive). Throws AsymmetricMeasure if unpairable.
std::vector<SpectralAtom> symmetric_pairs(const SpectralMeasure& mu);

/// Increment sampler with precomputed pair decomposition. The draw is
/// sum_k phi_k * S_k with S_k one-dimensional stable of scale
/// (2 w_k C_alpha dt)^{1/alpha}, which reproduces exp(dt psi(xi)) exactly.
class IncrementSampler {
 public:
  IncrementSampler(const SpectralMeasure& mu, const StabilityIndex& alpha);

  /// step_scale = dt^{1/alpha}; precomputed by the caller once per step size.
  Vec sample(double step_scale, RandomStream& rng) const;

  double step_scale_for(double dt) const;
  int dim() const { return dim_; }

 private:
  int dim_;
  double inv_alpha_;
  StabilityIndex alpha_;
  std::vector<Vec> dirs_;
  std::vector<double> coef_; // (2 w_k C_alpha)^{1/alpha}
};

/// One draw of the noise increment over a step of length dt.
Vec sample_increment(double dt, const SpectralMeasure& mu,
                     const StabilityIndex& alpha, RandomStream& rng);

/// Jumps with |y| > eps on a time window, sampled at exact Poisson times.
class LargeJumpSampler {
 public:
  LargeJumpSampler(const SpectralMeasure& mu, const StabilityIndex& alpha,
                   double eps);

  /// Rate nu({|y|>eps}) = (sum_k w_k) eps^{-alpha} / alpha.
  double rate() const { return rate_; }

  /// Events sorted by time, radii Pareto(alpha) above eps.
  std::vector<JumpEvent> sample(double t0, double t1, RandomStream& rng) const;

 private:
  StabilityIndex alpha_;
  double eps_;
  double rate_;
  double inv_alpha_;
  std::vector<Vec> dirs_;
  std::vector<double> cum_weight_; // normalized cumulative atom weights
};

std::vector<JumpEvent> sample_large_jumps(double t0, double t1, double eps,
                                          const SpectralMeasure& mu,
                                          const StabilityIndex& alpha,
                                          RandomStream& rng);

/// Spectral measure of the pushforward of nu under y -> F y: each atom
/// (phi, w) maps to (F phi/|F phi|, w |F phi|^alpha). Atom count preserved.
/// Throws SingularMatrix if F has condition number >= 1e12.
SpectralMeasure pushforward(const SpectralMeasure& mu,
                            const StabilityIndex& alpha, const Mat& F);

}  // namespace lvhg
