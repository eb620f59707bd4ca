#include "lvhg/stable.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "lvhg/quadrature.hpp"

namespace lvhg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDirTol = 1e-12;

bool same_direction(const Vec& a, const Vec& b) {
  return (a - b).inf_norm() <= kDirTol;
}

}  // namespace

SpectralMeasure::SpectralMeasure(int dim, std::vector<SpectralAtom> atoms)
    : dim_(dim), atoms_(std::move(atoms)) {
  if (dim < 1 || dim > kMaxDim)
    throw ConfigError("spectral measure dimension must be 1, 2 or 3");
  if (atoms_.empty()) throw ConfigError("spectral measure has no atoms");
  for (auto& a : atoms_) {
    if (a.dir.d != dim)
      throw ConfigError("spectral atom direction has wrong dimension");
    double n = a.dir.norm();
    if (n < 1e-14) throw ConfigError("spectral atom direction is zero");
    a.dir *= 1.0 / n;
    if (!(a.weight > 0.0))
      throw ConfigError("spectral atom weight must be positive");
  }
}

double SpectralMeasure::total_weight() const {
  double s = 0;
  for (const auto& a : atoms_) s += a.weight;
  return s;
}

SpectralMeasure SpectralMeasure::merged() const {
  std::vector<SpectralAtom> out;
  for (const auto& a : atoms_) {
    bool found = false;
    for (auto& o : out)
      if (same_direction(a.dir, o.dir)) {
        o.weight += a.weight;
        found = true;
        break;
      }
    if (!found) out.push_back(a);
  }
  return SpectralMeasure(dim_, std::move(out));
}

// ---------------------------------------------------------------------------
// Normalization constant

namespace {

// Core int_0^delta by the alternating series of 1-cos; exact to roundoff.
double norm_const_core(double alpha, double delta) {
  double sum = 0;
  double fact = 1.0; // (2k)!
  for (int k = 1; k <= 40; ++k) {
    fact *= (2.0 * k - 1.0) * (2.0 * k);
    double p = 2.0 * k - alpha;
    double term = std::pow(delta, p) / (fact * p);
    if (k % 2 == 1)
      sum += term;
    else
      sum -= term;
    if (term < 1e-18 * std::max(sum, 1.0)) break;
  }
  return sum;
}

double norm_const_compute(double alpha) {
  const double delta = 0.5;
  double core = norm_const_core(alpha, delta);
  double mid = integrate(
      [&](double u) { return (1.0 - std::cos(u)) * std::pow(u, -1.0 - alpha); },
      delta, 1.0, 1e-13);
  // Tail: int_1^inf (1-cos u) u^{-1-a} = 1/a - I_cos. Two integrations by
  // parts leave a smooth absolutely convergent remainder.
  double j = integrate_paneled(
      [&](double u) { return std::cos(u) * std::pow(u, -3.0 - alpha); }, 1.0,
      1000.0, kPi, 1e-13);
  double icos = -std::sin(1.0) + (1.0 + alpha) * (std::cos(1.0) -
                                                  (2.0 + alpha) * j);
  return core + mid + 1.0 / alpha - icos;
}

}  // namespace

double stable_normalization(const StabilityIndex& alpha) {
  static std::map<double, double> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(alpha.value());
  if (it != cache.end()) return it->second;
  double c = norm_const_compute(alpha.value());
  cache.emplace(alpha.value(), c);
  return c;
}

// ---------------------------------------------------------------------------
// Validation (A2, A3)

namespace {

double sphere_integrand(const Vec& v, const SpectralMeasure& mu,
                        double alpha) {
  double s = 0;
  for (const auto& a : mu.atoms())
    s += a.weight * std::pow(std::abs(v.dot(a.dir)), alpha);
  return s;
}

void check_symmetry(const SpectralMeasure& mu) {
  SpectralMeasure m = mu.merged();
  const auto& atoms = m.atoms();
  std::vector<bool> used(atoms.size(), false);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (used[i]) continue;
    bool matched = false;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (j == i || used[j]) continue;
      if (same_direction(atoms[i].dir, -atoms[j].dir)) {
        if (std::abs(atoms[i].weight - atoms[j].weight) >
            1e-12 * std::max(1.0, atoms[i].weight))
          throw AsymmetricMeasure(
              "antipodal atoms have mismatched weights (A2)");
        used[i] = used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched)
      throw AsymmetricMeasure("atom has no antipodal partner (A2)");
  }
}

struct SphereExtremum {
  Vec arg;
  double value;
};

// Deterministic coarse scan plus shrinking local refinement around each
// extremum; resolves minima down to ~1e-10 in direction so that measures
// concentrated on a proper subspace report c1 below the degeneracy cutoff.
std::pair<SphereExtremum, SphereExtremum> scan_sphere(
    const SpectralMeasure& mu, double alpha) {
  int d = mu.dim();
  auto eval = [&](const Vec& v) { return sphere_integrand(v, mu, alpha); };

  SphereExtremum lo{Vec::unit(d, 0), 0}, hi{Vec::unit(d, 0), 0};
  lo.value = hi.value = eval(lo.arg);

  auto consider = [&](const Vec& v) {
    double g = eval(v);
    if (g < lo.value) lo = {v, g};
    if (g > hi.value) hi = {v, g};
  };

  if (d == 1) return {lo, hi};

  if (d == 2) {
    const int n = 16384;
    for (int i = 1; i < n; ++i) {
      double t = 2.0 * kPi * i / n;
      consider(Vec{std::cos(t), std::sin(t)});
    }
    for (SphereExtremum* ex : {&lo, &hi}) {
      double center = std::atan2(ex->arg[1], ex->arg[0]);
      double w = 2.0 * (2.0 * kPi / n);
      while (w > 1e-11) {
        double best_t = center;
        for (int i = 0; i <= 512; ++i) {
          double t = center - w + 2.0 * w * i / 512;
          Vec v{std::cos(t), std::sin(t)};
          double g = eval(v);
          bool better = (ex == &lo) ? g < ex->value : g > ex->value;
          if (better) {
            *ex = {v, g};
            best_t = t;
          }
        }
        center = best_t;
        w /= 128.0;
      }
    }
    return {lo, hi};
  }

  // d == 3: Fibonacci lattice, then tangent-plane refinement.
  const int n = 20001;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / n;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double t = golden * i;
    consider(Vec{r * std::cos(t), r * std::sin(t), z});
  }
  for (SphereExtremum* ex : {&lo, &hi}) {
    double w = 3.0 * std::sqrt(4.0 * kPi / n);
    while (w > 1e-11) {
      Vec v0 = ex->arg;
      // orthonormal frame perpendicular to v0
      Vec u1 = std::abs(v0[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
      u1 = (u1 - v0.dot(u1) * v0).normalized();
      Vec u2{v0[1] * u1[2] - v0[2] * u1[1], v0[2] * u1[0] - v0[0] * u1[2],
             v0[0] * u1[1] - v0[1] * u1[0]};
      Vec best = v0;
      for (int i = 0; i <= 64; ++i)
        for (int j = 0; j <= 64; ++j) {
          double a = -w + 2.0 * w * i / 64, b = -w + 2.0 * w * j / 64;
          Vec v = (v0 + a * u1 + b * u2).normalized();
          double g = eval(v);
          bool better = (ex == &lo) ? g < ex->value : g > ex->value;
          if (better) {
            *ex = {v, g};
            best = v;
          }
        }
      w /= 16.0;
    }
  }
  return {lo, hi};
}

}  // namespace

NondegeneracyBounds validate(const SpectralMeasure& mu,
                             const StabilityIndex& alpha) {
  check_symmetry(mu);
  auto [lo, hi] = scan_sphere(mu, alpha.value());
  if (lo.value <= 1e-10)
    throw DegenerateSpectralMeasure(
        "spectral measure concentrated on a proper subspace (A3): min of the "
        "sphere integral is " +
        std::to_string(lo.value));
  return {lo.value, hi.value};
}

// ---------------------------------------------------------------------------
// Symbol and samplers

double levy_symbol(const Vec& xi, const SpectralMeasure& mu,
                   const StabilityIndex& alpha) {
  double c = stable_normalization(alpha);
  double s = 0;
  for (const auto& a : mu.atoms())
    s += a.weight * std::pow(std::abs(xi.dot(a.dir)), alpha.value());
  return -c * s;
}

double sample_stable_1d(const StabilityIndex& alpha, double scale,
                        RandomStream& rng) {
  double a = alpha.value();
  double u = rng.uniform(-0.5 * kPi, 0.5 * kPi);
  double e = rng.exponential();
  double x = std::sin(a * u) / std::pow(std::cos(u), 1.0 / a) *
             std::pow(std::cos((1.0 - a) * u) / e, (1.0 - a) / a);
  return scale * x;
}

std::vector<SpectralAtom> symmetric_pairs(const SpectralMeasure& mu) {
  SpectralMeasure m = mu.merged();
  const auto& atoms = m.atoms();
  std::vector<bool> used(atoms.size(), false);
  std::vector<SpectralAtom> pairs;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (used[i]) continue;
    bool matched = false;
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (used[j]) continue;
      if (same_direction(atoms[i].dir, -atoms[j].dir)) {
        if (std::abs(atoms[i].weight - atoms[j].weight) >
            1e-12 * std::max(1.0, atoms[i].weight))
          throw AsymmetricMeasure(
              "antipodal atoms have mismatched weights (A2)");
        used[i] = used[j] = true;
        // canonical representative: first nonzero component positive
        Vec dir = atoms[i].dir;
        for (int k = 0; k < dir.d; ++k) {
          if (dir[k] > kDirTol) break;
          if (dir[k] < -kDirTol) {
            dir = -dir;
            break;
          }
        }
        pairs.push_back({dir, atoms[i].weight});
        matched = true;
        break;
      }
    }
    if (!matched)
      throw AsymmetricMeasure("atom has no antipodal partner (A2)");
  }
  return pairs;
}

IncrementSampler::IncrementSampler(const SpectralMeasure& mu,
                                   const StabilityIndex& alpha)
    : dim_(mu.dim()), inv_alpha_(1.0 / alpha.value()), alpha_(alpha) {
  double c = stable_normalization(alpha);
  for (const auto& p : symmetric_pairs(mu)) {
    dirs_.push_back(p.dir);
    coef_.push_back(std::pow(2.0 * p.weight * c, inv_alpha_));
  }
}

double IncrementSampler::step_scale_for(double dt) const {
  return std::pow(dt, inv_alpha_);
}

Vec IncrementSampler::sample(double step_scale, RandomStream& rng) const {
  Vec x(dim_);
  for (std::size_t k = 0; k < dirs_.size(); ++k) {
    double s = sample_stable_1d(alpha_, coef_[k] * step_scale, rng);
    x += s * dirs_[k];
  }
  return x;
}

Vec sample_increment(double dt, const SpectralMeasure& mu,
                     const StabilityIndex& alpha, RandomStream& rng) {
  IncrementSampler sampler(mu, alpha);
  return sampler.sample(sampler.step_scale_for(dt), rng);
}

LargeJumpSampler::LargeJumpSampler(const SpectralMeasure& mu,
                                   const StabilityIndex& alpha, double eps)
    : alpha_(alpha), eps_(eps), inv_alpha_(1.0 / alpha.value()) {
  if (!(eps > 0)) throw ConfigError("jump truncation radius must be positive");
  double total = mu.total_weight();
  rate_ = total * std::pow(eps, -alpha.value()) / alpha.value();
  double acc = 0;
  for (const auto& a : mu.atoms()) {
    dirs_.push_back(a.dir);
    acc += a.weight / total;
    cum_weight_.push_back(acc);
  }
  cum_weight_.back() = 1.0;
}

std::vector<JumpEvent> LargeJumpSampler::sample(double t0, double t1,
                                                RandomStream& rng) const {
  std::vector<JumpEvent> events;
  double t = t0;
  while (true) {
    t += rng.exponential() / rate_;
    if (t >= t1) break;
    double u = rng.u01();
    std::size_t k =
        std::lower_bound(cum_weight_.begin(), cum_weight_.end(), u) -
        cum_weight_.begin();
    double r = eps_ * std::pow(rng.u01(), -inv_alpha_);
    events.push_back({t, r * dirs_[k]});
  }
  return events;
}

std::vector<JumpEvent> sample_large_jumps(double t0, double t1, double eps,
                                          const SpectralMeasure& mu,
                                          const StabilityIndex& alpha,
                                          RandomStream& rng) {
  if (!(t1 > t0)) throw ConfigError("jump window must satisfy t1 > t0");
  return LargeJumpSampler(mu, alpha, eps).sample(t0, t1, rng);
}

SpectralMeasure pushforward(const SpectralMeasure& mu,
                            const StabilityIndex& alpha, const Mat& F) {
  auto [smax, smin] = F.singular_value_range();
  if (!(smin > 0) || smax / smin >= 1e12)
    throw SingularMatrix("pushforward matrix is singular or near-singular");
  std::vector<SpectralAtom> atoms;
  atoms.reserve(mu.atoms().size());
  for (const auto& a : mu.atoms()) {
    Vec fy = F * a.dir;
    double n = fy.norm();
    atoms.push_back({fy * (1.0 / n), a.weight * std::pow(n, alpha.value())});
  }
  return SpectralMeasure(mu.dim(), std::move(atoms));
}

}  // namespace lvhg
