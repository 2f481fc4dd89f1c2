#include "ftr/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ftr::mcsim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double SplitMix64::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform_open() {
  return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
}

double SplitMix64::normal() {
  const double u1 = uniform_open();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double SplitMix64::gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("SplitMix64::gamma: shape must be > 0");
  if (shape < 1.0) {
    // Boost trick: Gamma(a) = Gamma(a+1) * U^{1/a}.
    return gamma(shape + 1.0) * std::pow(uniform_open(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

SplitMix64 substream_engine(std::uint64_t seed, std::uint64_t stream_index) {
  // Two finalizer rounds decorrelate adjacent stream keys.
  return SplitMix64(mix64(mix64(seed + kGolden * (stream_index + 1))));
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty())
    throw std::invalid_argument("EmpiricalDistribution: sample set must be non-empty");
  std::sort(samples_.begin(), samples_.end());
}

double EmpiricalDistribution::mean() const { return moment(1); }

double EmpiricalDistribution::moment(int order) const {
  long double acc = 0.0L;
  for (double v : samples_) acc += std::pow(v, order);
  return static_cast<double>(acc / samples_.size());
}

double EmpiricalDistribution::ecdf(double x) const {
  const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
  return static_cast<double>(it - samples_.begin()) / samples_.size();
}

SpecularPair solve_specular_amplitudes(double k, double delta, double sigma2) {
  if (!(k >= 0.0)) throw std::invalid_argument("solve_specular_amplitudes: K must be >= 0");
  if (!(delta >= 0.0 && delta <= 1.0))
    throw std::invalid_argument("solve_specular_amplitudes: delta must lie in [0, 1]");
  if (!(sigma2 > 0.0))
    throw std::invalid_argument("solve_specular_amplitudes: sigma^2 must be > 0");
  const double total = 2.0 * sigma2 * k;
  const double root = std::sqrt(std::max(0.0, 1.0 - delta * delta));
  return {std::sqrt(total * (1.0 + root) / 2.0), std::sqrt(total * (1.0 - root) / 2.0)};
}

namespace {

// One FTR power draw. The Gamma fluctuation is drawn once and multiplies
// both ray amplitudes.
struct FtrPowerSampler {
  double v1, v2, sigma, m;

  explicit FtrPowerSampler(const channel::FtrParams& p) {
    const SpecularPair pair = solve_specular_amplitudes(p.k(), p.delta(), p.sigma2());
    v1 = pair.v1;
    v2 = pair.v2;
    sigma = std::sqrt(p.sigma2());
    m = p.m();
  }

  double draw(SplitMix64& rng) const {
    const double zeta = rng.gamma(m) / m;  // unit mean
    const double phi1 = 2.0 * M_PI * rng.uniform01();
    const double phi2 = 2.0 * M_PI * rng.uniform01();
    const double x = sigma * rng.normal();
    const double y = sigma * rng.normal();
    const double amp = std::sqrt(zeta);
    const double re = amp * (v1 * std::cos(phi1) + v2 * std::cos(phi2)) + x;
    const double im = amp * (v1 * std::sin(phi1) + v2 * std::sin(phi2)) + y;
    return re * re + im * im;
  }
};

// Fills out[] by substream blocks; stream i generates a contiguous slice so
// the result is independent of worker scheduling.
void run_substreams(const SimConfig& cfg,
                    const std::function<double(SplitMix64&)>& draw,
                    std::vector<double>& out) {
  out.resize(cfg.sample_count);
  const std::uint64_t streams = cfg.stream_count;
  const std::uint64_t base = cfg.sample_count / streams;
  const std::uint64_t rem = cfg.sample_count % streams;

  auto run_stream = [&](std::uint64_t index) {
    const std::uint64_t begin = index * base + std::min<std::uint64_t>(index, rem);
    const std::uint64_t size = base + (index < rem ? 1 : 0);
    SplitMix64 rng = substream_engine(cfg.seed, index);
    for (std::uint64_t i = 0; i < size; ++i) out[begin + i] = draw(rng);
  };

  const unsigned workers =
      std::min<unsigned>(cfg.stream_count,
                         std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1 || streams == 1) {
    for (std::uint64_t i = 0; i < streams; ++i) run_stream(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::uint64_t i = w; i < streams; i += workers) run_stream(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace

EmpiricalDistribution sample_ftr_power(const channel::FtrParams& p, const SimConfig& cfg) {
  const FtrPowerSampler sampler(p);
  std::vector<double> samples;
  run_substreams(cfg, [&sampler](SplitMix64& rng) { return sampler.draw(rng); }, samples);
  return EmpiricalDistribution(std::move(samples));
}

EmpiricalDistribution sample_composite(const composite::CompositeParams& c,
                                       const SimConfig& cfg) {
  const FtrPowerSampler fading(c.fading());
  const double lambda = c.lambda();
  const double scale = c.shadow().scale();
  const double z_bar = c.z_bar();
  std::vector<double> samples;
  run_substreams(
      cfg,
      [&](SplitMix64& rng) {
        const double v = fading.draw(rng);
        const double g = scale / rng.gamma(lambda);  // unit-mean inverse gamma
        return z_bar * g * v;
      },
      samples);
  return EmpiricalDistribution(std::move(samples));
}

double ks_distance(const EmpiricalDistribution& e,
                   const std::function<double(double)>& cdf) {
  const std::vector<double>& xs = e.samples();
  const double n = static_cast<double>(xs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double gap = std::abs((i + 1) / n - cdf(xs[i]));
    if (gap > worst) worst = gap;
  }
  return worst;
}

}  // namespace ftr::mcsim
