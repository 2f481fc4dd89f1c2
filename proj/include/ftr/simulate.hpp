#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ftr/composite.hpp"
#include "ftr/params.hpp"

namespace ftr::mcsim {

/// Library-wide default seed.
inline constexpr std::uint64_t kDefaultSeed = 0x5EEDF720ULL;

/// Sampling run configuration. Substream partitioning is a deterministic
/// function of (seed, stream_count): stream i owns a contiguous block of the
/// output, so thread scheduling cannot change the sample set.
struct SimConfig {
  std::uint64_t sample_count;
  std::uint64_t seed = kDefaultSeed;
  unsigned stream_count = 4;

  SimConfig(std::uint64_t count, std::uint64_t seed_in = kDefaultSeed,
            unsigned streams = 4)
      : sample_count(count), seed(seed_in), stream_count(streams) {
    if (sample_count < 1)
      throw std::invalid_argument("SimConfig: sample_count must be >= 1");
    if (stream_count < 1)
      throw std::invalid_argument("SimConfig: stream_count must be >= 1");
  }
};

/// Specular amplitudes recovered from (K, delta, sigma^2), V1 >= V2 >= 0.
struct SpecularPair {
  double v1;
  double v2;
};

/// Sorted sample set with the summary statistics the validation suites need.
class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::vector<double> samples);

  const std::vector<double>& samples() const { return samples_; }
  std::size_t count() const { return samples_.size(); }
  double mean() const;
  double moment(int order) const;  // sample mean of x^order
  double ecdf(double x) const;     // fraction of samples <= x

 private:
  std::vector<double> samples_;
};

/// Splittable generator: SplitMix64 streams with substream keys derived by
/// remixing (seed, stream index). Sequential within a substream, independent
/// across substreams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform01();     // [0, 1)
  double uniform_open();  // (0, 1)
  double normal();        // standard normal (Box-Muller)
  double gamma(double shape);  // unit scale, any shape > 0 (Marsaglia-Tsang)

 private:
  std::uint64_t state_;
};

SplitMix64 substream_engine(std::uint64_t seed, std::uint64_t stream_index);

/// Inverts K = (V1^2+V2^2)/(2 sigma^2) and delta = 2 V1 V2/(V1^2+V2^2):
/// with S = 2 sigma^2 K, V1,2 = sqrt(S (1 +- sqrt(1-delta^2)) / 2).
SpecularPair solve_specular_amplitudes(double k, double delta, double sigma2);

/// Draws of the instantaneous power |V|^2 of the two-ray construction:
/// ray amplitudes share a single Gamma fluctuation per sample, phases are
/// uniform, and the diffuse part is complex Gaussian.
EmpiricalDistribution sample_ftr_power(const channel::FtrParams& p, const SimConfig& cfg);

/// Draws of Z = z_bar * G * V with G inverse-gamma (unit mean) and V an FTR
/// power draw at unit mean power.
EmpiricalDistribution sample_composite(const composite::CompositeParams& c,
                                       const SimConfig& cfg);

/// Kolmogorov-Smirnov distance: sup over sample points of |ECDF - cdf|, with
/// the ECDF taken at its value i/n at the i-th order statistic. (Evaluating
/// at the step's own level keeps the distance of an ECDF against itself at
/// zero; the difference from the left-limit variant is at most 1/n.)
double ks_distance(const EmpiricalDistribution& e,
                   const std::function<double(double)>& cdf);

}  // namespace ftr::mcsim
