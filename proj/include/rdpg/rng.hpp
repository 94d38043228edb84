#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace rdpg {

// 64-bit finalizer from the splitmix64 generator. Used both as the output
// mixer of SplitMix64 and as the mixing step of derive_seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seed derivation: fold each token into the master seed with the splitmix64
// finalizer. Streams derived from distinct token sequences are independent,
// so adding experiments or sweep points never perturbs existing ones.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> tokens) {
  std::uint64_t h = mix64(master + 0x9e3779b97f4a7c15ULL);
  for (std::uint64_t t : tokens) h = mix64(h ^ t);
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view name,
                                 std::uint64_t a, std::uint64_t b) {
  return derive_seed(master, {fnv1a64(name), a, b});
}

// Counter-based splitmix64 stream. The i-th output is a pure function of
// (seed, i), so draws can be indexed directly without generating the prefix.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  // i-th value of the stream started at `seed` (i starting at 0).
  static std::uint64_t at(std::uint64_t seed, std::uint64_t i) {
    return mix64(seed + (i + 1) * kGamma);
  }

  // Uniform double in [0, 1) with 53 random bits.
  static double to_unit_double(std::uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix64(state_);
  }

  double next_double() { return to_unit_double(next_u64()); }

  // Uniform in (0, 1]; safe as a log() argument.
  double next_double_open0();

  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double next_normal();

  // Gamma(shape, 1) via Marsaglia-Tsang squeeze, with the boost
  // Gamma(a) = Gamma(a+1) * U^{1/a} for shape < 1.
  double next_gamma(double shape);

  // Dirichlet(alpha) as normalized independent Gamma(alpha_i, 1) draws.
  std::vector<double> next_dirichlet(const std::vector<double>& alpha);

 private:
  std::uint64_t state_;
  double normal_spare_ = 0.0;
  bool has_normal_spare_ = false;
};

}  // namespace rdpg
