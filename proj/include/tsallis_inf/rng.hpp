#pragma once

#include <cstdint>
#include <random>

namespace tsallis_inf {

using Rng = std::mt19937_64;

inline constexpr const char* kRngIdentifier = "mt19937_64/splitmix64-streams";

// SplitMix64 finalizer; a bijection on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seeds for one Monte Carlo repetition. The learner and the environment get
// independent streams so that changing one cannot perturb the other.
struct RepetitionSeeds {
  std::uint64_t rep_seed;
  std::uint64_t learner_seed;
  std::uint64_t environment_seed;
};

// Repetition r uses rep_seed = base_seed XOR mix64(r+1); distinct repetitions
// never share a stream.
inline RepetitionSeeds derive_repetition_seeds(std::uint64_t base_seed, int rep_index) {
  RepetitionSeeds s;
  s.rep_seed = base_seed ^ mix64(static_cast<std::uint64_t>(rep_index) + 1);
  s.learner_seed = mix64(s.rep_seed ^ 0x1ULL);
  s.environment_seed = mix64(s.rep_seed ^ 0x2ULL);
  return s;
}

}  // namespace tsallis_inf
