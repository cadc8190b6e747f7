#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "d2tk/plane_graph.hpp"

namespace d2tk {

// splitmix64: state += 0x9E3779B97F4A7C15, then the output is mixed with
// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (shifts 30, 27, 31).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next();
  // Uniform in [0, n) by modulo reduction.
  uint64_t below(uint64_t n) { return next() % n; }
  // Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

uint64_t mix_seed(uint64_t seed, uint64_t salt);

enum class GenMode { Triangulation, Subsampled, Fixture };

struct GenSpec {
  uint64_t seed = 1;
  int n_target = 60;
  GenMode mode = GenMode::Triangulation;
  std::string fixture;
  std::vector<int> delta_filter;  // empty accepts every Δ
  double edge_keep_probability = 1.0;
  int flips = -1;  // -1 means 10·m
  int max_attempts = 10000;
};

GenMode parse_gen_mode(const std::string& name);

PlaneGraph random_triangulation(const GenSpec& spec);
PlaneGraph subsample(const PlaneGraph& g, const GenSpec& spec);
// Mode dispatch plus the Δ filter; rejected draws continue the same stream.
PlaneGraph generate(const GenSpec& spec);

PlaneGraph fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace d2tk
