#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace mlsh::numerics {

inline constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Named RNG streams. Every random consumer in the project draws from its own
// derived stream, so unrelated components never share a generator: worker
// count, update order, or extra diagnostics cannot shift anyone else's draws.
enum class Stream : uint64_t {
  SubPolicyInit = 1,
  MasterInit,
  Rollout,       // env resets + action noise, one stream per slot
  MasterSample,  // categorical sub-policy selection, one stream per slot
  Shuffle,       // minibatch index shuffling, one stream per update call
  TaskSample,
  Eval,
};

inline uint64_t derive_seed(uint64_t base, Stream stream,
                            std::initializer_list<uint64_t> parts = {}) {
  uint64_t h = splitmix64(base ^ (0x6d6c7368u + (static_cast<uint64_t>(stream) << 32)));
  for (uint64_t p : parts) h = splitmix64(h ^ p);
  return h;
}

// mt19937_64 with hand-rolled output mappings. The standard distribution
// classes are implementation-defined, so sampling goes through fixed
// constructions (53-bit uniforms, Box-Muller) to keep sequences stable.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal, Box-Muller with cached spare
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // uniform integer in [0, n), rejection sampled
  int uniform_int(int n) {
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t threshold = (-un) % un;
    for (;;) {
      const uint64_t r = next_u64();
      if (r >= threshold) return static_cast<int>(r % un);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Fisher-Yates
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    std::swap(v[i], v[rng.uniform_int(i + 1)]);
  }
}

}  // namespace mlsh::numerics
