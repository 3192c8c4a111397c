#ifndef CHERN_RNG_HPP
#define CHERN_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace chern {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Every randomized operation draws from a named stream derived from the run
// seed, so reports are reproducible from (inputs, seed) alone.
inline uint64_t derive_seed(uint64_t run_seed, std::string_view stream, uint64_t k = 0) {
  return splitmix64(splitmix64(run_seed ^ fnv1a(stream)) + k);
}

// mt19937_64 output is pinned by the standard. We deliberately avoid
// std::uniform_int_distribution, whose mapping is implementation-defined;
// modulo reduction keeps byte-identical reports across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}

  uint64_t next() { return g_(); }

  uint64_t below(uint64_t n) { return n == 0 ? 0 : g_() % n; }

  // nonzero residue mod p
  int64_t nonzero_mod(int64_t p) { return 1 + static_cast<int64_t>(below(static_cast<uint64_t>(p - 1))); }

  int64_t mod(int64_t p) { return static_cast<int64_t>(below(static_cast<uint64_t>(p))); }

 private:
  std::mt19937_64 g_;
};

}  // namespace chern

#endif
