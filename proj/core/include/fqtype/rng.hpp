#pragma once

#include <cstdint>
#include <span>

namespace fqtype {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) { return splitmix64(a ^ splitmix64(b)); }

/// Counter-based generator: output i is a pure function of (key, i), so
/// streams derived from the same key reproduce regardless of scheduling.
class KeyedRng {
 public:
  explicit KeyedRng(std::uint64_t key) : key_(key) {}
  KeyedRng(std::uint64_t seed, std::span<const std::uint32_t> words) : key_(splitmix64(seed)) {
    for (auto w : words) key_ = mix_key(key_, w);
  }

  std::uint64_t next() { return mix_key(key_, counter_++); }
  /// Uniform value in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }
  /// Random value at a given position without advancing the stream.
  std::uint64_t at(std::uint64_t index) const { return mix_key(key_, index); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace fqtype
