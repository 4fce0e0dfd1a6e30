#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace lcslab {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Derives a child stream key from a master seed and an index path, e.g.
/// (seed, {trial, sequence}). Paths of different length never alias by
/// construction because the length is folded in first.
std::uint64_t derive_key(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept;

/// Stream domains, so dataset and trial streams with equal indices differ.
enum class StreamDomain : std::uint64_t {
  kDataset = 0x6461746173657431ULL,
  kTrial = 0x747269616c733031ULL,
  kSweep = 0x7377656570303031ULL,
};

/// Counter-based generator: output i of stream `key` is mix64(key + (i+1)*phi).
/// The whole state is (key, counter), so any output is addressable without
/// replaying the stream, and results are identical on every platform.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    counter_ += kGolden;
    return mix64(key_ + counter_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t key() const noexcept { return key_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace lcslab
