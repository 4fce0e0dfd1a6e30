#include "lcslab/rng.hpp"

namespace lcslab {

std::uint64_t derive_key(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = mix64(seed ^ (0xd1b54a32d192ed03ULL * (path.size() + 1)));
  for (std::uint64_t v : path) h = mix64(h ^ mix64(v + 0x632be59bd9b4e019ULL));
  return h;
}

}  // namespace lcslab
