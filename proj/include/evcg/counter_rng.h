// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVCG_COUNTER_RNG_H_
#define EVCG_COUNTER_RNG_H_

#include <cstdint>

namespace evcg {

// Stateless counter-based generator: every draw is a pure function of
// (seed, stream, counter). Draws for different buyers or samples do not depend
// on evaluation order, so parallel sampling reproduces sequential sampling.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t Bits(std::uint64_t stream, std::uint64_t counter) const {
    std::uint64_t h = Mix(seed_ ^ 0x6a09e667f3bcc909ULL);
    h = Mix(h ^ (stream * 0x9e3779b97f4a7c15ULL));
    h = Mix(h ^ (counter * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL));
    return h;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform(std::uint64_t stream, std::uint64_t counter) const {
    return static_cast<double>(Bits(stream, counter) >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound, std::uint64_t stream,
                      std::uint64_t counter) const {
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(Bits(stream, counter)) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
  }

  std::uint64_t seed() const { return seed_; }

  // Packs a (tag, index) pair into one stream id.
  static constexpr std::uint64_t Stream(std::uint64_t tag, std::uint64_t index) {
    return (tag << 48) ^ index;
  }

 private:
  // splitmix64 finalizer.
  static std::uint64_t Mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
};

}  // namespace evcg

#endif  // EVCG_COUNTER_RNG_H_
